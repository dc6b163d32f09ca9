#pragma once

// Line-delimited JSON records and report documents exchanged between CLI
// stages.

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stancenet/error.hpp"
#include "stancenet/eval.hpp"
#include "stancenet/pass1.hpp"
#include "stancenet/signed_network.hpp"
#include "stancenet/stance.hpp"
#include "stancenet/targets.hpp"

namespace stancenet::records {

using nlohmann::json;

inline void write_line(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Calls fn(json, line_number) for every non-blank line; malformed JSON is an
// input error carrying the line number.
template <typename Fn>
void for_each_record(std::istream& in, std::string_view what, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw input_error(std::string(what) + " line " + std::to_string(line_no) +
                        ": not a JSON object");
    try {
      fn(j, line_no);
    } catch (const json::exception& e) {
      throw input_error(std::string(what) + " line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
}

// --- targets ---------------------------------------------------------------

inline json to_json(const Target& t) {
  json j = {{"id", t.id},
            {"kind", to_string(t.kind)},
            {"surface_forms", std::vector<std::string>(t.surface_forms.begin(),
                                                       t.surface_forms.end())}};
  if (t.importance) j["importance"] = *t.importance;
  return j;
}

inline TargetKind target_kind_from(const std::string& s) {
  if (s == "key-phrase") return TargetKind::KeyPhrase;
  if (s == "key-player") return TargetKind::KeyPlayer;
  throw input_error("unknown target kind \"" + s + "\"");
}

inline Target target_from_json(const json& j) {
  Target t;
  t.id = j.at("id").get<std::string>();
  t.kind = target_kind_from(j.at("kind").get<std::string>());
  for (const auto& f : j.at("surface_forms")) t.surface_forms.insert(f.get<std::string>());
  if (t.surface_forms.empty()) throw input_error("target " + t.id + " has no surface forms");
  if (j.contains("importance")) t.importance = j.at("importance").get<std::uint64_t>();
  return t;
}

inline void write_targets(std::ostream& out, const TargetSet& set) {
  for (const auto* t : set.all()) write_line(out, to_json(*t));
}

inline TargetSet read_targets(std::istream& in) {
  TargetSet set;
  for_each_record(in, "targets", [&](const json& j, std::size_t) {
    auto t = target_from_json(j);
    if (set.find(t.id)) throw input_error("duplicate target id " + t.id);
    (t.kind == TargetKind::KeyPhrase ? set.key_phrases : set.key_players).push_back(std::move(t));
  });
  return set;
}

inline json to_json(const PhraseStats& s) {
  return {{"candidates", s.candidates},     {"selected", s.selected},
          {"max", s.max_importance},        {"mean", s.mean_importance},
          {"sd", s.sd_importance},          {"threshold", s.threshold}};
}

inline PhraseStats phrase_stats_from_json(const json& j) {
  PhraseStats s;
  s.candidates = j.at("candidates").get<std::size_t>();
  s.selected = j.at("selected").get<std::size_t>();
  s.max_importance = j.at("max").get<double>();
  s.mean_importance = j.at("mean").get<double>();
  s.sd_importance = j.at("sd").get<double>();
  s.threshold = j.at("threshold").get<double>();
  return s;
}

inline json target_stats_json(const TargetSet& set) {
  json j = to_json(set.phrase_stats);
  j["key_players"] = set.key_players.size();
  return j;
}

// --- assertions ------------------------------------------------------------

inline Sign sign_from(const std::string& s) {
  if (s == "+") return Sign::Pos;
  if (s == "-") return Sign::Neg;
  throw input_error("bad sign \"" + s + "\"");
}

inline json to_json(const PolarityAssertion& a) {
  return {{"from", a.from},   {"to", a.to},
          {"sign", to_string(a.sign)},
          {"doc", a.doc_id},  {"sentence", a.sentence_index},
          {"rule", to_string(a.rule)}};
}

inline PolarityAssertion assertion_from_json(const json& j) {
  PolarityAssertion a;
  a.from = j.at("from").get<std::string>();
  a.to = j.at("to").get<std::string>();
  a.sign = sign_from(j.at("sign").get<std::string>());
  a.doc_id = j.at("doc").get<std::string>();
  a.sentence_index = j.at("sentence").get<std::size_t>();
  auto rule = rule_tag_from(j.at("rule").get<std::string>());
  if (!rule) throw input_error("unknown rule tag " + j.at("rule").dump());
  a.rule = *rule;
  return a;
}

inline void write_assertions(std::ostream& out, const std::vector<PolarityAssertion>& as) {
  for (const auto& a : as) write_line(out, to_json(a));
}

inline std::vector<PolarityAssertion> read_assertions(std::istream& in) {
  std::vector<PolarityAssertion> out;
  for_each_record(in, "assertions",
                  [&](const json& j, std::size_t) { out.push_back(assertion_from_json(j)); });
  return out;
}

inline json pass1_stats_json(const Pass1Result& r) {
  json rules = json::object();
  for (auto tag : {RuleTag::Simple, RuleTag::Conj1, RuleTag::Conj2, RuleTag::Conj3,
                   RuleTag::Conj4, RuleTag::Conj5, RuleTag::Direct, RuleTag::Indirect}) {
    auto it = r.rule_counts.find(tag);
    rules[std::string(to_string(tag))] = it == r.rule_counts.end() ? 0 : it->second;
  }
  json forms = json::object();
  for (const auto& [form, n] : r.form_counts) forms[std::string(to_string(form))] = n;
  return {{"sentences", r.sentences},
          {"assertions", r.assertions.size()},
          {"rules", rules},
          {"forms", forms},
          {"diagnostics", r.diagnostics.size()}};
}

// --- network ---------------------------------------------------------------

inline json edge_json(const NodePair& key, const SignedEdge& e) {
  return {{"from", key.first},
          {"to", key.second},
          {"sign", to_string(e.sign)},
          {"support", {e.pos_count, e.neg_count}},
          {"hypothetical", e.hypothetical}};
}

inline void write_edges(std::ostream& out, const SignedNetwork& net) {
  for (const auto& [key, e] : net.edges) write_line(out, edge_json(key, e));
}

// Everything the classify stage needs: targets with surface forms and
// resolved polarity, event aliases, and the edges for reference.
inline json network_document(const SignedNetwork& net, const TargetSet& targets,
                             const WordSet& event_aliases) {
  json nodes = json::array();
  for (const auto* t : targets.all()) {
    json n = to_json(*t);
    if (auto p = net.polarity(t->id)) {
      n["polarity"] = to_string(*p);
      n["resolution"] = to_string(net.resolved_by.at(t->id));
    } else {
      n["polarity"] = nullptr;
      n["resolution"] = net.contradicted.contains(t->id) ? "contradicted"
                        : net.nodes.contains(t->id)      ? "unresolved"
                                                         : "absent";
    }
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (const auto& [key, e] : net.edges) edges.push_back(edge_json(key, e));
  return {{"event_aliases", std::vector<std::string>(event_aliases.begin(), event_aliases.end())},
          {"nodes", nodes},
          {"edges", edges}};
}

struct NetworkDocument {
  TargetSet targets;
  WordSet event_aliases;
  PolarityLookup polarity;
};

inline NetworkDocument network_document_from_json(const json& j) {
  NetworkDocument doc;
  for (const auto& a : j.at("event_aliases")) doc.event_aliases.insert(a.get<std::string>());
  for (const auto& n : j.at("nodes")) {
    auto t = target_from_json(n);
    if (n.contains("polarity") && !n.at("polarity").is_null())
      doc.polarity.resolved[t.id] = sign_from(n.at("polarity").get<std::string>());
    (t.kind == TargetKind::KeyPhrase ? doc.targets.key_phrases : doc.targets.key_players)
        .push_back(std::move(t));
  }
  return doc;
}

inline json to_json(const Coverage& c) {
  return {{"targets", c.targets},
          {"pass1", c.pass1},
          {"pass2", c.pass2},
          {"unresolved", c.unresolved},
          {"pass1_fraction", c.pass1_fraction()},
          {"pass2_fraction", c.pass2_fraction()},
          {"unresolved_fraction", c.unresolved_fraction()}};
}

inline Coverage coverage_from_json(const json& j) {
  return {j.at("targets").get<std::size_t>(), j.at("pass1").get<std::size_t>(),
          j.at("pass2").get<std::size_t>(), j.at("unresolved").get<std::size_t>()};
}

// --- stance ----------------------------------------------------------------

inline Polarity polarity_from(const std::string& s) {
  if (s == "positive") return Polarity::Positive;
  if (s == "negative") return Polarity::Negative;
  if (s == "neutral") return Polarity::Neutral;
  throw input_error("bad stance \"" + s + "\"");
}

inline json to_json(const StanceResult& r) {
  json contributions = json::array();
  for (const auto& c : r.contributions) {
    contributions.push_back({{"target", c.target},
                             {"sentiment", c.sentiment},
                             {"polarity", c.polarity},
                             {"product", c.product}});
  }
  return {{"id", r.message_id},
          {"stance", to_string(r.stance)},
          {"unmatched", r.unmatched},
          {"contributions", contributions}};
}

inline StanceResult stance_from_json(const json& j) {
  StanceResult r;
  r.message_id = j.at("id").get<std::string>();
  r.stance = polarity_from(j.at("stance").get<std::string>());
  r.unmatched = j.value("unmatched", false);
  if (j.contains("contributions")) {
    for (const auto& c : j.at("contributions")) {
      r.contributions.push_back({c.at("target").get<std::string>(), c.at("sentiment").get<int>(),
                                 c.at("polarity").get<int>(), c.at("product").get<int>()});
    }
  }
  return r;
}

inline void write_predictions(std::ostream& out, const std::vector<StanceResult>& rs) {
  for (const auto& r : rs) write_line(out, to_json(r));
}

inline std::vector<StanceResult> read_predictions(std::istream& in) {
  std::vector<StanceResult> out;
  for_each_record(in, "predictions",
                  [&](const json& j, std::size_t) { out.push_back(stance_from_json(j)); });
  return out;
}

inline std::vector<GoldLabel> read_gold(std::istream& in) {
  std::vector<GoldLabel> out;
  std::set<std::string> seen;
  for_each_record(in, "gold", [&](const json& j, std::size_t line) {
    GoldLabel g{j.at("id").get<std::string>(), polarity_from(j.at("stance").get<std::string>())};
    if (g.stance == Polarity::Neutral)
      throw input_error("gold line " + std::to_string(line) + ": stance must be binary");
    if (!seen.insert(g.message_id).second)
      throw input_error("gold line " + std::to_string(line) + ": duplicate id " + g.message_id);
    out.push_back(std::move(g));
  });
  return out;
}

inline json to_json(const EvalReport& r, NeutralPolicy policy) {
  auto scores = [](const ClassScores& s) {
    return json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
  };
  return {{"neutral_policy", to_string(policy)},
          {"total", r.total},
          {"excluded", r.excluded},
          {"accuracy", r.accuracy},
          {"positive", scores(r.positive)},
          {"negative", scores(r.negative)},
          {"f1_average", r.f1_average},
          {"confusion",
           {{"gold_positive", {r.confusion[0][0], r.confusion[0][1], r.confusion[0][2]}},
            {"gold_negative", {r.confusion[1][0], r.confusion[1][1], r.confusion[1][2]}}}}};
}

// --- human-readable tables -------------------------------------------------

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string phrase_stats_table(const std::string& event, const TargetSet& set) {
  const auto& s = set.phrase_stats;
  std::string out = "Event\tp\tK_p\tK_l\tMax I(P)\tMean I(P)\tSD I(P)\n";
  out += event + '\t' + std::to_string(s.candidates) + '\t' + std::to_string(s.selected) +
         '\t' + std::to_string(set.key_players.size()) + '\t' +
         format_fixed(s.max_importance, 2) + '\t' + format_fixed(s.mean_importance, 2) + '\t' +
         format_fixed(s.sd_importance, 2) + '\n';
  return out;
}

inline std::string coverage_table(const std::string& event, const Coverage& c) {
  std::string out = "Event\tPass-I\tPass-II\tUnresolved Links\n";
  out += event + '\t' + format_fixed(c.pass1_fraction(), 3) + '\t' +
         format_fixed(c.pass2_fraction(), 3) + '\t' + format_fixed(c.unresolved_fraction(), 3) +
         '\n';
  return out;
}

}  // namespace stancenet::records
