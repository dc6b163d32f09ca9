#pragma once

// End-to-end run: articles -> targets -> pass-I assertions -> signed network
// -> message stance -> optional evaluation, with every intermediate artifact
// written to an output directory.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stancenet/corpus.hpp"
#include "stancenet/error.hpp"
#include "stancenet/eval.hpp"
#include "stancenet/pass1.hpp"
#include "stancenet/records.hpp"
#include "stancenet/resources.hpp"
#include "stancenet/sentence_classifier.hpp"
#include "stancenet/sentiment.hpp"
#include "stancenet/signed_network.hpp"
#include "stancenet/stance.hpp"
#include "stancenet/targets.hpp"

namespace stancenet {

enum class TargetSource { Articles, Messages };

struct RunConfig {
  std::string event = "event";
  std::filesystem::path articles;
  std::filesystem::path messages;
  std::optional<std::filesystem::path> gold;
  WordSet event_aliases;
  std::filesystem::path lexicon;
  std::filesystem::path data_dir;
  std::optional<std::filesystem::path> out_dir;
  NeutralPolicy neutral_policy = NeutralPolicy::CountWrong;
  std::optional<std::size_t> sentiment_window;
  TargetSource target_source = TargetSource::Articles;
};

inline NeutralPolicy neutral_policy_from(const std::string& s) {
  if (s == "count-wrong") return NeutralPolicy::CountWrong;
  if (s == "exclude") return NeutralPolicy::Exclude;
  throw input_error("neutral_policy must be \"count-wrong\" or \"exclude\", got \"" + s + "\"");
}

// JSON run config. Relative paths resolve against the config file's
// directory.
//
//   {"event": "...", "articles": "...", "messages": "...", "gold": "...",
//    "event_aliases": [...], "lexicon": "...", "data_dir": "...",
//    "out_dir": "...", "neutral_policy": "count-wrong",
//    "sentiment_window": 5, "target_source": "articles"}
inline RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base) {
  auto path = [&](const char* key) {
    std::filesystem::path p = j.at(key).get<std::string>();
    return p.is_absolute() ? p : base / p;
  };
  RunConfig c;
  try {
    c.event = j.value("event", c.event);
    c.articles = path("articles");
    c.messages = path("messages");
    if (j.contains("gold") && !j.at("gold").is_null()) c.gold = path("gold");
    for (const auto& a : j.at("event_aliases")) c.event_aliases.insert(to_lower(a.get<std::string>()));
    c.lexicon = path("lexicon");
    c.data_dir = path("data_dir");
    if (j.contains("out_dir")) c.out_dir = path("out_dir");
    if (j.contains("neutral_policy"))
      c.neutral_policy = neutral_policy_from(j.at("neutral_policy").get<std::string>());
    if (j.contains("sentiment_window") && !j.at("sentiment_window").is_null())
      c.sentiment_window = j.at("sentiment_window").get<std::size_t>();
    auto source = j.value("target_source", std::string("articles"));
    if (source == "messages") c.target_source = TargetSource::Messages;
    else if (source != "articles") throw input_error("target_source must be articles or messages");
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("config: ") + e.what());
  }
  if (c.event_aliases.empty()) throw input_error("config: event_aliases must not be empty");
  return c;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  auto j = nlohmann::json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw input_error("config is not a JSON object: " + path.string());
  return parse_config(j, path.parent_path());
}

struct PipelineResult {
  TargetSet targets;
  Pass1Result pass1;
  SignedNetwork network;
  Coverage coverage;
  Partition partition;
  std::vector<StanceResult> predictions;
  std::optional<EvalReport> evaluation;
  std::vector<RecordError> article_errors;
  std::vector<RecordError> message_errors;
};

namespace detail {

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw input_error("cannot write " + p.string());
  out << text;
}

inline void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  write_text(p, j.dump(2) + "\n");
}

template <typename Fn>
void write_with(const std::filesystem::path& p, Fn&& fn) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw input_error("cannot write " + p.string());
  fn(out);
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Input) throw;
    throw stage_error(std::string(name) + ": " + e.what());
  }
}

}  // namespace detail

inline std::string run_report(const RunConfig& config, const PipelineResult& r) {
  std::string out = records::phrase_stats_table(config.event, r.targets);
  out += '\n';
  out += records::coverage_table(config.event, r.coverage);
  if (r.evaluation) {
    out += "\nEvent\tAccuracy\tF1 positive\tF1 negative\tAverage F1\n";
    out += config.event + '\t' + records::format_fixed(r.evaluation->accuracy, 3) + '\t' +
           records::format_fixed(r.evaluation->positive.f1, 3) + '\t' +
           records::format_fixed(r.evaluation->negative.f1, 3) + '\t' +
           records::format_fixed(r.evaluation->f1_average, 3) + '\n';
  }
  return out;
}

inline PipelineResult run_pipeline(const RunConfig& config) {
  PipelineResult r;
  const auto res = LanguageResources::load(config.data_dir);
  const auto lexicon = load_lexicon(config.lexicon);

  auto articles = load_documents(config.articles, DocumentKind::Article, res.abbreviations);
  auto messages = load_documents(config.messages, DocumentKind::Message, res.abbreviations);
  r.article_errors = std::move(articles.errors);
  r.message_errors = std::move(messages.errors);

  const auto& target_docs =
      config.target_source == TargetSource::Articles ? articles.documents : messages.documents;
  r.targets = detail::stage("target extraction", [&] {
    return build_target_set(target_docs, target_options(res, config.event_aliases));
  });

  const MentionMatcher matcher(r.targets, config.event_aliases);
  r.pass1 = detail::stage("pass-I", [&] {
    return run_pass1(articles.documents, matcher, lexicon, ClauseLexicon::from(res));
  });

  r.network = detail::stage("signed network", [&] {
    auto net = build_network(r.pass1.assertions, r.targets);
    propagate(net);
    return net;
  });
  r.coverage = coverage_report(r.network);
  r.partition = partition(r.network);

  StanceOptions opts{config.sentiment_window};
  r.predictions = classify_corpus(messages.documents, PolarityLookup::from(r.network), matcher,
                                  lexicon, opts);

  if (config.gold) {
    std::ifstream in(*config.gold);
    if (!in) throw input_error("cannot read " + config.gold->string());
    auto gold = records::read_gold(in);
    r.evaluation = detail::stage("evaluation", [&] {
      return evaluate(r.predictions, gold, config.neutral_policy);
    });
  }

  if (config.out_dir) {
    namespace fs = std::filesystem;
    const auto& dir = *config.out_dir;
    fs::create_directories(dir);
    detail::write_with(dir / "targets.jsonl",
                       [&](std::ostream& o) { records::write_targets(o, r.targets); });
    detail::write_json(dir / "target_stats.json", records::target_stats_json(r.targets));
    detail::write_with(dir / "assertions.jsonl", [&](std::ostream& o) {
      records::write_assertions(o, r.pass1.assertions);
    });
    detail::write_json(dir / "pass1_stats.json", records::pass1_stats_json(r.pass1));
    detail::write_with(dir / "edges.jsonl",
                       [&](std::ostream& o) { records::write_edges(o, r.network); });
    detail::write_json(dir / "network.json",
                       records::network_document(r.network, r.targets, config.event_aliases));
    detail::write_text(dir / "network.dot", to_dot(r.network));
    detail::write_json(dir / "coverage.json", records::to_json(r.coverage));
    detail::write_with(dir / "predictions.jsonl",
                       [&](std::ostream& o) { records::write_predictions(o, r.predictions); });
    if (r.evaluation)
      detail::write_json(dir / "eval.json", records::to_json(*r.evaluation, config.neutral_policy));
    detail::write_text(dir / "report.txt", run_report(config, r));
  }
  return r;
}

}  // namespace stancenet
