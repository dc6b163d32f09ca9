#pragma once

// First pass over the articles: signed assertions between targets, or
// between a target and the event, read off each sentence according to its
// form.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stancenet/corpus.hpp"
#include "stancenet/sentence_classifier.hpp"
#include "stancenet/sentiment.hpp"
#include "stancenet/targets.hpp"

namespace stancenet {

// Reserved node id for the event itself.
inline constexpr std::string_view kEventId = "EVENT";

struct TargetMention {
  std::string ref;  // target id or kEventId
  TokenSpan span;
  std::string matched_surface;

  bool is_event() const { return ref == kEventId; }
};

// Case-insensitive longest-match lookup of target surface forms and event
// aliases. When one surface form belongs to several references the event
// wins, then key-players, then key-phrases.
class MentionMatcher {
 public:
  MentionMatcher() = default;

  MentionMatcher(const TargetSet& targets, const WordSet& event_aliases) {
    for (const auto& alias : event_aliases) add(alias, std::string(kEventId), 0);
    for (const auto& t : targets.key_players) {
      for (const auto& form : t.surface_forms) add(form, t.id, 1);
    }
    for (const auto& t : targets.key_phrases) {
      for (const auto& form : t.surface_forms) add(form, t.id, 2);
    }
  }

  std::vector<TargetMention> find(const std::vector<Token>& toks) const {
    struct Candidate {
      std::size_t start, len;
      const Entry* entry;
    };
    std::vector<Candidate> candidates;
    WordSequence window;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      window.clear();
      const Entry* best = nullptr;
      std::size_t best_len = 0;
      for (std::size_t len = 1; len <= max_len_ && i + len <= toks.size(); ++len) {
        window.push_back(toks[i + len - 1].normalized);
        if (auto it = forms_.find(window); it != forms_.end()) {
          best = &it->second;
          best_len = len;
        }
      }
      if (best) candidates.push_back({i, best_len, best});
    }
    // Longer first, then leftmost; keep non-overlapping.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                       if (a.len != b.len) return a.len > b.len;
                       return a.start < b.start;
                     });
    std::vector<bool> taken(toks.size(), false);
    std::vector<TargetMention> out;
    for (const auto& c : candidates) {
      bool free = std::none_of(taken.begin() + c.start, taken.begin() + c.start + c.len,
                               [](bool b) { return b; });
      if (!free) continue;
      std::fill(taken.begin() + c.start, taken.begin() + c.start + c.len, true);
      out.push_back({c.entry->ref, {c.start, c.start + c.len}, render_tokens(toks, c.start, c.start + c.len)});
    }
    std::sort(out.begin(), out.end(), [](const TargetMention& a, const TargetMention& b) {
      return a.span.begin < b.span.begin;
    });
    return out;
  }

 private:
  struct Entry {
    std::string ref;
    int rank = 0;
  };

  void add(const std::string& form, std::string ref, int rank) {
    WordSequence key;
    for (const auto& tok : tokenize(form)) key.push_back(tok.normalized);
    if (key.empty()) return;
    max_len_ = std::max(max_len_, key.size());
    auto [it, fresh] = forms_.try_emplace(key, Entry{ref, rank});
    if (!fresh && (rank < it->second.rank ||
                   (rank == it->second.rank && ref < it->second.ref))) {
      it->second = Entry{std::move(ref), rank};
    }
  }

  std::map<WordSequence, Entry> forms_;
  std::size_t max_len_ = 0;
};

inline std::vector<TargetMention> find_mentions(const Sentence& s, const MentionMatcher& m) {
  return m.find(s.tokens);
}

inline std::vector<TargetMention> find_mentions(const Sentence& s, const TargetSet& targets,
                                                const WordSet& event_aliases) {
  return MentionMatcher(targets, event_aliases).find(s.tokens);
}

enum class Sign { Neg = -1, Pos = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }
inline Sign multiply(Sign a, Sign b) { return a == b ? Sign::Pos : Sign::Neg; }
inline std::string_view to_string(Sign s) { return s == Sign::Pos ? "+" : "-"; }

enum class RuleTag { Simple, Conj1, Conj2, Conj3, Conj4, Conj5, Direct, Indirect };

inline std::string_view to_string(RuleTag r) {
  switch (r) {
    case RuleTag::Simple: return "simple";
    case RuleTag::Conj1: return "conj1";
    case RuleTag::Conj2: return "conj2";
    case RuleTag::Conj3: return "conj3";
    case RuleTag::Conj4: return "conj4";
    case RuleTag::Conj5: return "conj5";
    case RuleTag::Direct: return "direct";
    case RuleTag::Indirect: return "indirect";
  }
  return "simple";
}

inline std::optional<RuleTag> rule_tag_from(std::string_view s) {
  for (auto r : {RuleTag::Simple, RuleTag::Conj1, RuleTag::Conj2, RuleTag::Conj3,
                 RuleTag::Conj4, RuleTag::Conj5, RuleTag::Direct, RuleTag::Indirect}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

inline RuleTag rule_for(ConjunctionCategory c) {
  switch (c) {
    case ConjunctionCategory::CauseEffect: return RuleTag::Conj1;
    case ConjunctionCategory::Concessive: return RuleTag::Conj2;
    case ConjunctionCategory::Adversative: return RuleTag::Conj3;
    case ConjunctionCategory::Coordinating: return RuleTag::Conj4;
    case ConjunctionCategory::Relative: return RuleTag::Conj5;
  }
  return RuleTag::Simple;
}

struct PolarityAssertion {
  std::string from;
  std::string to;
  Sign sign = Sign::Pos;
  std::string doc_id;
  std::size_t sentence_index = 0;
  RuleTag rule = RuleTag::Simple;

  bool operator==(const PolarityAssertion&) const = default;
};

inline Polarity clause_polarity(const Sentence& s, const Clause& clause, const Lexicon& lex) {
  auto toks = clause_tokens(s, clause);
  return token_polarity(toks, lex);
}

namespace detail {

inline bool clause_covers(const Clause& c, TokenSpan span) {
  for (auto i = span.begin; i < span.end; ++i) {
    if (!std::binary_search(c.tokens.begin(), c.tokens.end(), i)) return false;
  }
  return true;
}

inline std::vector<const TargetMention*> distinct_refs(
    const std::vector<TargetMention>& mentions, auto&& keep) {
  std::vector<const TargetMention*> out;
  for (const auto& m : mentions) {
    if (!keep(m)) continue;
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const TargetMention* o) { return o->ref == m.ref; });
    if (!seen) out.push_back(&m);
  }
  return out;
}

inline std::optional<Sign> sign_of_polarity(Polarity p) {
  if (p == Polarity::Positive) return Sign::Pos;
  if (p == Polarity::Negative) return Sign::Neg;
  return std::nullopt;
}

}  // namespace detail

// Subject = first mention in the clause, object = the next distinct one
// (which may be the event); sign = clause orientation. Neutral clauses and
// clauses with fewer than two distinct references give nothing.
inline std::optional<PolarityAssertion> assert_from_simple(
    const Sentence& s, const Clause& clause, const std::vector<TargetMention>& mentions,
    const Lexicon& lex, RuleTag rule = RuleTag::Simple, std::string_view doc_id = {}) {
  auto inside = detail::distinct_refs(
      mentions, [&](const TargetMention& m) { return detail::clause_covers(clause, m.span); });
  if (inside.size() < 2) return std::nullopt;
  auto sign = detail::sign_of_polarity(clause_polarity(s, clause, lex));
  if (!sign) return std::nullopt;
  return PolarityAssertion{inside[0]->ref, inside[1]->ref, *sign, std::string(doc_id),
                           s.index, rule};
}

// Designated clauses per connective: the effect (main) clause for
// cause-effect, the subordinate clause for although/though, the clause after
// but/yet, both clauses for and/or, the main clause for relatives.
inline std::vector<const Clause*> designated_clauses(const SentenceAnalysis& a) {
  std::vector<const Clause*> out;
  if (a.clauses.empty()) return out;
  const Clause* with_conn = nullptr;
  for (const auto& c : a.clauses) {
    if (c.connective) with_conn = &c;
  }
  if (!with_conn) return out;
  using C = ConjunctionCategory;
  switch (with_conn->connective->category) {
    case C::CauseEffect:
    case C::Relative:
      for (const auto& c : a.clauses) {
        if (c.role == ClauseRole::Main) out.push_back(&c);
      }
      break;
    case C::Concessive:
      out.push_back(with_conn);
      break;
    case C::Adversative:
      out.push_back(with_conn);
      break;
    case C::Coordinating:
      for (const auto& c : a.clauses) out.push_back(&c);
      break;
  }
  return out;
}

inline std::vector<PolarityAssertion> assert_from_conjoined(
    const Sentence& s, const SentenceAnalysis& a, const std::vector<TargetMention>& mentions,
    const Lexicon& lex) {
  std::vector<PolarityAssertion> out;
  const Clause* with_conn = nullptr;
  for (const auto& c : a.clauses) {
    if (c.connective) with_conn = &c;
  }
  if (!with_conn) return out;
  auto rule = rule_for(with_conn->connective->category);
  for (const auto* clause : designated_clauses(a)) {
    if (auto assertion = assert_from_simple(s, *clause, mentions, lex, rule, a.doc_id))
      out.push_back(std::move(*assertion));
  }
  return out;
}

// Speaker (first target mention in the speaker span) toward the first other
// reference in the reported content, signed by the content's orientation.
// Only simple reporting clauses are used.
inline std::optional<PolarityAssertion> assert_from_speech(
    const Sentence& s, const SentenceAnalysis& a, const std::vector<TargetMention>& mentions,
    const Lexicon& lex, std::vector<std::string>* diagnostics = nullptr) {
  auto note = [&](std::string msg) {
    if (diagnostics) diagnostics->push_back(std::move(msg));
  };
  if (!a.reporting) return std::nullopt;
  const auto& speech = *a.reporting;
  if (speech.reporting_clause_form != SentenceForm::Simple) {
    note("reporting clause is not simple");
    return std::nullopt;
  }
  const TargetMention* speaker = nullptr;
  for (const auto& m : mentions) {
    if (!m.is_event() && m.span.begin >= speech.speaker.begin &&
        m.span.end <= speech.speaker.end) {
      speaker = &m;
      break;
    }
  }
  if (!speaker) {
    note("speaker is not a known target");
    return std::nullopt;
  }
  const TargetMention* object = nullptr;
  for (const auto& m : mentions) {
    if (m.ref != speaker->ref && m.span.begin >= speech.content.begin &&
        m.span.end <= speech.content.end) {
      object = &m;
      break;
    }
  }
  if (!object) {
    note("no target mentioned in the reported content");
    return std::nullopt;
  }
  std::vector<Token> content(s.tokens.begin() + static_cast<std::ptrdiff_t>(speech.content.begin),
                             s.tokens.begin() + static_cast<std::ptrdiff_t>(speech.content.end));
  auto sign = detail::sign_of_polarity(token_polarity(content, lex));
  if (!sign) {
    note("reported content is neutral");
    return std::nullopt;
  }
  auto rule = a.form == SentenceForm::DirectSpeech ? RuleTag::Direct : RuleTag::Indirect;
  return PolarityAssertion{speaker->ref, object->ref, *sign, a.doc_id, s.index, rule};
}

struct Pass1Diagnostic {
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::string message;
};

struct Pass1Result {
  std::vector<PolarityAssertion> assertions;
  std::map<RuleTag, std::size_t> rule_counts;
  std::map<SentenceForm, std::size_t> form_counts;
  std::size_t sentences = 0;
  std::vector<Pass1Diagnostic> diagnostics;
};

// Assertions and diagnostics for one sentence. Questions are skipped.
inline std::vector<PolarityAssertion> sentence_assertions(
    const Sentence& s, std::string_view doc_id, const MentionMatcher& matcher,
    const Lexicon& lex, const ClauseLexicon& clause_lex, SentenceForm* form_out,
    std::vector<std::string>& notes) {
  if (!s.tokens.empty() && s.tokens.back().surface == "?") {
    notes.push_back("question skipped");
    return {};
  }
  auto analysis = analyze_sentence(s, doc_id, clause_lex);
  if (form_out) *form_out = analysis.form;
  for (auto& d : analysis.diagnostics) notes.push_back(d);
  auto mentions = find_mentions(s, matcher);
  if (mentions.empty()) {
    notes.push_back("no target mentions");
    return {};
  }
  std::vector<PolarityAssertion> out;
  switch (analysis.form) {
    case SentenceForm::DirectSpeech:
    case SentenceForm::IndirectSpeech:
      if (auto a = assert_from_speech(s, analysis, mentions, lex, &notes)) out.push_back(*a);
      break;
    case SentenceForm::Simple:
      if (auto a = assert_from_simple(s, analysis.clauses.front(), mentions, lex,
                                      RuleTag::Simple, doc_id))
        out.push_back(*a);
      break;
    case SentenceForm::Compound:
    case SentenceForm::Complex:
      out = assert_from_conjoined(s, analysis, mentions, lex);
      break;
  }
  if (out.empty() && notes.empty()) notes.push_back("no signed relation found");
  return out;
}

inline Pass1Result run_pass1(const std::vector<Document>& docs, const MentionMatcher& matcher,
                             const Lexicon& lex, const ClauseLexicon& clause_lex) {
  Pass1Result result;
  for (const auto& doc : docs) {
    for (const auto& s : doc.sentences) {
      ++result.sentences;
      std::vector<std::string> notes;
      SentenceForm form = SentenceForm::Simple;
      auto found = sentence_assertions(s, doc.id, matcher, lex, clause_lex, &form, notes);
      ++result.form_counts[form];
      for (auto& a : found) {
        ++result.rule_counts[a.rule];
        result.assertions.push_back(std::move(a));
      }
      if (found.empty()) {
        std::string msg = notes.empty() ? "no signed relation found" : join(notes, "; ");
        result.diagnostics.push_back({doc.id, s.index, std::move(msg)});
      }
    }
  }
  return result;
}

inline Pass1Result run_pass1(const std::vector<Document>& docs, const TargetSet& targets,
                             const WordSet& event_aliases, const Lexicon& lex,
                             const ClauseLexicon& clause_lex) {
  return run_pass1(docs, MentionMatcher(targets, event_aliases), lex, clause_lex);
}

}  // namespace stancenet
