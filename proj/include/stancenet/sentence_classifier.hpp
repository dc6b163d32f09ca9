#pragma once

// Sentence typing for polarity extraction: reported speech first (reporting
// verb + quotes, or reporting verb + complement clause), then simple /
// compound / complex by the conjunction inventory below.
//
//   cause-effect   because, as, since
//   concessive     although, though
//   adversative    but, yet
//   coordinating   and, or
//   relative       who, which, whom, that, whose

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stancenet/corpus.hpp"
#include "stancenet/resources.hpp"

namespace stancenet {

enum class SentenceForm { DirectSpeech, IndirectSpeech, Simple, Compound, Complex };

inline std::string_view to_string(SentenceForm f) {
  switch (f) {
    case SentenceForm::DirectSpeech: return "direct-speech";
    case SentenceForm::IndirectSpeech: return "indirect-speech";
    case SentenceForm::Simple: return "simple";
    case SentenceForm::Compound: return "compound";
    case SentenceForm::Complex: return "complex";
  }
  return "simple";
}

enum class ConjunctionCategory { CauseEffect, Concessive, Adversative, Coordinating, Relative };

struct Conjunction {
  std::string lexeme;
  ConjunctionCategory category = ConjunctionCategory::Coordinating;

  bool operator==(const Conjunction&) const = default;
};

inline std::optional<ConjunctionCategory> conjunction_category(std::string_view lexeme) {
  using C = ConjunctionCategory;
  if (lexeme == "because" || lexeme == "as" || lexeme == "since") return C::CauseEffect;
  if (lexeme == "although" || lexeme == "though") return C::Concessive;
  if (lexeme == "but" || lexeme == "yet") return C::Adversative;
  if (lexeme == "and" || lexeme == "or") return C::Coordinating;
  if (lexeme == "who" || lexeme == "which" || lexeme == "whom" || lexeme == "that" ||
      lexeme == "whose")
    return C::Relative;
  return std::nullopt;
}

enum class ClauseRole { Main, Subordinate, Coordinate };

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
  bool operator==(const TokenSpan&) const = default;
};

struct Clause {
  // Ascending token indices into the sentence.
  std::vector<std::size_t> tokens;
  std::optional<Conjunction> connective;
  ClauseRole role = ClauseRole::Main;
};

struct ReportedSpeech {
  TokenSpan speaker;
  TokenSpan content;
  std::size_t verb = 0;
  SentenceForm reporting_clause_form = SentenceForm::Simple;
};

struct SentenceAnalysis {
  std::string doc_id;
  std::size_t sentence_index = 0;
  SentenceForm form = SentenceForm::Simple;
  std::vector<Clause> clauses;
  std::optional<ReportedSpeech> reporting;
  std::optional<std::size_t> connective_index;
  std::vector<std::string> diagnostics;
};

struct ClauseLexicon {
  WordSet reporting_verbs;
  WordSet verbs;

  static ClauseLexicon from(const LanguageResources& r) {
    return {r.reporting_verbs, r.verbs};
  }
};

inline std::vector<Token> clause_tokens(const Sentence& s, const Clause& c) {
  std::vector<Token> out;
  out.reserve(c.tokens.size());
  for (auto i : c.tokens) out.push_back(s.tokens[i]);
  return out;
}

inline std::vector<std::size_t> index_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (auto i = begin; i < end; ++i) out.push_back(i);
  return out;
}

namespace detail {

inline bool has_verb(const std::vector<Token>& toks, std::size_t begin, std::size_t end,
                     const ClauseLexicon& lex) {
  for (auto i = begin; i < end && i < toks.size(); ++i) {
    if (is_verb_candidate(toks[i], lex.verbs, lex.reporting_verbs)) return true;
  }
  return false;
}

inline bool has_word(const std::vector<Token>& toks, std::size_t begin, std::size_t end) {
  for (auto i = begin; i < end && i < toks.size(); ++i) {
    if (is_word(toks[i])) return true;
  }
  return false;
}

inline TokenSpan trim_to_words(const std::vector<Token>& toks, TokenSpan span) {
  while (span.begin < span.end && !is_word(toks[span.begin])) ++span.begin;
  while (span.end > span.begin && !is_word(toks[span.end - 1])) --span.end;
  return span;
}

inline bool has_conjunction(const std::vector<Token>& toks, const std::vector<std::size_t>& idx,
                            std::optional<std::size_t> skip = std::nullopt) {
  for (auto i : idx) {
    if (skip && *skip == i) continue;
    if (conjunction_category(toks[i].normalized)) return true;
  }
  return false;
}

inline std::optional<std::size_t> next_comma(const std::vector<Token>& toks, std::size_t from) {
  for (auto i = from; i < toks.size(); ++i) {
    if (toks[i].surface == "," || toks[i].surface == ";") return i;
  }
  return std::nullopt;
}

}  // namespace detail

// Clauses obtained by splitting at the connective token at `at`. The
// connective itself belongs to no clause; every other token belongs to
// exactly one.
inline std::vector<Clause> split_clauses(const Sentence& s, std::size_t at) {
  const auto& toks = s.tokens;
  const auto n = toks.size();
  auto category = conjunction_category(toks.at(at).normalized);
  if (!category) return {{index_range(0, n), std::nullopt, ClauseRole::Main}};
  Conjunction conj{toks[at].normalized, *category};
  const bool initial = !detail::has_word(toks, 0, at);

  using C = ConjunctionCategory;
  std::vector<Clause> out;
  switch (*category) {
    case C::Coordinating:
    case C::Adversative:
      out.push_back({index_range(0, at), std::nullopt, ClauseRole::Coordinate});
      out.push_back({index_range(at + 1, n), conj, ClauseRole::Coordinate});
      break;
    case C::CauseEffect:
    case C::Concessive:
      if (initial) {
        auto comma = detail::next_comma(toks, at + 1).value_or(n - 1);
        auto sub = index_range(0, at);
        auto rest = index_range(at + 1, comma + 1);
        sub.insert(sub.end(), rest.begin(), rest.end());
        out.push_back({std::move(sub), conj, ClauseRole::Subordinate});
        out.push_back({index_range(comma + 1, n), std::nullopt, ClauseRole::Main});
      } else {
        out.push_back({index_range(0, at), std::nullopt, ClauseRole::Main});
        out.push_back({index_range(at + 1, n), conj, ClauseRole::Subordinate});
      }
      break;
    case C::Relative: {
      // The relative clause runs to the next comma (inclusive) or the end.
      auto comma = detail::next_comma(toks, at + 1);
      std::size_t rel_end = comma ? *comma + 1 : n;
      auto main = index_range(0, at);
      auto tail = index_range(rel_end, n);
      main.insert(main.end(), tail.begin(), tail.end());
      out.push_back({std::move(main), std::nullopt, ClauseRole::Main});
      out.push_back({index_range(at + 1, rel_end), conj, ClauseRole::Subordinate});
      break;
    }
  }
  std::erase_if(out, [](const Clause& c) { return c.tokens.empty(); });
  return out;
}

// Splits at the first occurrence of the connective's lexeme.
inline std::vector<Clause> split_clauses(const Sentence& s, const Conjunction& connective) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].normalized == connective.lexeme) return split_clauses(s, i);
  }
  return {{index_range(0, s.tokens.size()), std::nullopt, ClauseRole::Main}};
}

namespace detail {

inline std::vector<std::size_t> quote_positions(const std::vector<Token>& toks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_quote(toks[i])) out.push_back(i);
  }
  return out;
}

// Speaker span ending just before the reporting verb, without trailing
// auxiliaries ("has said") or punctuation.
inline TokenSpan speaker_before(const std::vector<Token>& toks, std::size_t begin,
                                std::size_t verb, const ClauseLexicon& lex) {
  TokenSpan span = trim_to_words(toks, {begin, verb});
  while (span.end > span.begin && lex.verbs.contains(toks[span.end - 1].normalized)) {
    --span.end;
    span = trim_to_words(toks, span);
  }
  return span;
}

}  // namespace detail

struct SpeechDetection {
  SentenceForm form = SentenceForm::IndirectSpeech;
  ReportedSpeech speech;
  std::vector<std::size_t> reporting_clause;
  std::vector<std::string> diagnostics;
};

// Reported speech: a reporting verb plus a paired quotation (direct), or a
// reporting verb followed by "that" or by a clause with a finite verb
// (indirect). An odd number of quote marks is ignored for pairing and noted.
inline std::optional<SpeechDetection> detect_speech(const Sentence& s,
                                                    const ClauseLexicon& lex) {
  const auto& toks = s.tokens;
  const auto n = toks.size();
  std::vector<std::string> diagnostics;
  auto quotes = detail::quote_positions(toks);
  std::optional<TokenSpan> quoted;
  if (quotes.size() >= 2 && quotes.size() % 2 == 0) {
    quoted = TokenSpan{quotes.front(), quotes.back() + 1};
  } else if (quotes.size() % 2 == 1) {
    diagnostics.push_back("unpaired quote; treated as unquoted");
  }

  std::optional<std::size_t> verb;
  for (std::size_t i = 0; i < n; ++i) {
    if (quoted && quoted->contains(i)) continue;
    if (lex.reporting_verbs.contains(toks[i].normalized)) {
      verb = i;
      break;
    }
  }
  if (!verb) return std::nullopt;

  auto reporting_form = [&](const std::vector<std::size_t>& clause,
                            std::optional<std::size_t> skip) {
    return detail::has_conjunction(toks, clause, skip) ? SentenceForm::Complex
                                                       : SentenceForm::Simple;
  };

  SpeechDetection out;
  out.diagnostics = std::move(diagnostics);
  out.speech.verb = *verb;

  if (quoted) {
    out.form = SentenceForm::DirectSpeech;
    out.speech.content = {quoted->begin + 1, quoted->end - 1};
    if (*verb < quoted->begin) {
      out.speech.speaker = detail::speaker_before(toks, 0, *verb, lex);
    } else if (detail::has_word(toks, quoted->end, *verb)) {
      // "..." Modi said
      out.speech.speaker = detail::speaker_before(toks, quoted->end, *verb, lex);
    } else {
      // "..." said Modi
      out.speech.speaker = detail::trim_to_words(toks, {*verb + 1, n});
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!quoted->contains(i)) out.reporting_clause.push_back(i);
    }
    out.speech.reporting_clause_form = reporting_form(out.reporting_clause, std::nullopt);
    return out;
  }

  std::size_t next = *verb + 1;
  while (next < n && !is_word(toks[next])) ++next;
  bool complementizer = next < n && toks[next].normalized == "that";
  std::size_t content_begin = complementizer ? next + 1 : *verb + 1;
  if (!complementizer && !detail::has_verb(toks, content_begin, n, lex)) return std::nullopt;
  out.speech.speaker = detail::speaker_before(toks, 0, *verb, lex);
  if (out.speech.speaker.empty()) return std::nullopt;
  out.form = SentenceForm::IndirectSpeech;
  out.speech.content = detail::trim_to_words(toks, {content_begin, n});
  out.reporting_clause = index_range(0, content_begin);
  out.speech.reporting_clause_form = reporting_form(
      out.reporting_clause, complementizer ? std::optional<std::size_t>(next) : std::nullopt);
  return out;
}

namespace detail {

inline bool is_complementizer_that(const std::vector<Token>& toks, std::size_t i,
                                   const ClauseLexicon& lex) {
  if (toks[i].normalized != "that" || i == 0) return false;
  return is_verb_candidate(toks[i - 1], lex.verbs, lex.reporting_verbs);
}

// Whether the conjunction at i introduces a clause under the rules above.
inline bool qualifies(const std::vector<Token>& toks, std::size_t i, const ClauseLexicon& lex) {
  const auto n = toks.size();
  auto category = conjunction_category(toks[i].normalized);
  if (!category) return false;
  const bool initial = !has_word(toks, 0, i);
  using C = ConjunctionCategory;
  switch (*category) {
    case C::Coordinating:
    case C::Adversative:
      return !initial && has_verb(toks, 0, i, lex) && has_verb(toks, i + 1, n, lex);
    case C::CauseEffect:
    case C::Concessive:
      if (initial) {
        auto comma = next_comma(toks, i + 1);
        return comma && has_verb(toks, i + 1, *comma, lex) &&
               has_verb(toks, *comma + 1, n, lex);
      }
      return has_verb(toks, 0, i, lex) && has_verb(toks, i + 1, n, lex);
    case C::Relative: {
      if (initial || is_complementizer_that(toks, i, lex)) return false;
      if (!is_word(toks[i - 1])) return false;
      auto comma = next_comma(toks, i + 1);
      return has_verb(toks, i + 1, comma.value_or(n), lex);
    }
  }
  return false;
}

}  // namespace detail

// Simple / compound / complex typing for sentences that are not reported
// speech. The first conjunction that introduces a clause decides the form;
// anything else is simple.
inline SentenceAnalysis classify_structure(const Sentence& s, const ClauseLexicon& lex) {
  SentenceAnalysis a;
  a.sentence_index = s.index;
  const auto& toks = s.tokens;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!detail::qualifies(toks, i, lex)) continue;
    auto category = *conjunction_category(toks[i].normalized);
    bool coordinate = category == ConjunctionCategory::Coordinating ||
                      category == ConjunctionCategory::Adversative;
    a.form = coordinate ? SentenceForm::Compound : SentenceForm::Complex;
    a.connective_index = i;
    a.clauses = split_clauses(s, i);
    return a;
  }
  a.form = SentenceForm::Simple;
  a.clauses = {{index_range(0, toks.size()), std::nullopt, ClauseRole::Main}};
  return a;
}

inline SentenceAnalysis analyze_sentence(const Sentence& s, std::string_view doc_id,
                                         const ClauseLexicon& lex) {
  if (auto speech = detect_speech(s, lex)) {
    SentenceAnalysis a;
    a.doc_id = std::string(doc_id);
    a.sentence_index = s.index;
    a.form = speech->form;
    a.reporting = speech->speech;
    a.diagnostics = std::move(speech->diagnostics);
    a.clauses.push_back({speech->reporting_clause, std::nullopt, ClauseRole::Main});
    a.clauses.push_back({index_range(speech->speech.content.begin, speech->speech.content.end),
                         std::nullopt, ClauseRole::Subordinate});
    return a;
  }
  auto a = classify_structure(s, lex);
  a.doc_id = std::string(doc_id);
  if (detail::quote_positions(s.tokens).size() % 2 == 1)
    a.diagnostics.push_back("unpaired quote; treated as unquoted");
  return a;
}

}  // namespace stancenet
