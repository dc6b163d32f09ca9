#pragma once

// Lexicon-based semantic orientation. A sentence scores the sum of its
// sentiment words; an intensifier scales the next sentiment word by
// (1 + pct/100) and a negation subtracts its shift score from it.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stancenet/corpus.hpp"
#include "stancenet/error.hpp"
#include "stancenet/text.hpp"

namespace stancenet {

enum class Polarity { Negative = -1, Neutral = 0, Positive = 1 };

inline int sign_of(Polarity p) { return static_cast<int>(p); }

inline Polarity polarity_of(double total) {
  if (total > 0) return Polarity::Positive;
  if (total < 0) return Polarity::Negative;
  return Polarity::Neutral;
}

inline std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: break;
  }
  return "neutral";
}

enum class LexiconRole { Sentiment, Intensifier, Negation };

struct LexiconEntry {
  std::string word;
  // Sentiment score, or the shift score for a negation.
  double so = 0.0;
  std::optional<double> intensifier_pct;
  bool is_negation = false;

  // Negation > intensifier > plain sentiment.
  LexiconRole role() const {
    if (is_negation) return LexiconRole::Negation;
    if (intensifier_pct) return LexiconRole::Intensifier;
    return LexiconRole::Sentiment;
  }
};

class Lexicon {
 public:
  void add(LexiconEntry entry) {
    entry.word = to_lower(entry.word);
    auto key = entry.word;
    entries_.insert_or_assign(std::move(key), std::move(entry));
  }

  const LexiconEntry* find(std::string_view normalized) const {
    auto it = entries_.find(std::string(normalized));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }

  const std::vector<std::string>& warnings() const { return warnings_; }
  void warn(std::string w) { warnings_.push_back(std::move(w)); }

  // Returns a copy with every score (sentiment and negation shift) negated.
  Lexicon mirrored() const {
    Lexicon out;
    for (const auto& [w, e] : entries_) {
      auto copy = e;
      copy.so = -copy.so;
      out.entries_.emplace(w, std::move(copy));
    }
    return out;
  }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::vector<std::string> warnings_;
};

namespace detail {

inline std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    fields.push_back(trim(line.substr(start, tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace detail

// Tab-separated lexicon:
//   word<TAB>score
//   word<TAB>INT<TAB>percent
//   word<TAB>NEG<TAB>shift
// '#' starts a comment. Duplicate words keep the last entry and add a warning.
inline Lexicon parse_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  std::unordered_map<std::string, std::size_t> first_seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto bad = [&](const std::string& why) {
      return input_error("lexicon line " + std::to_string(line_no) + ": " + why);
    };
    auto fields = detail::split_tabs(line);
    LexiconEntry e;
    e.word = to_lower(fields[0]);
    if (e.word.empty()) throw bad("empty word");
    if (fields.size() == 2) {
      auto score = detail::parse_number(fields[1]);
      if (!score) throw bad("bad score \"" + std::string(fields[1]) + "\"");
      e.so = *score;
    } else if (fields.size() == 3 && (fields[1] == "INT" || fields[1] == "NEG")) {
      auto value = detail::parse_number(fields[2]);
      if (!value) throw bad("bad value \"" + std::string(fields[2]) + "\"");
      if (fields[1] == "INT") {
        if (*value < -100.0 || *value > 400.0) throw bad("intensifier outside [-100, 400]");
        e.intensifier_pct = *value;
      } else {
        e.is_negation = true;
        e.so = *value;
      }
    } else {
      throw bad("expected word<TAB>score, word<TAB>INT<TAB>pct or word<TAB>NEG<TAB>shift");
    }
    if (auto [it, fresh] = first_seen.emplace(e.word, line_no); !fresh) {
      lex.warn("lexicon line " + std::to_string(line_no) + ": duplicate \"" + e.word +
               "\" (first on line " + std::to_string(it->second) + "), keeping last");
    }
    lex.add(std::move(e));
  }
  return lex;
}

inline Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read lexicon " + path.string());
  return parse_lexicon(in);
}

struct ScoredToken {
  std::string token;
  double adjusted_so = 0.0;
};

struct OrientationResult {
  double total = 0.0;
  std::vector<ScoredToken> per_token;
  Polarity polarity = Polarity::Neutral;
};

// Left-to-right scan. Modifiers wait for the next sentiment word; words not
// in the lexicon neither score nor consume a pending modifier. Several pending
// modifiers apply nearest-first, so "not very good" is (3 * 1.25) - 4.
// Modifiers still pending at the end contribute nothing.
inline OrientationResult semantic_orientation(std::span<const Token> tokens,
                                              const Lexicon& lexicon) {
  OrientationResult out;
  std::vector<const LexiconEntry*> pending;
  for (const auto& tok : tokens) {
    const auto* entry = lexicon.find(tok.normalized);
    if (entry == nullptr) continue;
    if (entry->role() != LexiconRole::Sentiment) {
      pending.push_back(entry);
      continue;
    }
    double so = entry->so;
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      const auto* mod = *it;
      if (mod->role() == LexiconRole::Negation) {
        so -= mod->so;
      } else {
        so *= 1.0 + *mod->intensifier_pct / 100.0;
      }
    }
    pending.clear();
    out.per_token.push_back({tok.surface, so});
    out.total += so;
  }
  out.polarity = polarity_of(out.total);
  return out;
}

inline Polarity token_polarity(std::span<const Token> tokens, const Lexicon& lexicon) {
  return semantic_orientation(tokens, lexicon).polarity;
}

}  // namespace stancenet
