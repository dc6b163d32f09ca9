#pragma once

// Target identification: RAKE-style key-phrases scored by phrase frequency
// times summed word frequency, selected above mean + one standard deviation,
// plus rule-based person names (key-players).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stancenet/corpus.hpp"
#include "stancenet/error.hpp"
#include "stancenet/resources.hpp"

namespace stancenet {

using WordSequence = std::vector<std::string>;

struct Phrase {
  WordSequence words;
  std::uint64_t cooccurrence_freq = 0;
  std::uint64_t importance = 0;

  std::string text() const { return join(words, " "); }
};

struct CorpusStats {
  std::map<std::string, std::uint64_t, std::less<>> word_freq;
  std::map<WordSequence, std::uint64_t> phrase_freq;
};

enum class TargetKind { KeyPhrase, KeyPlayer };

inline std::string_view to_string(TargetKind k) {
  return k == TargetKind::KeyPhrase ? "key-phrase" : "key-player";
}

struct Target {
  std::string id;
  TargetKind kind = TargetKind::KeyPhrase;
  std::set<std::string> surface_forms;
  std::optional<std::uint64_t> importance;

  bool operator==(const Target&) const = default;
};

// Summary of the candidate score distribution (candidate count, selected
// count, max / mean / SD of importance) plus the resulting threshold.
struct PhraseStats {
  std::size_t candidates = 0;
  std::size_t selected = 0;
  double max_importance = 0.0;
  double mean_importance = 0.0;
  double sd_importance = 0.0;
  double threshold = 0.0;

  bool operator==(const PhraseStats&) const = default;
};

struct TargetSet {
  std::vector<Target> key_phrases;
  std::vector<Target> key_players;
  double threshold = 0.0;
  PhraseStats phrase_stats;

  std::vector<const Target*> all() const {
    std::vector<const Target*> out;
    for (const auto& t : key_phrases) out.push_back(&t);
    for (const auto& t : key_players) out.push_back(&t);
    return out;
  }

  const Target* find(std::string_view id) const {
    for (const auto* t : all()) {
      if (t->id == id) return t;
    }
    return nullptr;
  }

  std::size_t size() const { return key_phrases.size() + key_players.size(); }
};

inline constexpr std::string_view kKeyPhrasePrefix = "kp:";
inline constexpr std::string_view kKeyPlayerPrefix = "kl:";

// Maximal runs of non-stopword word tokens inside each sentence, merged by
// normalized word sequence with summed run counts.
inline std::vector<Phrase> extract_candidate_phrases(const std::vector<Document>& docs,
                                                     const WordSet& stoplist) {
  std::map<WordSequence, std::uint64_t> runs;
  for (const auto& doc : docs) {
    for (const auto& sentence : doc.sentences) {
      WordSequence current;
      auto close = [&] {
        if (!current.empty()) ++runs[current];
        current.clear();
      };
      for (const auto& tok : sentence.tokens) {
        if (!is_word(tok) || stoplist.contains(tok.normalized)) {
          close();
        } else {
          current.push_back(tok.normalized);
        }
      }
      close();
    }
  }
  std::vector<Phrase> out;
  out.reserve(runs.size());
  for (auto& [words, count] : runs) out.push_back({words, count, 0});
  return out;
}

// Word frequencies over every token of the corpus, and exact contiguous
// occurrence counts for each candidate word sequence.
inline CorpusStats compute_corpus_stats(const std::vector<Document>& docs,
                                        const std::vector<Phrase>& phrases) {
  CorpusStats stats;
  std::size_t max_len = 0;
  for (const auto& p : phrases) {
    stats.phrase_freq.emplace(p.words, 0);
    max_len = std::max(max_len, p.words.size());
  }
  WordSequence window;
  for (const auto& doc : docs) {
    for (const auto& sentence : doc.sentences) {
      const auto& toks = sentence.tokens;
      for (const auto& tok : toks) ++stats.word_freq[tok.normalized];
      for (std::size_t i = 0; i < toks.size(); ++i) {
        window.clear();
        for (std::size_t len = 1; len <= max_len && i + len <= toks.size(); ++len) {
          window.push_back(toks[i + len - 1].normalized);
          if (auto it = stats.phrase_freq.find(window); it != stats.phrase_freq.end())
            ++it->second;
        }
      }
    }
  }
  return stats;
}

// I(P) = f(P) * sum_i g(w_i).
inline std::uint64_t score_phrase(const Phrase& phrase, const CorpusStats& stats) {
  auto f = stats.phrase_freq.find(phrase.words);
  if (f == stats.phrase_freq.end())
    throw stage_error("no frequency for phrase \"" + phrase.text() + "\"");
  std::uint64_t word_sum = 0;
  for (const auto& w : phrase.words) {
    auto g = stats.word_freq.find(w);
    if (g == stats.word_freq.end())
      throw stage_error("no frequency for word \"" + w + "\"");
    word_sum += g->second;
  }
  return f->second * word_sum;
}

inline void score_phrases(std::vector<Phrase>& phrases, const CorpusStats& stats) {
  for (auto& p : phrases) {
    p.cooccurrence_freq = stats.phrase_freq.at(p.words);
    p.importance = score_phrase(p, stats);
  }
}

struct KeyPhraseSelection {
  std::vector<Target> targets;
  double threshold = 0.0;
  PhraseStats stats;
};

inline Target phrase_target(const Phrase& p) {
  Target t;
  t.id = std::string(kKeyPhrasePrefix) + p.text();
  t.kind = TargetKind::KeyPhrase;
  t.surface_forms = {p.text()};
  t.importance = p.importance;
  return t;
}

// Threshold = mean + population standard deviation of importance; phrases at
// or above it are kept.
inline KeyPhraseSelection select_key_phrases(const std::vector<Phrase>& phrases) {
  if (phrases.empty()) throw stage_error("no candidate phrases");
  const double n = static_cast<double>(phrases.size());
  double sum = 0.0;
  double max = 0.0;
  for (const auto& p : phrases) {
    sum += static_cast<double>(p.importance);
    max = std::max(max, static_cast<double>(p.importance));
  }
  const double mean = sum / n;
  double sq = 0.0;
  for (const auto& p : phrases) {
    const double d = static_cast<double>(p.importance) - mean;
    sq += d * d;
  }
  const double sd = std::sqrt(sq / n);
  const double threshold = mean + sd;

  // I >= mean + sd, decided in integers: with S = sum I and Q = sum I^2,
  // n*I - S >= 0 and (n*I - S)^2 >= n*Q - S^2.
  using wide = unsigned __int128;
  wide big_s = 0, big_q = 0;
  for (const auto& p : phrases) {
    big_s += p.importance;
    big_q += static_cast<wide>(p.importance) * p.importance;
  }
  const wide count = phrases.size();
  const wide spread = count * big_q - big_s * big_s;
  std::vector<const Phrase*> chosen;
  for (const auto& p : phrases) {
    const wide scaled = count * p.importance;
    if (scaled >= big_s && (scaled - big_s) * (scaled - big_s) >= spread) chosen.push_back(&p);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Phrase* a, const Phrase* b) {
    if (a->importance != b->importance) return a->importance > b->importance;
    return a->words < b->words;
  });

  KeyPhraseSelection out;
  out.threshold = threshold;
  for (const auto* p : chosen) out.targets.push_back(phrase_target(*p));
  out.stats = {phrases.size(), chosen.size(), max, mean, sd, threshold};
  return out;
}

struct KeyPlayerOptions {
  WordSet stopwords;
  WordSet honorifics;
  WordSet verbs;
  // Names that must never become key-players (e.g. the event's own aliases).
  WordSet excluded;
};

namespace detail {

inline std::size_t first_word_index(const std::vector<Token>& toks) {
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_word(toks[i])) return i;
  }
  return toks.size();
}

struct NameRun {
  std::vector<std::string> words;  // surfaces
  std::size_t start = 0;
  std::size_t end = 0;  // token index one past the run
  bool honorific = false;
};

// Maximal runs of capitalized word tokens; "Mr." style honorifics may bridge
// the period. Leading honorifics are stripped and mark the run.
inline std::vector<NameRun> capitalized_runs(const std::vector<Token>& toks,
                                             const WordSet& honorifics) {
  std::vector<NameRun> runs;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_word(toks[i]) || !toks[i].is_capitalized) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::vector<std::size_t> members;
    while (j < toks.size()) {
      if (is_word(toks[j]) && toks[j].is_capitalized) {
        members.push_back(j);
        ++j;
      } else if (toks[j].surface == "." && j > i &&
                 honorifics.contains(toks[j - 1].normalized) && j + 1 < toks.size() &&
                 is_word(toks[j + 1]) && toks[j + 1].is_capitalized) {
        ++j;
      } else {
        break;
      }
    }
    NameRun run;
    run.end = j;
    std::size_t k = 0;
    while (k < members.size() && honorifics.contains(toks[members[k]].normalized)) {
      run.honorific = true;
      ++k;
    }
    run.start = k < members.size() ? members[k] : j;
    for (; k < members.size(); ++k) run.words.push_back(toks[members[k]].surface);
    if (!run.words.empty()) runs.push_back(std::move(run));
    i = j;
  }
  return runs;
}

inline bool is_calendar_word(std::string_view w) {
  static const WordSet words{"monday",   "tuesday", "wednesday", "thursday", "friday",
                             "saturday", "sunday",  "january",   "february", "march",
                             "april",    "june",    "july",      "august",   "september",
                             "october",  "november", "december"};
  return words.contains(w);
}

}  // namespace detail

// Rule-based person-name extraction. A capitalized run is a name unless it
// contains a stopword or is only day and month names. A run at the very start of a sentence needs extra
// support: a leading honorific, or two or more words followed by a verb, or
// its first word seen capitalized mid-sentence elsewhere in the corpus.
// Multi-word names also answer to their final word when that surname is not
// shared with another extracted name.
inline std::vector<Target> extract_key_players(const std::vector<Document>& docs,
                                               const KeyPlayerOptions& opts) {
  std::set<std::string> mid_sentence_caps;
  for (const auto& doc : docs) {
    for (const auto& s : doc.sentences) {
      const auto first = detail::first_word_index(s.tokens);
      for (std::size_t i = first + 1; i < s.tokens.size(); ++i) {
        if (is_word(s.tokens[i]) && s.tokens[i].is_capitalized)
          mid_sentence_caps.insert(s.tokens[i].normalized);
      }
    }
  }

  // normalized name -> first-seen surface
  std::map<std::string, std::string> names;
  for (const auto& doc : docs) {
    for (const auto& s : doc.sentences) {
      const auto& toks = s.tokens;
      const auto first = detail::first_word_index(toks);
      for (const auto& run : detail::capitalized_runs(toks, opts.honorifics)) {
        std::vector<std::string> lowered;
        bool has_stopword = false;
        bool all_calendar = true;
        for (const auto& w : run.words) {
          lowered.push_back(to_lower(w));
          has_stopword = has_stopword || opts.stopwords.contains(lowered.back());
          all_calendar = all_calendar && detail::is_calendar_word(lowered.back());
        }
        if (has_stopword || all_calendar) continue;
        const std::string key = join(lowered, " ");
        if (opts.excluded.contains(key)) continue;

        if (run.start == first && !run.honorific) {
          bool verb_follows = run.end < toks.size() &&
                              is_verb_candidate(toks[run.end], opts.verbs);
          bool supported = (run.words.size() >= 2 && verb_follows) ||
                           mid_sentence_caps.contains(lowered.front());
          if (!supported) continue;
        }
        names.emplace(key, join(run.words, " "));
      }
    }
  }

  // Surnames of multi-word names, and how many names share each.
  std::map<std::string, std::vector<std::string>> by_surname;
  for (const auto& [key, surface] : names) {
    auto space = key.rfind(' ');
    if (space == std::string::npos) continue;
    auto surname = key.substr(space + 1);
    if (opts.honorifics.contains(surname)) continue;
    by_surname[surname].push_back(key);
  }

  std::vector<Target> out;
  for (const auto& [key, surface] : names) {
    if (key.find(' ') == std::string::npos) {
      auto it = by_surname.find(key);
      if (it != by_surname.end() && it->second.size() == 1) continue;  // merged
    }
    Target t;
    t.id = std::string(kKeyPlayerPrefix) + key;
    t.kind = TargetKind::KeyPlayer;
    t.surface_forms.insert(surface);
    if (auto space = surface.rfind(' '); space != std::string::npos) {
      auto surname = to_lower(surface.substr(space + 1));
      auto it = by_surname.find(surname);
      if (it != by_surname.end() && it->second.size() == 1)
        t.surface_forms.insert(surface.substr(space + 1));
    }
    out.push_back(std::move(t));
  }
  return out;
}

struct TargetOptions {
  WordSet stopwords;
  WordSet honorifics;
  WordSet verbs;
  // Event names; never targets themselves.
  WordSet event_aliases;
};

inline TargetOptions target_options(const LanguageResources& res, WordSet event_aliases) {
  WordSet aliases;
  for (const auto& a : event_aliases) aliases.insert(to_lower(a));
  WordSet verbs = res.verbs;
  verbs.insert(res.reporting_verbs.begin(), res.reporting_verbs.end());
  return {res.stopwords, res.honorifics, std::move(verbs), std::move(aliases)};
}

inline TargetSet build_target_set(const std::vector<Document>& docs,
                                  const TargetOptions& opts) {
  auto phrases = extract_candidate_phrases(docs, opts.stopwords);
  std::erase_if(phrases, [&](const Phrase& p) { return opts.event_aliases.contains(p.text()); });
  auto stats = compute_corpus_stats(docs, phrases);
  score_phrases(phrases, stats);
  auto selection = select_key_phrases(phrases);

  TargetSet set;
  set.key_phrases = std::move(selection.targets);
  set.threshold = selection.threshold;
  set.phrase_stats = selection.stats;
  set.key_players = extract_key_players(
      docs, {opts.stopwords, opts.honorifics, opts.verbs, opts.event_aliases});
  return set;
}

}  // namespace stancenet
