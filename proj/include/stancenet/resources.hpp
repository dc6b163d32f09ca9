#pragma once

#include <filesystem>
#include <string_view>

#include "stancenet/corpus.hpp"
#include "stancenet/text.hpp"

namespace stancenet {

// Word lists shipped under data/. Each file is plain text, one entry per line.
struct LanguageResources {
  WordSet stopwords;
  WordSet abbreviations;
  WordSet honorifics;
  WordSet reporting_verbs;
  // Auxiliaries, modals and common finite verbs.
  WordSet verbs;

  static LanguageResources load(const std::filesystem::path& dir) {
    LanguageResources r;
    r.stopwords = load_word_list(dir / "stopwords.txt");
    r.abbreviations = load_word_list(dir / "abbreviations.txt");
    r.honorifics = load_word_list(dir / "honorifics.txt");
    r.reporting_verbs = load_word_list(dir / "reporting_verbs.txt");
    r.verbs = load_word_list(dir / "verbs.txt");
    return r;
  }
};

// Finite-verb stand-in for a POS tagger: listed verbs, reporting verbs, or a
// word of five or more letters ending in "ed".
inline bool is_verb_candidate(const Token& t, const WordSet& verbs,
                              const WordSet& reporting_verbs = {}) {
  if (!is_word(t)) return false;
  const auto& w = t.normalized;
  if (verbs.contains(w) || reporting_verbs.contains(w)) return true;
  return w.size() >= 5 && w.ends_with("ed");
}

}  // namespace stancenet
