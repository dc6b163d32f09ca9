#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stancenet/stancenet.hpp"

namespace testing_support {

using namespace stancenet;

inline const LanguageResources& resources() {
  static const LanguageResources res = LanguageResources::load(STANCENET_DATA_DIR);
  return res;
}

inline ClauseLexicon clause_lexicon() { return ClauseLexicon::from(resources()); }

inline Lexicon lexicon_from(const std::string& tsv) {
  std::istringstream in(tsv);
  return parse_lexicon(in);
}

// Small fixed lexicon so scores never depend on the shipped default.
inline const Lexicon& fixture_lexicon() {
  static const Lexicon lex = lexicon_from(
      "good\t3\n"
      "great\t4\n"
      "support\t2\n"
      "supported\t2\n"
      "reduced\t3\n"
      "corruption\t-2\n"
      "damage\t-3\n"
      "disappointment\t-3\n"
      "frustrated\t-2\n"
      "attacked\t-3\n"
      "looting\t-4\n"
      "against\t-2\n"
      "terrorism\t-1\n"
      "trust\t2\n"
      "bad\t-3\n"
      "very\tINT\t25\n"
      "slightly\tINT\t-50\n"
      "not\tNEG\t4\n"
      "don't\tNEG\t4\n");
  return lex;
}

inline Sentence sentence(std::string_view text) {
  Sentence out;
  out.text = std::string(text);
  out.end = text.size();
  out.tokens = tokenize(text);
  return out;
}

inline Document article(std::string id, std::string_view text) {
  return make_document(std::move(id), DocumentKind::Article, text);
}

inline Document message(std::string id, std::string_view text) {
  return make_document(std::move(id), DocumentKind::Message, text);
}

inline Target phrase(const std::string& text) {
  return {std::string(kKeyPhrasePrefix) + text, TargetKind::KeyPhrase, {text}, std::nullopt};
}

inline Target player(const std::string& key, std::set<std::string> forms) {
  return {std::string(kKeyPlayerPrefix) + key, TargetKind::KeyPlayer, std::move(forms),
          std::nullopt};
}

inline std::vector<std::string> surfaces(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.surface);
  return out;
}

inline std::string clause_text(const Sentence& s, const Clause& c) {
  std::vector<std::string> words;
  for (auto i : c.tokens) words.push_back(s.tokens[i].surface);
  return join(words, " ");
}

}  // namespace testing_support
