#pragma once

// One fixture sentence per conjunction rule, plus a variant with the target
// mentions moved into a clause the rule ignores.

#include <string>
#include <vector>

#include "stancenet/stancenet.hpp"

namespace conjunctions {

using namespace stancenet;

inline TargetSet targets() {
  TargetSet t;
  auto player = [](std::string key, std::set<std::string> forms) {
    return Target{"kl:" + key, TargetKind::KeyPlayer, std::move(forms), std::nullopt};
  };
  auto phrase = [](std::string text) {
    return Target{"kp:" + text, TargetKind::KeyPhrase, {text}, std::nullopt};
  };
  t.key_players = {player("bihar cm", {"Bihar CM"}), player("mayawati", {"Mayawati"}),
                   player("mamata", {"Mamata"}), player("modi", {"Modi"}),
                   player("rahul", {"Rahul"})};
  t.key_phrases = {phrase("farmers"), phrase("people"), phrase("cashless transactions")};
  return t;
}

inline const WordSet& aliases() {
  static const WordSet a{"demonetization", "note ban"};
  return a;
}

inline Lexicon lexicon() {
  Lexicon lex;
  for (auto [w, s] : std::vector<std::pair<const char*, double>>{
           {"supported", 2}, {"corruption", -2}, {"attacked", -3}, {"criticised", -2},
           {"disappointment", -3}, {"frustrated", -2}, {"trust", 2}}) {
    lex.add({w, s, std::nullopt, false});
  }
  lex.add({"don't", 4, std::nullopt, true});
  return lex;
}

struct Row {
  int number;
  RuleTag rule;
  std::string designated;   // mentions in the clause the rule uses
  std::vector<PolarityAssertion> expected;
  std::string moved;        // mentions only in an ignored clause
};

inline std::vector<Row> rows() {
  using R = RuleTag;
  return {
      {1, R::Conj1,
       "Bihar CM supported Demonetization because he believed it could curb corruption",
       {{"kl:bihar cm", "EVENT", Sign::Pos, "c1", 0, R::Conj1}},
       "He supported it because Bihar CM believed demonetization could curb corruption"},
      {2, R::Conj2,
       "Although Mayawati supported demonetization, she criticised the rollout",
       {{"kl:mayawati", "EVENT", Sign::Pos, "c1", 0, R::Conj2}},
       "Although she supported it, Mayawati criticised demonetization"},
      {3, R::Conj3,
       "Rahul may march separately, but Mamata attacked demonetization together",
       {{"kl:mamata", "EVENT", Sign::Neg, "c1", 0, R::Conj3}},
       "Mamata attacked demonetization separately, but they may march together"},
      {4, R::Conj4,
       "Demonetization has caused disappointment for farmers and people are frustrated "
       "with note ban",
       {{"EVENT", "kp:farmers", Sign::Neg, "c1", 0, R::Conj4},
        {"kp:people", "EVENT", Sign::Neg, "c1", 0, R::Conj4}},
       ""},
      {5, R::Conj5,
       "People don't trust cashless transactions which Modi is advertising for",
       {{"kp:people", "kp:cashless transactions", Sign::Neg, "c1", 0, R::Conj5}},
       "Voters ignore everything which people don't trust about cashless transactions"},
  };
}

}  // namespace conjunctions
