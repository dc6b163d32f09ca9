#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace stancenet;
using namespace testing_support;

namespace {

TargetSet stance_targets() {
  TargetSet t;
  t.key_players = {player("mamata", {"Mamata"}), player("modi", {"Modi"})};
  t.key_phrases = {phrase("bjp government"), phrase("cashless transactions"), phrase("queues")};
  return t;
}

const WordSet& stance_aliases() {
  static const WordSet a{"note ban", "demonetization"};
  return a;
}

const Lexicon& stance_lexicon() {
  static const Lexicon lex = lexicon_from(
      "major\t2\n"
      "reduced\t3\n"
      "terrorism\t-1\n"
      "damage\t-3\n"
      "looting\t-4\n"
      "good\t3\n"
      "bad\t-3\n"
      "huge\tINT\t50\n"
      "very\tINT\t25\n"
      "not\tNEG\t4\n");
  return lex;
}

PolarityLookup lookup(std::map<std::string, Sign> resolved) { return {std::move(resolved)}; }

StanceResult classify(std::string_view text, const PolarityLookup& polarity,
                      const StanceOptions& opts = {}) {
  MentionMatcher matcher(stance_targets(), stance_aliases());
  return classify_message(message("m", text), polarity, matcher, stance_lexicon(), opts);
}

// Real-world alignment: the government and Modi back the event, Mamata
// opposes it.
PolarityLookup sample_network() {
  return lookup({{"kp:bjp government", Sign::Pos},
                 {"kp:cashless transactions", Sign::Pos},
                 {"kl:modi", Sign::Pos},
                 {"kl:mamata", Sign::Neg}});
}

}  // namespace

TEST(Stance, PositiveMessageAboutSupporter) {
  auto r = classify("This is a major step by BJP government to remove black money",
                    sample_network());
  EXPECT_EQ(r.stance, Polarity::Positive);
  EXPECT_FALSE(r.unmatched);
  ASSERT_EQ(r.contributions.size(), 1u);
  EXPECT_EQ(r.contributions[0], (Contribution{"kp:bjp government", 1, 1, 1}));
}

TEST(Stance, EventMentionedDirectlyPassesSentimentThrough) {
  auto r = classify("note ban has caused huge collateral damage to the Indian economy",
                    sample_network());
  EXPECT_EQ(r.stance, Polarity::Negative);
  ASSERT_EQ(r.contributions.size(), 1u);
  EXPECT_EQ(r.contributions[0], (Contribution{std::string(kEventId), -1, 1, -1}));
}

TEST(Stance, NegativeAboutOpponentIsPositive) {
  auto r = classify("Mamata is bad", sample_network());
  EXPECT_EQ(r.stance, Polarity::Positive);
}

TEST(Stance, UnmatchedMessage) {
  auto r = classify("What a good day", sample_network());
  EXPECT_TRUE(r.unmatched);
  EXPECT_TRUE(r.contributions.empty());
  EXPECT_EQ(r.stance, Polarity::Neutral);
}

TEST(Stance, UnresolvedTargetIsListedWithZeroContribution) {
  auto r = classify("queues are bad", sample_network());
  EXPECT_FALSE(r.unmatched);
  ASSERT_EQ(r.contributions.size(), 1u);
  EXPECT_EQ(r.contributions[0], (Contribution{"kp:queues", -1, 0, 0}));
  EXPECT_EQ(r.stance, Polarity::Neutral);
}

TEST(Stance, RepeatedMentionCountsOnce) {
  auto r = classify("Modi Modi Modi is good but Mamata is good", sample_network());
  ASSERT_EQ(r.contributions.size(), 2u);
  EXPECT_EQ(r.stance, Polarity::Neutral);
}

TEST(Stance, TruthTableForSingleTargetMessages) {
  struct Case {
    const char* text;  // sentiment of the message
    std::optional<Sign> polarity;
    int sentiment, product;
    Polarity expected;
  };
  const std::vector<Case> cases{
      {"Modi is good", Sign::Pos, 1, 1, Polarity::Positive},
      {"Modi is good", std::nullopt, 1, 0, Polarity::Neutral},
      {"Modi is good", Sign::Neg, 1, -1, Polarity::Negative},
      {"Modi spoke", Sign::Pos, 0, 0, Polarity::Neutral},
      {"Modi spoke", std::nullopt, 0, 0, Polarity::Neutral},
      {"Modi spoke", Sign::Neg, 0, 0, Polarity::Neutral},
      {"Modi is bad", Sign::Pos, -1, -1, Polarity::Negative},
      {"Modi is bad", std::nullopt, -1, 0, Polarity::Neutral},
      {"Modi is bad", Sign::Neg, -1, 1, Polarity::Positive},
  };
  for (const auto& c : cases) {
    std::map<std::string, Sign> resolved;
    if (c.polarity) resolved["kl:modi"] = *c.polarity;
    auto r = classify(c.text, lookup(resolved));
    SCOPED_TRACE(std::string(c.text) + " R=" + (c.polarity ? std::string(to_string(*c.polarity)) : "0"));
    ASSERT_EQ(r.contributions.size(), 1u);
    EXPECT_EQ(r.contributions[0].sentiment, c.sentiment);
    EXPECT_EQ(r.contributions[0].polarity, c.polarity ? to_int(*c.polarity) : 0);
    EXPECT_EQ(r.contributions[0].product, c.product);
    EXPECT_EQ(r.stance, c.expected);
    EXPECT_FALSE(r.unmatched);
  }
}

TEST(Stance, MixedCorpus) {
  std::vector<Document> msgs{
      message("1", "This is a major step by BJP government to remove black money"),
      message("2", "cashless transactions has reduced Terrorism"),
      message("4", "note ban has caused huge collateral damage to the Indian economy"),
      message("5", "Mamata claims Modi is looting people's money by note ban"),
  };
  auto results = classify_corpus(msgs, sample_network(),
                                 MentionMatcher(stance_targets(), stance_aliases()),
                                 stance_lexicon());
  ASSERT_EQ(results.size(), 4u);
  std::vector<std::string> ids;
  for (const auto& r : results) ids.push_back(r.message_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"1", "2", "4", "5"}));
  EXPECT_EQ(results[0].stance, Polarity::Positive);
  EXPECT_EQ(results[1].stance, Polarity::Positive);
  EXPECT_EQ(results[2].stance, Polarity::Negative);
  EXPECT_EQ(results[3].stance, Polarity::Negative);
}

TEST(Stance, EmptyCorpus) {
  EXPECT_TRUE(classify_corpus({}, sample_network(), MentionMatcher(stance_targets(), stance_aliases()),
                              stance_lexicon())
                  .empty());
}

TEST(Stance, UnmatchedCorpusIsAllFlagged) {
  std::vector<Document> msgs{message("a", "nice weather"), message("b", "so bad"),
                             message("c", "")};
  for (const auto& r : classify_corpus(msgs, sample_network(),
                                       MentionMatcher(stance_targets(), stance_aliases()),
                                       stance_lexicon())) {
    EXPECT_TRUE(r.unmatched);
    EXPECT_EQ(r.stance, Polarity::Neutral);
  }
}

TEST(Stance, NetworkOverloadMatchesLookup) {
  SignedNetwork net;
  net.add_edge("kl:modi", std::string(kEventId), Sign::Pos);
  propagate(net);
  MentionMatcher matcher(stance_targets(), stance_aliases());
  auto a = classify_message(message("m", "Modi is good"), net, matcher, stance_lexicon());
  auto b = classify_message(message("m", "Modi is good"), PolarityLookup::from(net), matcher,
                            stance_lexicon());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.stance, Polarity::Positive);
}

TEST(Stance, WindowScoresAroundEachMention) {
  auto net = lookup({{"kl:modi", Sign::Pos}, {"kl:mamata", Sign::Pos}});
  const std::string text = "Modi is good and fine . Mamata is very bad";
  auto whole = classify(text, net);
  ASSERT_EQ(whole.contributions.size(), 2u);
  EXPECT_EQ(whole.contributions[0].sentiment, whole.contributions[1].sentiment);

  auto windowed = classify(text, net, StanceOptions{2});
  ASSERT_EQ(windowed.contributions.size(), 2u);
  EXPECT_EQ(windowed.contributions[0].sentiment, 1);
  EXPECT_EQ(windowed.contributions[1].sentiment, 0);
  EXPECT_EQ(windowed.stance, Polarity::Positive);

  auto wider = classify(text, net, StanceOptions{4});
  EXPECT_EQ(wider.contributions[1].sentiment, -1);
}

// Properties

namespace {

std::string random_message(std::mt19937& rng) {
  static const std::vector<std::string> vocab{
      "Modi", "Mamata", "queues", "demonetization", "good", "bad", "not", "very", "huge",
      "damage", "the", "is", "and", "people", "major", "terrorism", "today", "."};
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, vocab.size() - 1);
  std::string text;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) text += vocab[pick(rng)] + " ";
  return text;
}

PolarityLookup random_lookup(std::mt19937& rng) {
  std::uniform_int_distribution<int> three(0, 2);
  std::map<std::string, Sign> resolved;
  for (const char* id : {"kl:modi", "kl:mamata", "kp:queues"}) {
    int v = three(rng);
    if (v == 1) resolved[id] = Sign::Pos;
    if (v == 2) resolved[id] = Sign::Neg;
  }
  return {resolved};
}

Polarity flipped(Polarity p) {
  return p == Polarity::Positive   ? Polarity::Negative
         : p == Polarity::Negative ? Polarity::Positive
                                   : Polarity::Neutral;
}

}  // namespace

TEST(StanceProperties, MirroredLexiconFlipsStance) {
  std::mt19937 rng(211);
  MentionMatcher matcher(stance_targets(), stance_aliases());
  auto mirror = stance_lexicon().mirrored();
  for (int trial = 0; trial < 500; ++trial) {
    auto text = random_message(rng);
    auto net = random_lookup(rng);
    auto a = classify_message(message("m", text), net, matcher, stance_lexicon());
    auto b = classify_message(message("m", text), net, matcher, mirror);
    EXPECT_EQ(b.stance, flipped(a.stance)) << text;
  }
}

TEST(StanceProperties, StanceIsSignOfContributionSum) {
  std::mt19937 rng(223);
  MentionMatcher matcher(stance_targets(), stance_aliases());
  for (int trial = 0; trial < 500; ++trial) {
    auto r = classify_message(message("m", random_message(rng)), random_lookup(rng), matcher,
                              stance_lexicon());
    int sum = 0;
    for (const auto& c : r.contributions) {
      EXPECT_EQ(c.product, c.sentiment * c.polarity);
      sum += c.product;
    }
    EXPECT_EQ(r.stance, sum > 0 ? Polarity::Positive : sum < 0 ? Polarity::Negative : Polarity::Neutral);
    EXPECT_EQ(r.unmatched, r.contributions.empty());
    if (r.unmatched) {
      EXPECT_EQ(r.stance, Polarity::Neutral);
    }
  }
}

TEST(StanceProperties, RemovingZeroContributionMentionKeepsStance) {
  std::mt19937 rng(227);
  MentionMatcher matcher(stance_targets(), stance_aliases());
  std::size_t checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto text = random_message(rng);
    auto net = random_lookup(rng);
    auto r = classify_message(message("m", text), net, matcher, stance_lexicon());
    for (const auto& c : r.contributions) {
      if (c.product != 0 || c.target == kEventId) continue;
      // Drop every token of that single-word target.
      const std::string word = c.target == "kl:modi" ? "Modi" : c.target == "kl:mamata" ? "Mamata" : "queues";
      std::string reduced;
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto next = text.find(' ', pos);
        auto tok = text.substr(pos, next - pos);
        if (tok != word) reduced += tok + " ";
        pos = next + 1;
      }
      auto again = classify_message(message("m", reduced), net, matcher, stance_lexicon());
      EXPECT_EQ(again.stance, r.stance) << text << " -> " << reduced;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}
