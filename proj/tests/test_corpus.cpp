#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace stancenet;
using namespace testing_support;

namespace {

std::string without_space(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!is_space(c)) out.push_back(c);
  return out;
}

// Random text over a vocabulary that stresses the splitter: abbreviations,
// quotes, hashtags, URLs and terminal punctuation.
std::string random_text(std::mt19937& rng) {
  static const std::vector<std::string> vocab{
      "Mr.", "Dr.",  "U.S.",  "note", "ban",  "The",     "People", "said", "\"", "\xE2\x80\x9C",
      "\xE2\x80\x9D", "!",    "?",   ".",    "#tag", "@user", "http://t.co/x", "www.a.b",
      "queues", "ATM", "it's", "3.5", "well-known", ",", "  ", "\t", "Modi"};
  std::uniform_int_distribution<std::size_t> len(0, 25), pick(0, vocab.size() - 1);
  std::string out;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += vocab[pick(rng)];
  }
  return out;
}

}  // namespace

TEST(Preprocess, StripsHashtagsMentionsAndUrls) {
  EXPECT_EQ(preprocess_message("note ban hurts #demonetization @user1 http://t.co/x"),
            "note ban hurts");
}

TEST(Preprocess, CleanInputIsUnchanged) {
  EXPECT_EQ(preprocess_message("plain text only"), "plain text only");
}

TEST(Preprocess, AllRemovableInputGivesEmptyText) {
  EXPECT_EQ(preprocess_message("#a @b http://c"), "");
}

TEST(Preprocess, WwwAndHttpsAreUrls) {
  EXPECT_EQ(preprocess_message("see  www.x.org and HTTPS://y.z\tnow"), "see and now");
}

TEST(Preprocess, IdempotentOnRandomInput) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto text = random_text(rng);
    auto once = preprocess_message(text);
    EXPECT_EQ(preprocess_message(once), once) << text;
    for (auto tok : split_whitespace(once)) {
      EXPECT_NE(tok.front(), '#');
      EXPECT_NE(tok.front(), '@');
      EXPECT_FALSE(starts_with_icase(tok, "http://") || starts_with_icase(tok, "www."));
    }
  }
}

TEST(SplitSentences, CanonicalSplit) {
  auto s = split_sentences("A ends. B starts.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "A ends.");
  EXPECT_EQ(s[1].text, "B starts.");
  EXPECT_EQ(s[1].index, 1u);
}

TEST(SplitSentences, EmptyText) { EXPECT_TRUE(split_sentences("").empty()); }

TEST(SplitSentences, AbbreviationDoesNotSplit) {
  auto s = split_sentences("Mr. Modi spoke. People listened.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Mr. Modi spoke.");
}

TEST(SplitSentences, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(split_sentences("It rose 3.5 percent. then fell.").size(), 1u);
}

TEST(SplitSentences, QuestionAndClosingQuote) {
  auto s = split_sentences("Is it fair?\" He asked. \"Yes!\" she said.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].text, "Is it fair?\"");
}

TEST(SplitSentences, OffsetsAreAscendingAndInBounds) {
  std::string text = "One two. Three four? Five six! Seven.";
  auto s = split_sentences(text);
  std::size_t last = 0;
  for (const auto& x : s) {
    EXPECT_LE(last, x.begin);
    EXPECT_LT(x.begin, x.end);
    EXPECT_LE(x.end, text.size());
    EXPECT_EQ(text.substr(x.begin, x.end - x.begin), x.text);
    last = x.end;
  }
}

TEST(SplitSentences, SegmentationIsTotal) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto text = random_text(rng);
    std::string joined;
    for (const auto& s : split_sentences(text)) joined += s.text;
    EXPECT_EQ(without_space(joined), without_space(text)) << text;
  }
}

TEST(Tokenize, PunctuationIsSeparate) {
  EXPECT_EQ(surfaces(tokenize("very good!")), (std::vector<std::string>{"very", "good", "!"}));
}

TEST(Tokenize, QuotesAreTokens) {
  EXPECT_EQ(surfaces(tokenize("\"quoted\"")),
            (std::vector<std::string>{"\"", "quoted", "\""}));
}

TEST(Tokenize, CurlyQuotesAreTokens) {
  auto toks = tokenize("\xE2\x80\x9Chi\xE2\x80\x9D");
  ASSERT_EQ(toks.size(), 3u);
  EXPECT_TRUE(is_quote(toks[0]));
  EXPECT_TRUE(is_quote(toks[2]));
}

TEST(Tokenize, CapitalizationFlag) {
  auto toks = tokenize("ATM queues");
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_TRUE(toks[0].is_capitalized);
  EXPECT_FALSE(toks[1].is_capitalized);
  EXPECT_EQ(toks[0].normalized, "atm");
}

TEST(Tokenize, ContractionsHyphensAndNumbersStayWhole) {
  EXPECT_EQ(surfaces(tokenize("people's well-known 3.5, don't")),
            (std::vector<std::string>{"people's", "well-known", "3.5", ",", "don't"}));
}

TEST(Tokenize, TokensReconstructText) {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    auto text = random_text(rng);
    std::string joined;
    for (const auto& t : tokenize(text)) {
      EXPECT_FALSE(t.surface.empty());
      EXPECT_EQ(t.normalized, to_lower(t.surface));
      joined += t.surface;
    }
    EXPECT_EQ(joined, without_space(text)) << text;
  }
}

TEST(LoadDocuments, ThreeRecords) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"One.\"}\n{\"id\":\"b\",\"text\":\"Two.\"}\n"
      "{\"id\":\"c\",\"text\":\"Three.\"}\n");
  auto r = parse_documents(in, DocumentKind::Article);
  EXPECT_EQ(r.documents.size(), 3u);
  EXPECT_TRUE(r.errors.empty());
}

TEST(LoadDocuments, EmptyInput) {
  std::istringstream in("");
  auto r = parse_documents(in, DocumentKind::Article);
  EXPECT_TRUE(r.documents.empty());
  EXPECT_TRUE(r.errors.empty());
}

TEST(LoadDocuments, MalformedRecordIsCollectedWithLineNumber) {
  std::istringstream in(
      "{\"id\":\"a\",\"text\":\"One.\"}\n{\"id\":\"b\",\"text\":\n{\"id\":\"c\",\"text\":\"x\"}\n");
  auto r = parse_documents(in, DocumentKind::Article);
  EXPECT_EQ(r.documents.size(), 2u);
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 2u);
}

TEST(LoadDocuments, DuplicateIdIsAnError) {
  std::istringstream in("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n");
  auto r = parse_documents(in, DocumentKind::Article);
  EXPECT_EQ(r.documents.size(), 1u);
  EXPECT_EQ(r.errors.size(), 1u);
}

TEST(LoadDocuments, MessagesArePreprocessed) {
  std::istringstream in("{\"id\":\"m\",\"text\":\"good move #x @y\"}\n");
  auto r = parse_documents(in, DocumentKind::Message);
  ASSERT_EQ(r.documents.size(), 1u);
  EXPECT_EQ(r.documents[0].raw_text, "good move");
  EXPECT_EQ(r.documents[0].kind, DocumentKind::Message);
}

TEST(LoadDocuments, MissingFileIsInputError) {
  try {
    load_documents("/nonexistent/file.jsonl", DocumentKind::Article);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
  }
}

TEST(LoadDocuments, Deterministic) {
  std::string data = "{\"id\":\"a\",\"text\":\"Mr. X said \\\"hi\\\". Y left!\"}\n";
  std::istringstream a(data), b(data);
  EXPECT_EQ(parse_documents(a, DocumentKind::Article).documents,
            parse_documents(b, DocumentKind::Article).documents);
}

TEST(WordList, CommentsAndCase) {
  std::istringstream in("# header\nSaid\n  claims  \n\n# x\n");
  auto w = parse_word_list(in);
  EXPECT_EQ(w, (WordSet{"said", "claims"}));
}
