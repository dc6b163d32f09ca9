#pragma once

// Document model: loading, message cleanup, sentence splitting and
// tokenization for news articles and short messages.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "stancenet/error.hpp"
#include "stancenet/text.hpp"

namespace stancenet {

struct Token {
  std::string surface;
  std::string normalized;
  bool is_capitalized = false;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::size_t index = 0;
  // Byte range of the sentence inside Document::raw_text.
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

enum class DocumentKind { Article, Message };

struct Document {
  std::string id;
  DocumentKind kind = DocumentKind::Article;
  // For messages this is the text after preprocess_message().
  std::string raw_text;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

struct RecordError {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<Document> documents;
  std::vector<RecordError> errors;
};

namespace detail {

inline bool is_ascii_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || u >= 0x80;
}

// Length of a UTF-8 general-punctuation sequence (U+2000..U+206F) at pos, or 0.
inline std::size_t general_punct_len(std::string_view s, std::size_t pos) {
  if (pos + 2 < s.size() && static_cast<unsigned char>(s[pos]) == 0xE2) {
    auto b1 = static_cast<unsigned char>(s[pos + 1]);
    if (b1 == 0x80 || b1 == 0x81) return 3;
  }
  return 0;
}

inline bool is_right_single_quote(std::string_view s, std::size_t pos) {
  return s.substr(pos, 3) == "\xE2\x80\x99";
}

inline bool word_char_at(std::string_view s, std::size_t pos) {
  return pos < s.size() && general_punct_len(s, pos) == 0 &&
         is_ascii_word_char(s[pos]);
}

}  // namespace detail

inline bool is_quote(const Token& t) {
  return t.surface == "\"" || t.surface == "\xE2\x80\x9C" ||
         t.surface == "\xE2\x80\x9D" || t.surface == "``" ||
         t.surface == "''";
}

inline bool is_word(const Token& t) {
  return !t.surface.empty() && detail::word_char_at(t.surface, 0);
}

inline Token make_token(std::string surface) {
  Token t;
  t.normalized = to_lower(surface);
  t.is_capitalized = !surface.empty() && is_upper(surface.front());
  t.surface = std::move(surface);
  return t;
}

// Splits on whitespace and punctuation. Apostrophes and hyphens between word
// characters stay inside the word ("don't", "ball-tampering"), as do '.' and
// ',' between digits. Every other punctuation character, including each
// quote mark, becomes its own token.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(make_token(std::move(word)));
    word.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      flush();
      ++i;
      continue;
    }
    if (std::size_t n = detail::general_punct_len(text, i); n > 0) {
      if (detail::is_right_single_quote(text, i) && !word.empty() &&
          detail::word_char_at(text, i + n)) {
        word.append(text.substr(i, n));
      } else {
        flush();
        tokens.push_back(make_token(std::string(text.substr(i, n))));
      }
      i += n;
      continue;
    }
    if (detail::is_ascii_word_char(c)) {
      word.push_back(c);
      ++i;
      continue;
    }
    bool joins = false;
    if (!word.empty() && detail::word_char_at(text, i + 1)) {
      if (c == '\'' || c == '-') {
        joins = true;
      } else if ((c == '.' || c == ',') &&
                 std::isdigit(static_cast<unsigned char>(word.back())) &&
                 std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        joins = true;
      }
    }
    if (joins) {
      word.push_back(c);
    } else {
      flush();
      tokens.push_back(make_token(std::string(1, c)));
    }
    ++i;
  }
  flush();
  return tokens;
}

inline const WordSet& default_abbreviations() {
  static const WordSet kAbbreviations = {
      "mr.",  "mrs.", "ms.",  "dr.",   "prof.", "sr.",  "jr.",  "st.",
      "u.s.", "u.k.", "u.n.", "e.g.",  "i.e.",  "etc.", "vs.",  "inc.",
      "ltd.", "co.",  "gen.", "col.",  "lt.",   "sgt.", "rep.", "sen.",
      "gov.", "no.",  "jan.", "feb.",  "aug.",  "sept.", "oct.", "nov.",
      "dec.", "rs.",  "govt."};
  return kAbbreviations;
}

namespace detail {

inline bool is_closing_char(std::string_view s, std::size_t pos) {
  char c = s[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return true;
  return s.substr(pos, 3) == "\xE2\x80\x9D" || s.substr(pos, 3) == "\xE2\x80\x99";
}

inline std::size_t closing_len(std::string_view s, std::size_t pos) {
  if (s[pos] == '"' || s[pos] == '\'' || s[pos] == ')' || s[pos] == ']') return 1;
  return 3;
}

// True when a sentence may start at pos: a capital letter, optionally after
// an opening quote or parenthesis.
inline bool starts_sentence(std::string_view s, std::size_t pos) {
  while (pos < s.size()) {
    char c = s[pos];
    if (c == '"' || c == '\'' || c == '(') {
      ++pos;
    } else if (s.substr(pos, 3) == "\xE2\x80\x9C" ||
               s.substr(pos, 3) == "\xE2\x80\x98") {
      pos += 3;
    } else {
      return is_upper(c);
    }
  }
  return false;
}

inline std::string word_before(std::string_view s, std::size_t period_pos) {
  std::size_t start = period_pos;
  while (start > 0 && !is_space(s[start - 1])) --start;
  while (start < period_pos && (s[start] == '"' || s[start] == '(' ||
                                s[start] == '\'')) {
    ++start;
  }
  return to_lower(s.substr(start, period_pos - start + 1));
}

}  // namespace detail

// Boundaries fall after '.', '?' or '!' (plus any closing quotes) when the
// next non-space character starts a capitalized word. A '.' that ends a
// listed abbreviation never splits.
inline std::vector<Sentence> split_sentences(
    std::string_view text, const WordSet& abbreviations = default_abbreviations()) {
  std::vector<Sentence> out;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) return;
    Sentence s;
    s.index = out.size();
    s.begin = begin;
    s.end = end;
    s.text = std::string(text.substr(begin, end - begin));
    s.tokens = tokenize(s.text);
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && (text[j] == '.' || text[j] == '?' || text[j] == '!'))
      ++j;
    while (j < text.size() && detail::is_closing_char(text, j))
      j += detail::closing_len(text, j);
    if (j >= text.size() || !is_space(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < text.size() && is_space(text[k])) ++k;
    bool abbreviation =
        c == '.' && j == i + 1 && abbreviations.contains(detail::word_before(text, i));
    if (k < text.size() && detail::starts_sentence(text, k) && !abbreviation) {
      emit(start, j);
      start = k;
    }
    i = k;
  }
  emit(start, text.size());
  return out;
}

// Drops every whitespace-separated token that is a hashtag, a user mention or
// a URL ("http://", "https://", "www." prefixes) and collapses whitespace.
inline std::string preprocess_message(std::string_view raw) {
  std::vector<std::string_view> kept;
  for (auto tok : split_whitespace(raw)) {
    if (tok.front() == '#' || tok.front() == '@') continue;
    if (starts_with_icase(tok, "http://") || starts_with_icase(tok, "https://") ||
        starts_with_icase(tok, "www.")) {
      continue;
    }
    kept.push_back(tok);
  }
  return join(kept, " ");
}

inline Document make_document(std::string id, DocumentKind kind, std::string_view text,
                              const WordSet& abbreviations = default_abbreviations()) {
  Document doc;
  doc.id = std::move(id);
  doc.kind = kind;
  doc.raw_text = kind == DocumentKind::Message ? preprocess_message(text)
                                               : std::string(text);
  doc.sentences = split_sentences(doc.raw_text, abbreviations);
  return doc;
}

// Reads line-delimited {"id": string, "text": string} records. Malformed
// records and duplicate ids are collected as errors and skipped.
inline LoadResult parse_documents(std::istream& in, DocumentKind kind,
                                  const WordSet& abbreviations = default_abbreviations()) {
  LoadResult result;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto record = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) {
      result.errors.push_back({line_no, "not a JSON object"});
      continue;
    }
    auto id = record.find("id");
    auto text = record.find("text");
    if (id == record.end() || !id->is_string()) {
      result.errors.push_back({line_no, "missing string field \"id\""});
      continue;
    }
    if (text == record.end() || !text->is_string()) {
      result.errors.push_back({line_no, "missing string field \"text\""});
      continue;
    }
    auto id_str = id->get<std::string>();
    if (!seen.insert(id_str).second) {
      result.errors.push_back({line_no, "duplicate id \"" + id_str + "\""});
      continue;
    }
    result.documents.push_back(
        make_document(std::move(id_str), kind, text->get<std::string>(), abbreviations));
  }
  return result;
}

inline LoadResult load_documents(const std::filesystem::path& path, DocumentKind kind,
                                 const WordSet& abbreviations = default_abbreviations()) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path.string());
  return parse_documents(in, kind, abbreviations);
}

// Text of tokens [begin, end) with single spaces, punctuation attached to the
// preceding word.
inline std::string render_tokens(const std::vector<Token>& tokens, std::size_t begin,
                                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    bool attach = !is_word(t) && !is_quote(t) && t.surface != "(";
    if (!out.empty() && !attach) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace stancenet
