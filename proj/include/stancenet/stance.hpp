#pragma once

// Message stance toward the event: for every target the message mentions,
// the message's sentiment sign times the target's polarity toward the event.
// Contributions are summed and the sign of the sum is the stance.

#include <optional>
#include <string>
#include <vector>

#include "stancenet/corpus.hpp"
#include "stancenet/pass1.hpp"
#include "stancenet/sentiment.hpp"
#include "stancenet/signed_network.hpp"

namespace stancenet {

struct Contribution {
  std::string target;
  int sentiment = 0;  // S(message, target) in {-1, 0, +1}
  int polarity = 0;   // R(event, target); 0 when unresolved
  int product = 0;

  bool operator==(const Contribution&) const = default;
};

struct StanceResult {
  std::string message_id;
  Polarity stance = Polarity::Neutral;
  std::vector<Contribution> contributions;
  // No target or event mention at all; stance is neutral by default.
  bool unmatched = true;

  bool operator==(const StanceResult&) const = default;
};

struct StanceOptions {
  // When set, sentiment toward a target is read from this many tokens on
  // either side of its mention instead of the whole message.
  std::optional<std::size_t> window;
};

// Read-only view of the resolved network used for classification.
struct PolarityLookup {
  std::map<std::string, Sign> resolved;

  static PolarityLookup from(const SignedNetwork& net) { return {net.resolved}; }

  int operator()(const std::string& ref) const {
    if (ref == kEventId) return 1;
    auto it = resolved.find(ref);
    return it == resolved.end() ? 0 : to_int(it->second);
  }
};

inline Polarity sign_stance(int sum) {
  if (sum > 0) return Polarity::Positive;
  if (sum < 0) return Polarity::Negative;
  return Polarity::Neutral;
}

inline StanceResult classify_message(const Document& message, const PolarityLookup& polarity,
                                     const MentionMatcher& matcher, const Lexicon& lex,
                                     const StanceOptions& opts = {}) {
  StanceResult r;
  r.message_id = message.id;

  std::vector<Token> tokens;
  std::vector<TargetMention> mentions;
  for (const auto& s : message.sentences) {
    auto found = find_mentions(s, matcher);
    for (auto& m : found) {
      m.span.begin += tokens.size();
      m.span.end += tokens.size();
      mentions.push_back(std::move(m));
    }
    tokens.insert(tokens.end(), s.tokens.begin(), s.tokens.end());
  }

  const int whole = sign_of(token_polarity(tokens, lex));
  int sum = 0;
  std::set<std::string> seen;
  for (const auto& m : mentions) {
    if (!seen.insert(m.ref).second) continue;
    int sentiment = whole;
    if (opts.window) {
      auto begin = m.span.begin > *opts.window ? m.span.begin - *opts.window : 0;
      auto end = std::min(tokens.size(), m.span.end + *opts.window);
      sentiment = sign_of(token_polarity(
          std::span<const Token>(tokens).subspan(begin, end - begin), lex));
    }
    Contribution c{m.ref, sentiment, polarity(m.ref), 0};
    c.product = c.sentiment * c.polarity;
    sum += c.product;
    r.contributions.push_back(std::move(c));
  }
  r.unmatched = r.contributions.empty();
  r.stance = sign_stance(sum);
  return r;
}

inline StanceResult classify_message(const Document& message, const SignedNetwork& net,
                                     const MentionMatcher& matcher, const Lexicon& lex,
                                     const StanceOptions& opts = {}) {
  return classify_message(message, PolarityLookup::from(net), matcher, lex, opts);
}

inline std::vector<StanceResult> classify_corpus(const std::vector<Document>& messages,
                                                 const PolarityLookup& polarity,
                                                 const MentionMatcher& matcher,
                                                 const Lexicon& lex,
                                                 const StanceOptions& opts = {}) {
  std::vector<StanceResult> out;
  out.reserve(messages.size());
  for (const auto& m : messages) out.push_back(classify_message(m, polarity, matcher, lex, opts));
  return out;
}

}  // namespace stancenet
