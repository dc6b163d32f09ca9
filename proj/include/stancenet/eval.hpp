#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "stancenet/error.hpp"
#include "stancenet/stance.hpp"

namespace stancenet {

struct GoldLabel {
  std::string message_id;
  Polarity stance = Polarity::Positive;  // Positive or Negative only
};

enum class NeutralPolicy { CountWrong, Exclude };

inline std::string_view to_string(NeutralPolicy p) {
  return p == NeutralPolicy::CountWrong ? "count-wrong" : "exclude";
}

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t excluded = 0;
  double accuracy = 0.0;
  ClassScores positive;
  ClassScores negative;
  double f1_average = 0.0;
  // confusion[gold][pred]; gold 0 = positive, 1 = negative;
  // pred 0 = positive, 1 = negative, 2 = neutral.
  std::array<std::array<std::size_t, 3>, 2> confusion{};
};

inline double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

inline ClassScores class_scores(std::size_t tp, std::size_t predicted, std::size_t actual) {
  ClassScores s;
  s.precision = safe_ratio(static_cast<double>(tp), static_cast<double>(predicted));
  s.recall = safe_ratio(static_cast<double>(tp), static_cast<double>(actual));
  s.f1 = safe_ratio(2.0 * s.precision * s.recall, s.precision + s.recall);
  return s;
}

// Accuracy and per-class / macro-averaged F1 over binary gold labels.
// Neutral predictions either count as errors or drop the message entirely.
inline EvalReport evaluate(const std::vector<StanceResult>& predictions,
                           const std::vector<GoldLabel>& gold, NeutralPolicy policy) {
  std::map<std::string, Polarity> predicted;
  for (const auto& p : predictions) predicted.emplace(p.message_id, p.stance);

  std::vector<std::string> missing;
  for (const auto& g : gold) {
    if (!predicted.contains(g.message_id)) missing.push_back(g.message_id);
    if (g.stance == Polarity::Neutral)
      throw input_error("gold label for " + g.message_id + " must be positive or negative");
  }
  if (!missing.empty()) throw input_error("no prediction for: " + join(missing, ", "));

  EvalReport r;
  for (const auto& g : gold) {
    auto pred = predicted.at(g.message_id);
    std::size_t row = g.stance == Polarity::Positive ? 0 : 1;
    std::size_t col = pred == Polarity::Positive ? 0 : pred == Polarity::Negative ? 1 : 2;
    if (col == 2 && policy == NeutralPolicy::Exclude) {
      ++r.excluded;
      continue;
    }
    ++r.confusion[row][col];
    ++r.total;
  }
  const auto& m = r.confusion;
  r.accuracy = safe_ratio(static_cast<double>(m[0][0] + m[1][1]), static_cast<double>(r.total));
  r.positive = class_scores(m[0][0], m[0][0] + m[1][0], m[0][0] + m[0][1] + m[0][2]);
  r.negative = class_scores(m[1][1], m[0][1] + m[1][1], m[1][0] + m[1][1] + m[1][2]);
  r.f1_average = (r.positive.f1 + r.negative.f1) / 2.0;
  return r;
}

}  // namespace stancenet
