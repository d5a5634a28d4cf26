#pragma once

#include <span>
#include <string>
#include <vector>

#include "mwv/election.hpp"

namespace mwv {

// Positional score vector: non-increasing, scores[0] = 1, scores[m-1] = 0.
class ScoreVector {
 public:
  ScoreVector() = default;

  explicit ScoreVector(std::vector<double> scores) : scores_(std::move(scores)) {
    if (scores_.size() < 2) throw ParameterError("score vector needs at least two entries");
    if (scores_.front() != 1.0 || scores_.back() != 0.0) {
      throw ParameterError("score vector must start at 1 and end at 0");
    }
    for (std::size_t i = 1; i < scores_.size(); ++i) {
      if (!(scores_[i] <= scores_[i - 1])) throw ParameterError("score vector must be non-increasing");
    }
  }

  // (m-1-i)/(m-1): Borda rescaled to [0,1].
  static ScoreVector borda(int m) {
    std::vector<double> s(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = static_cast<double>(m - 1 - i) / (m - 1);
    return ScoreVector(std::move(s));
  }

  int size() const noexcept { return static_cast<int>(scores_.size()); }
  const std::vector<double>& values() const noexcept { return scores_; }
  double operator[](int i) const { return scores_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<double> scores_;
};

// counts[a*m + p] = number of voters ranking a at position p.
inline std::vector<int> position_counts(const Election& e) {
  const auto um = static_cast<std::size_t>(e.m());
  std::vector<int> counts(um * um, 0);
  for (int v = 0; v < e.n(); ++v) {
    const Ranking& r = e.ranking(v);
    for (std::size_t p = 0; p < um; ++p) ++counts[static_cast<std::size_t>(r[p]) * um + p];
  }
  return counts;
}

// Picks the k best scores one at a time; a later alternative only displaces an
// earlier one if it is ahead by more than tol, so ties go to the lower index.
template <typename T>
AltMask top_k_by_score(std::span<const T> scores, int k, T tol = T{}) {
  AltMask chosen = 0;
  const int m = static_cast<int>(scores.size());
  for (int round = 0; round < k; ++round) {
    int best = -1;
    for (int a = 0; a < m; ++a) {
      if (chosen & bit(a)) continue;
      if (best < 0 || scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(best)] + tol) best = a;
    }
    chosen |= bit(best);
  }
  return chosen;
}

inline constexpr double kScoreTieTolerance = 1e-9;

// Positional scoring from precomputed position counts. The anneal loss and
// elect_scoring share this so both see identical arithmetic.
inline AltMask psr_committee(std::span<const int> counts, int m, const ScoreVector& vec, int k) {
  if (vec.size() != m) throw ParameterError("score vector length must equal m");
  std::vector<double> score(static_cast<std::size_t>(m), 0.0);
  for (int a = 0; a < m; ++a) {
    double s = 0.0;
    for (int p = 0; p < m; ++p) s += counts[static_cast<std::size_t>(a * m + p)] * vec[p];
    score[static_cast<std::size_t>(a)] = s;
  }
  return top_k_by_score<double>(score, k, kScoreTieTolerance);
}

inline AltMask borda_committee(const Election& e) {
  std::vector<long> score(static_cast<std::size_t>(e.m()), 0);
  for (int v = 0; v < e.n(); ++v) {
    for (int a = 0; a < e.m(); ++a) score[static_cast<std::size_t>(a)] += e.borda(v, a);
  }
  return top_k_by_score<long>(score, e.k());
}

inline AltMask sntv_committee(const Election& e) {
  std::vector<long> score(static_cast<std::size_t>(e.m()));
  for (int a = 0; a < e.m(); ++a) score[static_cast<std::size_t>(a)] = e.first_count(a);
  return top_k_by_score<long>(score, e.k());
}

inline AltMask bloc_committee(const Election& e) {
  std::vector<long> score(static_cast<std::size_t>(e.m()));
  for (int a = 0; a < e.m(); ++a) score[static_cast<std::size_t>(a)] = e.approval_count(a);
  return top_k_by_score<long>(score, e.k());
}

}  // namespace mwv
