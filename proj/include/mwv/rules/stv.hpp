#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mwv/election.hpp"

namespace mwv {

enum class StvEliminationTie { HighestIndex, LowestIndex };

struct StvOptions {
  StvEliminationTie elimination_tie = StvEliminationTie::HighestIndex;
};

// Fractional-transfer STV with quota n/(k+1), exact rational weights.
inline AltMask stv_committee(const Election& e, StvOptions opts = {}) {
  using Q = boost::multiprecision::cpp_rational;
  const int n = e.n(), m = e.m(), k = e.k();
  const Q quota(n, k + 1);
  enum : char { kContinuing, kElected, kEliminated };
  std::vector<char> status(static_cast<std::size_t>(m), kContinuing);
  std::vector<Q> weight(static_cast<std::size_t>(n), Q(1));
  std::vector<int> top(static_cast<std::size_t>(n));
  std::vector<Q> tally(static_cast<std::size_t>(m));
  AltMask seated = 0;
  int seats = 0;
  int continuing = m;

  while (seats < k) {
    if (continuing == k - seats) {
      for (int a = 0; a < m; ++a) {
        if (status[static_cast<std::size_t>(a)] == kContinuing) seated |= bit(a);
      }
      break;
    }
    for (auto& t : tally) t = 0;
    for (int v = 0; v < n; ++v) {
      const Ranking& r = e.ranking(v);
      int a = 0;
      for (Alternative x : r) {
        if (status[static_cast<std::size_t>(x)] == kContinuing) {
          a = x;
          break;
        }
      }
      top[static_cast<std::size_t>(v)] = a;
      tally[static_cast<std::size_t>(a)] += weight[static_cast<std::size_t>(v)];
    }
    int best = -1, worst = -1;
    for (int a = 0; a < m; ++a) {
      if (status[static_cast<std::size_t>(a)] != kContinuing) continue;
      const Q& t = tally[static_cast<std::size_t>(a)];
      if (best < 0 || t > tally[static_cast<std::size_t>(best)]) best = a;
      if (worst < 0 || t < tally[static_cast<std::size_t>(worst)] ||
          (t == tally[static_cast<std::size_t>(worst)] && opts.elimination_tie == StvEliminationTie::HighestIndex)) {
        worst = a;
      }
    }
    const Q total = tally[static_cast<std::size_t>(best)];
    if (total >= quota) {
      status[static_cast<std::size_t>(best)] = kElected;
      seated |= bit(best);
      ++seats;
      --continuing;
      const Q factor = (total - quota) / total;
      for (int v = 0; v < n; ++v) {
        if (top[static_cast<std::size_t>(v)] == best) weight[static_cast<std::size_t>(v)] *= factor;
      }
    } else {
      status[static_cast<std::size_t>(worst)] = kEliminated;
      --continuing;
    }
  }
  return seated;
}

}  // namespace mwv
