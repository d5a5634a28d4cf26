#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "mwv/election.hpp"

namespace mwv {

// Exhaustive argmax over all k-committees in lexicographic order; only a
// strictly better key replaces the incumbent, so ties keep the least committee.
template <typename KeyFn>
AltMask best_committee(const Election& e, KeyFn key) {
  AltMask best = 0;
  bool have = false;
  decltype(key(AltMask{})) best_key{};
  for (AltMask c : all_committees(e.m(), e.k())) {
    auto kv = key(c);
    if (!have || kv > best_key) {
      best = c;
      best_key = kv;
      have = true;
    }
  }
  return best;
}

namespace detail {

// lcm(1..k) so harmonic sums become integers.
inline long harmonic_scale(int k) {
  long l = 1;
  for (int i = 2; i <= k; ++i) l = std::lcm(l, static_cast<long>(i));
  return l;
}

}  // namespace detail

// PAV score scaled by lcm(1..k).
inline long pav_score(const Election& e, AltMask c) {
  const long scale = detail::harmonic_scale(e.k());
  std::vector<long> h(static_cast<std::size_t>(e.k()) + 1, 0);
  for (int j = 1; j <= e.k(); ++j) h[static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(j - 1)] + scale / j;
  long s = 0;
  for (AltMask app : e.approvals()) s += h[static_cast<std::size_t>(popcount(app & c))];
  return s;
}

inline int cc_score(const Election& e, AltMask c) {
  int s = 0;
  for (AltMask app : e.approvals()) s += (app & c) != 0;
  return s;
}

inline AltMask pav_committee(const Election& e) {
  return best_committee(e, [&](AltMask c) { return pav_score(e, c); });
}

inline AltMask cc_committee(const Election& e) {
  return best_committee(e, [&](AltMask c) { return cc_score(e, c); });
}

// Maximise (#voters with >=1 approved member, >=2, ..., >=k) lexicographically.
inline AltMask lexcc_committee(const Election& e) {
  return best_committee(e, [&](AltMask c) {
    std::vector<int> at_least(static_cast<std::size_t>(e.k()), 0);
    for (AltMask app : e.approvals()) {
      int hit = popcount(app & c);
      for (int j = 0; j < hit; ++j) ++at_least[static_cast<std::size_t>(j)];
    }
    return at_least;
  });
}

// Minimise the largest Hamming distance |App(v) xor C|.
inline AltMask mav_committee(const Election& e) {
  return best_committee(e, [&](AltMask c) {
    int worst = 0;
    for (AltMask app : e.approvals()) worst = std::max(worst, popcount(app ^ c));
    return -worst;
  });
}

// Greedy coverage; marginal-gain ties to the lower index.
inline AltMask seqcc_committee(const Election& e) {
  std::vector<char> covered(static_cast<std::size_t>(e.n()), 0);
  AltMask chosen = 0;
  for (int round = 0; round < e.k(); ++round) {
    int best = -1, best_gain = -1;
    for (int a = 0; a < e.m(); ++a) {
      if (chosen & bit(a)) continue;
      int gain = 0;
      for (int v = 0; v < e.n(); ++v) {
        if (!covered[static_cast<std::size_t>(v)] && (e.approval(v) & bit(a))) ++gain;
      }
      if (gain > best_gain) {
        best = a;
        best_gain = gain;
      }
    }
    chosen |= bit(best);
    for (int v = 0; v < e.n(); ++v) {
      if (e.approval(v) & bit(best)) covered[static_cast<std::size_t>(v)] = 1;
    }
  }
  return chosen;
}

inline constexpr double kMoneyTolerance = 1e-9;

// Sequential Phragmen completion starting from `chosen` with the given loads.
inline AltMask phragmen_fill(const Election& e, AltMask chosen, std::vector<double> load) {
  while (popcount(chosen) < e.k()) {
    int best = -1;
    double best_load = 0.0;
    for (int a = 0; a < e.m(); ++a) {
      if (chosen & bit(a)) continue;
      double sum = 1.0;
      int supporters = 0;
      for (int v = 0; v < e.n(); ++v) {
        if (e.approval(v) & bit(a)) {
          sum += load[static_cast<std::size_t>(v)];
          ++supporters;
        }
      }
      if (supporters == 0) continue;
      double s = sum / supporters;
      if (best < 0 || s < best_load - kMoneyTolerance) {
        best = a;
        best_load = s;
      }
    }
    if (best < 0) {
      // Nobody approves any remaining alternative: lowest index.
      for (int a = 0; a < e.m(); ++a) {
        if (!(chosen & bit(a))) {
          best = a;
          break;
        }
      }
      chosen |= bit(best);
      continue;
    }
    chosen |= bit(best);
    for (int v = 0; v < e.n(); ++v) {
      if (e.approval(v) & bit(best)) load[static_cast<std::size_t>(v)] = best_load;
    }
  }
  return chosen;
}

inline AltMask seq_phragmen_committee(const Election& e) {
  return phragmen_fill(e, 0, std::vector<double>(static_cast<std::size_t>(e.n()), 0.0));
}

// Method of Equal Shares: budgets k/n, unit prices, minimal uniform payment
// cap rho; leftover seats by sequential Phragmen seeded with amounts spent.
inline AltMask mes_committee(const Election& e) {
  const int n = e.n();
  const double start = static_cast<double>(e.k()) / n;
  std::vector<double> budget(static_cast<std::size_t>(n), start);
  AltMask chosen = 0;
  std::vector<double> held;
  for (int round = 0; round < e.k(); ++round) {
    int best = -1;
    double best_rho = 0.0;
    for (int a = 0; a < e.m(); ++a) {
      if (chosen & bit(a)) continue;
      held.clear();
      double total = 0.0;
      for (int v = 0; v < n; ++v) {
        if (e.approval(v) & bit(a)) {
          held.push_back(budget[static_cast<std::size_t>(v)]);
          total += budget[static_cast<std::size_t>(v)];
        }
      }
      if (held.empty() || total < 1.0 - kMoneyTolerance) continue;
      std::sort(held.begin(), held.end());
      double paid = 0.0, rho = 0.0;
      for (std::size_t i = 0; i < held.size(); ++i) {
        double cap = (1.0 - paid) / static_cast<double>(held.size() - i);
        if (cap <= held[i] + kMoneyTolerance) {
          rho = cap;
          break;
        }
        paid += held[i];
        rho = held[i];
      }
      if (best < 0 || rho < best_rho - kMoneyTolerance) {
        best = a;
        best_rho = rho;
      }
    }
    if (best < 0) break;
    chosen |= bit(best);
    for (int v = 0; v < n; ++v) {
      if (e.approval(v) & bit(best)) {
        auto& b = budget[static_cast<std::size_t>(v)];
        b -= std::min(best_rho, b);
      }
    }
  }
  std::vector<double> load(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) load[static_cast<std::size_t>(v)] = start - budget[static_cast<std::size_t>(v)];
  return phragmen_fill(e, chosen, std::move(load));
}

// E Pluribus Hugo. Points are kept as integers scaled by lcm(1..k).
inline AltMask eph_committee(const Election& e) {
  const long scale = detail::harmonic_scale(e.k());
  AltMask remaining = full_mask(e.m());
  std::vector<long> points(static_cast<std::size_t>(e.m()));
  // (points, approvals) ascending, then higher index counts as worse.
  auto worse = [&](int a, int b) {
    auto pa = points[static_cast<std::size_t>(a)], pb = points[static_cast<std::size_t>(b)];
    if (pa != pb) return pa < pb;
    if (e.approval_count(a) != e.approval_count(b)) return e.approval_count(a) < e.approval_count(b);
    return a > b;
  };
  while (popcount(remaining) > e.k()) {
    std::fill(points.begin(), points.end(), 0);
    for (AltMask app : e.approvals()) {
      AltMask live = app & remaining;
      int d = popcount(live);
      if (d == 0) continue;
      for (Alternative a : members_of(live)) points[static_cast<std::size_t>(a)] += scale / d;
    }
    int w1 = -1, w2 = -1;
    for (Alternative a : members_of(remaining)) {
      if (w1 < 0 || worse(a, w1)) {
        w2 = w1;
        w1 = a;
      } else if (w2 < 0 || worse(a, w2)) {
        w2 = a;
      }
    }
    int ca = e.approval_count(w1), cb = e.approval_count(w2);
    int out = ca < cb ? w1 : cb < ca ? w2 : std::max(w1, w2);
    remaining &= ~bit(out);
  }
  return remaining;
}

}  // namespace mwv
