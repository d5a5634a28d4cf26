#pragma once

// Deliberately naive axiom checkers used as an independent oracle. They work
// on plain rankings and std::set, use exact rationals for every quota, and
// quantify over voter groups literally when n is small enough to enumerate.

#include <algorithm>
#include <boost/rational.hpp>
#include <cstdint>
#include <set>
#include <vector>

#include <mwv/axioms.hpp>

namespace naive {

using Rational = boost::rational<long>;
using Set = std::set<int>;
using Rankings = std::vector<std::vector<int>>;

inline constexpr int kEnumerateVotersUpTo = 12;

struct Instance {
  Rankings rankings;
  int m = 0;
  int k = 0;
  Set committee;

  int n() const { return static_cast<int>(rankings.size()); }

  int rank_of(int v, int a) const {
    const auto& r = rankings[static_cast<std::size_t>(v)];
    return static_cast<int>(std::find(r.begin(), r.end(), a) - r.begin());
  }
  bool prefers(int v, int x, int y) const { return rank_of(v, x) < rank_of(v, y); }

  Set top(int v, int l) const {
    const auto& r = rankings[static_cast<std::size_t>(v)];
    return Set(r.begin(), r.begin() + l);
  }
  Set approval(int v) const { return top(v, k); }

  int pairwise(int x, int y) const {
    int count = 0;
    for (int v = 0; v < n(); ++v) count += prefers(v, x, y);
    return count;
  }
};

inline int overlap(const Set& a, const Set& b) {
  int c = 0;
  for (int x : a) c += b.count(x) > 0;
  return c;
}

inline bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<Set> subsets_of_size(int m, int size) {
  std::vector<Set> out;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    if (__builtin_popcount(bits) != size) continue;
    Set s;
    for (int a = 0; a < m; ++a) {
      if (bits >> a & 1u) s.insert(a);
    }
    out.push_back(s);
  }
  return out;
}

inline std::vector<Set> nonempty_subsets(int m) {
  std::vector<Set> out;
  for (int size = 1; size <= m; ++size) {
    auto layer = subsets_of_size(m, size);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline Set complement(const Set& s, int m) {
  Set out;
  for (int a = 0; a < m; ++a) {
    if (!s.count(a)) out.insert(a);
  }
  return out;
}

// True iff some group G of voters with |G| >= quota has every member satisfying
// pred. For small n the groups are enumerated; otherwise the largest such group
// (all voters satisfying pred) is the only candidate worth checking.
template <class Pred>
bool group_exists(const Instance& in, Rational quota, Pred pred) {
  const int n = in.n();
  if (n <= kEnumerateVotersUpTo) {
    std::vector<bool> ok(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ok[static_cast<std::size_t>(v)] = pred(v);
    for (std::uint32_t g = 1; g < (1u << n); ++g) {
      if (Rational(__builtin_popcount(g)) < quota) continue;
      bool all = true;
      for (int v = 0; v < n && all; ++v) {
        if (g >> v & 1u) all = ok[static_cast<std::size_t>(v)];
      }
      if (all) return true;
    }
    return false;
  }
  int count = 0;
  for (int v = 0; v < n; ++v) count += pred(v);
  return count > 0 && Rational(count) >= quota;
}

inline bool majority_winner(const Instance& in) {
  for (int a = 0; a < in.m; ++a) {
    int firsts = 0;
    for (int v = 0; v < in.n(); ++v) firsts += in.rank_of(v, a) == 0;
    if (Rational(firsts) >= Rational(in.n(), 2) && !in.committee.count(a)) return true;
  }
  return false;
}

inline bool majority_loser(const Instance& in) {
  for (int a = 0; a < in.m; ++a) {
    int lasts = 0;
    for (int v = 0; v < in.n(); ++v) lasts += in.rank_of(v, a) == in.m - 1;
    if (Rational(lasts) >= Rational(in.n(), 2) && in.committee.count(a)) return true;
  }
  return false;
}

// Weak pairwise majority: at least half of the voters.
inline bool is_condorcet_set(const Instance& in, const Set& s) {
  for (int x : s) {
    for (int y : complement(s, in.m)) {
      if (Rational(in.pairwise(x, y)) < Rational(in.n(), 2)) return false;
    }
  }
  return true;
}

inline bool condorcet_winner(const Instance& in) {
  bool exists = false;
  for (const auto& s : subsets_of_size(in.m, in.k)) exists = exists || is_condorcet_set(in, s);
  return exists && !is_condorcet_set(in, in.committee);
}

inline bool condorcet_loser(const Instance& in) {
  for (int x : in.committee) {
    for (int y : complement(in.committee, in.m)) {
      if (Rational(in.pairwise(y, x)) <= Rational(in.n(), 2)) return false;
    }
  }
  return true;
}

inline bool strong_pareto(const Instance& in) {
  for (const auto& other : subsets_of_size(in.m, in.k)) {
    bool weakly = true, strictly = false;
    for (int v = 0; v < in.n(); ++v) {
      const int mine = overlap(in.approval(v), in.committee);
      const int theirs = overlap(in.approval(v), other);
      if (theirs < mine) weakly = false;
      if (theirs > mine) strictly = true;
    }
    if (weakly && strictly) return true;
  }
  return false;
}

inline bool fixed_majority(const Instance& in) {
  for (const auto& s : subsets_of_size(in.m, in.k)) {
    if (s == in.committee) continue;
    // Strict majority: |G| > n/2, i.e. |G| >= floor(n/2) + 1.
    if (group_exists(in, Rational(in.n() / 2 + 1), [&](int v) { return in.top(v, in.k) == s; })) return true;
  }
  return false;
}

inline bool strong_unanimity(const Instance& in) {
  const Set s = in.top(0, in.k);
  for (int v = 0; v < in.n(); ++v) {
    if (in.top(v, in.k) != s) return false;
  }
  return s != in.committee;
}

inline bool dummetts(const Instance& in) {
  for (int l = 1; l <= in.k; ++l) {
    const Rational quota(static_cast<long>(l) * in.n(), in.k);
    for (const auto& s : subsets_of_size(in.m, l)) {
      if (subset_of(s, in.committee)) continue;
      if (group_exists(in, quota, [&](int v) { return in.top(v, l) == s; })) return true;
    }
  }
  return false;
}

inline bool local_stability(const Instance& in) {
  const Rational q((in.n() + in.k - 1) / in.k);
  for (int x : complement(in.committee, in.m)) {
    auto prefers_x = [&](int v) {
      for (int c : in.committee) {
        if (!in.prefers(v, x, c)) return false;
      }
      return true;
    };
    if (group_exists(in, q, prefers_x)) return true;
  }
  return false;
}

inline bool solid_coalitions(const Instance& in) {
  for (int a : complement(in.committee, in.m)) {
    if (group_exists(in, Rational(in.n(), in.k), [&](int v) { return in.rank_of(v, a) == 0; })) return true;
  }
  return false;
}

inline bool jr(const Instance& in) {
  for (int a = 0; a < in.m; ++a) {
    auto unrepresented = [&](int v) {
      const Set app = in.approval(v);
      return app.count(a) && overlap(app, in.committee) == 0;
    };
    if (group_exists(in, Rational(in.n(), in.k), unrepresented)) return true;
  }
  return false;
}

// A group is l-cohesive if it jointly approves some set T with |T| >= l.
inline bool ejr(const Instance& in) {
  for (int l = 1; l <= in.k; ++l) {
    const Rational quota(static_cast<long>(l) * in.n(), in.k);
    for (const auto& t : nonempty_subsets(in.m)) {
      if (static_cast<int>(t.size()) < l) continue;
      auto member = [&](int v) {
        const Set app = in.approval(v);
        return subset_of(t, app) && overlap(app, in.committee) < l;
      };
      if (group_exists(in, quota, member)) return true;
    }
  }
  return false;
}

inline bool core(const Instance& in) {
  for (const auto& t : nonempty_subsets(in.m)) {
    const Rational quota(static_cast<long>(t.size()) * in.n(), in.k);
    auto deviates = [&](int v) {
      const Set app = in.approval(v);
      return overlap(app, t) > overlap(app, in.committee);
    };
    if (group_exists(in, quota, deviates)) return true;
  }
  return false;
}

inline bool violates(mwv::AxiomId axiom, const Instance& in) {
  using mwv::AxiomId;
  switch (axiom) {
    case AxiomId::MajorityWinner: return majority_winner(in);
    case AxiomId::MajorityLoser: return majority_loser(in);
    case AxiomId::CondorcetWinner: return condorcet_winner(in);
    case AxiomId::CondorcetLoser: return condorcet_loser(in);
    case AxiomId::StrongPareto: return strong_pareto(in);
    case AxiomId::FixedMajority: return fixed_majority(in);
    case AxiomId::StrongUnanimity: return strong_unanimity(in);
    case AxiomId::Dummetts: return dummetts(in);
    case AxiomId::LocalStability: return local_stability(in);
    case AxiomId::SolidCoalitions: return solid_coalitions(in);
    case AxiomId::Core: return core(in);
    case AxiomId::JR: return jr(in);
    case AxiomId::EJR: return ejr(in);
  }
  return false;
}

}  // namespace naive
