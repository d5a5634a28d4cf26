#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mwv/election.hpp"

namespace mwv {

enum class AxiomId : std::uint8_t {
  MajorityWinner,
  MajorityLoser,
  CondorcetWinner,
  CondorcetLoser,
  StrongPareto,
  FixedMajority,
  StrongUnanimity,
  Dummetts,
  LocalStability,
  SolidCoalitions,
  Core,
  JR,
  EJR,
};

inline constexpr int kNumAxioms = 13;

inline constexpr std::array<AxiomId, kNumAxioms> kAllAxioms = {
    AxiomId::MajorityWinner, AxiomId::MajorityLoser,   AxiomId::CondorcetWinner, AxiomId::CondorcetLoser,
    AxiomId::StrongPareto,   AxiomId::FixedMajority,   AxiomId::StrongUnanimity, AxiomId::Dummetts,
    AxiomId::LocalStability, AxiomId::SolidCoalitions, AxiomId::Core,            AxiomId::JR,
    AxiomId::EJR,
};

inline std::string_view axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::MajorityWinner: return "majority_winner";
    case AxiomId::MajorityLoser: return "majority_loser";
    case AxiomId::CondorcetWinner: return "condorcet_winner";
    case AxiomId::CondorcetLoser: return "condorcet_loser";
    case AxiomId::StrongPareto: return "strong_pareto";
    case AxiomId::FixedMajority: return "fixed_majority";
    case AxiomId::StrongUnanimity: return "strong_unanimity";
    case AxiomId::Dummetts: return "dummetts";
    case AxiomId::LocalStability: return "local_stability";
    case AxiomId::SolidCoalitions: return "solid_coalitions";
    case AxiomId::Core: return "core";
    case AxiomId::JR: return "jr";
    case AxiomId::EJR: return "ejr";
  }
  return "unknown";
}

inline AxiomId parse_axiom(std::string_view name) {
  for (AxiomId a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  throw ParameterError("unknown axiom '" + std::string(name) + "'");
}

// Set of axioms as a 13-bit mask.
class AxiomSet {
 public:
  constexpr AxiomSet() = default;
  constexpr AxiomSet(std::initializer_list<AxiomId> ids) {
    for (AxiomId a : ids) bits_ |= flag(a);
  }

  static constexpr AxiomSet all() { return from_bits((1u << kNumAxioms) - 1); }
  // Sources of the implication graph.
  static constexpr AxiomSet root() {
    return {AxiomId::MajorityLoser, AxiomId::CondorcetWinner, AxiomId::StrongPareto,
            AxiomId::Dummetts,      AxiomId::LocalStability,  AxiomId::Core};
  }
  static constexpr AxiomSet from_bits(std::uint16_t b) {
    AxiomSet s;
    s.bits_ = b;
    return s;
  }

  static constexpr std::uint16_t flag(AxiomId a) { return static_cast<std::uint16_t>(1u << static_cast<int>(a)); }

  constexpr bool contains(AxiomId a) const { return (bits_ & flag(a)) != 0; }
  constexpr void insert(AxiomId a) { bits_ |= flag(a); }
  constexpr std::uint16_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  std::vector<AxiomId> members() const {
    std::vector<AxiomId> out;
    for (AxiomId a : kAllAxioms) {
      if (contains(a)) out.push_back(a);
    }
    return out;
  }

  friend constexpr bool operator==(AxiomSet, AxiomSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

// "all", "root", or a comma separated list of axiom names.
inline AxiomSet parse_axiom_set(std::string_view text) {
  if (text == "all") return AxiomSet::all();
  if (text == "root") return AxiomSet::root();
  AxiomSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    if (!item.empty()) out.insert(parse_axiom(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("empty axiom set");
  return out;
}

inline std::string axiom_set_name(AxiomSet s) {
  if (s == AxiomSet::all()) return "all";
  if (s == AxiomSet::root()) return "root";
  std::string out;
  for (AxiomId a : s.members()) {
    if (!out.empty()) out += ",";
    out += axiom_name(a);
  }
  return out;
}

// Per-axiom 0/1 flags for one (profile, committee) pair, keyed by the
// requested axioms only.
struct ViolationVector {
  AxiomSet requested;
  std::uint16_t flags = 0;

  bool violated(AxiomId a) const { return (flags & AxiomSet::flag(a)) != 0; }
  int count() const { return std::popcount(static_cast<std::uint16_t>(flags & requested.bits())); }
  std::map<AxiomId, int> as_map() const {
    std::map<AxiomId, int> out;
    for (AxiomId a : requested.members()) out[a] = violated(a) ? 1 : 0;
    return out;
  }
};

// Committee-independent facts about an election, computed once and shared by
// all axiom checks on it. Group-size quotas use exact integer comparisons:
// "count >= l*n/k" is tested as count*k >= l*n.
class AxiomContext {
 public:
  explicit AxiomContext(const Election& e) : e_(e) {
    const int n = e.n(), m = e.m(), k = e.k();
    const int half_up = (n + 1) / 2;
    for (int a = 0; a < m; ++a) {
      if (e.first_count(a) >= half_up) majority_winners_ |= bit(a);
      if (e.last_count(a) >= half_up) majority_losers_ |= bit(a);
      if (static_cast<long>(e.first_count(a)) * k >= n) solid_required_ |= bit(a);
    }
    // Condorcet committees use weak pairwise majorities (at least n/2), so
    // even-n ties do not rule one out and several may coexist.
    weak_wins_.assign(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b && 2 * e.prefer(a, b) >= n) weak_wins_[static_cast<std::size_t>(a)] |= bit(b);
      }
    }
    condorcet_exists_ = find_condorcet(0, 0, full_mask(m));

    std::vector<AltMask> tops(static_cast<std::size_t>(n));
    for (int l = 1; l <= k; ++l) {
      for (int v = 0; v < n; ++v) tops[static_cast<std::size_t>(v)] = e.top_set(v, l);
      std::sort(tops.begin(), tops.end());
      for (std::size_t i = 0; i < tops.size();) {
        std::size_t j = i;
        while (j < tops.size() && tops[j] == tops[i]) ++j;
        const auto count = static_cast<long>(j - i);
        if (count * k >= static_cast<long>(l) * n) dummett_required_ |= tops[i];
        if (l == k) {
          if (2 * count > n) fixed_majority_ = tops[i];
          if (count == n) unanimous_ = tops[i];
        }
        i = j;
      }
    }
  }

  const Election& election() const noexcept { return e_; }
  bool condorcet_committee_exists() const noexcept { return condorcet_exists_; }
  // Every member is preferred to every non-member by at least half the voters.
  bool is_condorcet_committee(AltMask c) const {
    const AltMask rest = ~c & full_mask(e_.m());
    for (Alternative x : members_of(c)) {
      if ((weak_wins_[static_cast<std::size_t>(x)] & rest) != rest) return false;
    }
    return true;
  }
  AltMask dummett_required() const noexcept { return dummett_required_; }
  AltMask solid_required() const noexcept { return solid_required_; }
  AltMask fixed_majority() const noexcept { return fixed_majority_; }
  AltMask unanimous() const noexcept { return unanimous_; }
  AltMask majority_winners() const noexcept { return majority_winners_; }
  AltMask majority_losers() const noexcept { return majority_losers_; }

  // Every x in winners beats every y in losers by a strict majority.
  bool beats_all(AltMask winners, AltMask losers) const {
    for (Alternative x : members_of(winners)) {
      for (Alternative y : members_of(losers)) {
        if (2 * e_.prefer(x, y) <= e_.n()) return false;
      }
    }
    return true;
  }

 private:
  const Election& e_;
  // Include/exclude search in index order. `common` is the set every chosen
  // member weakly beats; an excluded alternative must stay inside it.
  bool find_condorcet(int next, AltMask chosen, AltMask common) const {
    const int m = e_.m(), k = e_.k();
    const int need = k - popcount(chosen);
    if (need == 0) return ((~chosen & full_mask(m)) & ~common) == 0;
    if (m - next < need) return false;
    const AltMask with = common & weak_wins_[static_cast<std::size_t>(next)];
    const AltMask decided_out = (~chosen & full_mask(next));
    if ((decided_out & ~with) == 0 && find_condorcet(next + 1, chosen | bit(next), with)) return true;
    if ((common & bit(next)) != 0 && find_condorcet(next + 1, chosen, common)) return true;
    return false;
  }

  std::vector<AltMask> weak_wins_;
  bool condorcet_exists_ = false;
  AltMask dummett_required_ = 0;
  AltMask solid_required_ = 0;
  AltMask fixed_majority_ = 0;
  AltMask unanimous_ = 0;
  AltMask majority_winners_ = 0;
  AltMask majority_losers_ = 0;
};

namespace detail {

inline void check_committee(const Election& e, AltMask c) {
  if (popcount(c) != e.k() || (c & ~full_mask(e.m())) != 0) {
    throw UsageError("committee size does not match the election's k");
  }
}

inline std::vector<int> approved_in(const Election& e, AltMask c) {
  std::vector<int> out(static_cast<std::size_t>(e.n()));
  for (int v = 0; v < e.n(); ++v) out[static_cast<std::size_t>(v)] = popcount(e.approval(v) & c);
  return out;
}

// Masks with popcount <= limit, excluding the empty set; cached per (m, limit).
inline const std::vector<AltMask>& small_subsets(int m, int limit) {
  thread_local std::map<std::pair<int, int>, std::vector<AltMask>> cache;
  auto& out = cache[{m, limit}];
  if (out.empty()) {
    for (int size = 1; size <= limit; ++size) {
      auto layer = all_committees(m, size);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  }
  return out;
}

}  // namespace detail

inline bool violates_strong_pareto(const Election& e, AltMask c) {
  auto mine = detail::approved_in(e, c);
  for (AltMask other : all_committees(e.m(), e.k())) {
    if (other == c) continue;
    bool weakly = true, strictly = false;
    for (int v = 0; v < e.n() && weakly; ++v) {
      int theirs = popcount(e.approval(v) & other);
      weakly = theirs >= mine[static_cast<std::size_t>(v)];
      strictly |= theirs > mine[static_cast<std::size_t>(v)];
    }
    if (weakly && strictly) return true;
  }
  return false;
}

inline bool violates_local_stability(const Election& e, AltMask c) {
  const int q = (e.n() + e.k() - 1) / e.k();
  std::vector<int> best(static_cast<std::size_t>(e.n()));
  for (int v = 0; v < e.n(); ++v) {
    int p = e.m();
    for (Alternative a : members_of(c)) p = std::min(p, e.position(v, a));
    best[static_cast<std::size_t>(v)] = p;
  }
  for (int x = 0; x < e.m(); ++x) {
    if (c & bit(x)) continue;
    int count = 0;
    for (int v = 0; v < e.n(); ++v) count += e.position(v, x) < best[static_cast<std::size_t>(v)];
    if (count >= q) return true;
  }
  return false;
}

inline bool violates_jr(const Election& e, AltMask c) {
  std::vector<int> support(static_cast<std::size_t>(e.m()), 0);
  for (AltMask app : e.approvals()) {
    if (app & c) continue;
    for (Alternative a : members_of(app)) ++support[static_cast<std::size_t>(a)];
  }
  for (int a = 0; a < e.m(); ++a) {
    if (static_cast<long>(support[static_cast<std::size_t>(a)]) * e.k() >= e.n()) return true;
  }
  return false;
}

inline bool violates_ejr(const Election& e, AltMask c) {
  auto mine = detail::approved_in(e, c);
  for (int l = 1; l <= e.k(); ++l) {
    for (AltMask t : all_committees(e.m(), l)) {
      long count = 0;
      for (int v = 0; v < e.n(); ++v) {
        count += (e.approval(v) & t) == t && mine[static_cast<std::size_t>(v)] < l;
      }
      if (count * e.k() >= static_cast<long>(l) * e.n()) return true;
    }
  }
  return false;
}

inline bool violates_core(const Election& e, AltMask c) {
  auto mine = detail::approved_in(e, c);
  for (AltMask t : detail::small_subsets(e.m(), e.k())) {
    long count = 0;
    for (int v = 0; v < e.n(); ++v) count += popcount(e.approval(v) & t) > mine[static_cast<std::size_t>(v)];
    if (count * e.k() >= static_cast<long>(popcount(t)) * e.n()) return true;
  }
  return false;
}

// 1 iff committee c violates the axiom on this election.
inline bool violates(AxiomId axiom, const AxiomContext& ctx, AltMask c) {
  const Election& e = ctx.election();
  detail::check_committee(e, c);
  switch (axiom) {
    case AxiomId::MajorityWinner: return (ctx.majority_winners() & ~c) != 0;
    case AxiomId::MajorityLoser: return (ctx.majority_losers() & c) != 0;
    case AxiomId::CondorcetWinner: return ctx.condorcet_committee_exists() && !ctx.is_condorcet_committee(c);
    case AxiomId::CondorcetLoser: return ctx.beats_all(~c & full_mask(e.m()), c);
    case AxiomId::StrongPareto: return violates_strong_pareto(e, c);
    case AxiomId::FixedMajority: return ctx.fixed_majority() != 0 && ctx.fixed_majority() != c;
    case AxiomId::StrongUnanimity: return ctx.unanimous() != 0 && ctx.unanimous() != c;
    case AxiomId::Dummetts: return (ctx.dummett_required() & ~c) != 0;
    case AxiomId::LocalStability: return violates_local_stability(e, c);
    case AxiomId::SolidCoalitions: return (ctx.solid_required() & ~c) != 0;
    case AxiomId::Core: return violates_core(e, c);
    case AxiomId::JR: return violates_jr(e, c);
    case AxiomId::EJR: return violates_ejr(e, c);
  }
  return false;
}

inline bool violates(AxiomId axiom, const Election& e, const Committee& c) {
  AxiomContext ctx(e);
  return violates(axiom, ctx, c.mask());
}

// Explicit-approvals entry point: the approvals must be the top-k truncation the
// election is built from.
inline bool violates(AxiomId axiom, const PreferenceProfile& profile, const ApprovalProfile& approvals,
                     const Committee& committee, int k) {
  if (approvals.k != k || committee.size() != k) throw UsageError("approvals, committee and k disagree on k");
  Election e(profile, k);
  if (approvals.approvals != e.approvals()) throw UsageError("approvals are not the top-k truncation of the profile");
  return violates(axiom, e, committee);
}

inline ViolationVector evaluate_all(const AxiomContext& ctx, AltMask c, AxiomSet axioms) {
  ViolationVector out{axioms, 0};
  for (AxiomId a : axioms.members()) {
    if (violates(a, ctx, c)) out.flags |= AxiomSet::flag(a);
  }
  return out;
}

inline ViolationVector evaluate_all(const Election& e, const Committee& c, AxiomSet axioms) {
  AxiomContext ctx(e);
  return evaluate_all(ctx, c.mask(), axioms);
}

// Flags for every k-committee at once (lexicographic order), as needed by the
// min/max oracle and by rule evaluation. Strong Pareto shares one
// per-committee approval-count table across all comparisons.
class ViolationTable {
 public:
  static constexpr int kMaxTableAlternatives = 16;

  ViolationTable(const Election& e, AxiomSet axioms) : axioms_(axioms), m_(e.m()), k_(e.k()) {
    if (e.m() > kMaxTableAlternatives) throw CapacityError("committee table needs m <= 16");
    committees_ = all_committees(e.m(), e.k());
    flags_.assign(committees_.size(), 0);
    index_.assign(std::size_t{1} << e.m(), -1);
    for (std::size_t i = 0; i < committees_.size(); ++i) index_[committees_[i]] = static_cast<int>(i);

    AxiomContext ctx(e);
    const bool pareto = axioms.contains(AxiomId::StrongPareto);
    AxiomSet rest = AxiomSet::from_bits(static_cast<std::uint16_t>(axioms.bits() & ~AxiomSet::flag(AxiomId::StrongPareto)));
    for (std::size_t i = 0; i < committees_.size(); ++i) flags_[i] = evaluate_all(ctx, committees_[i], rest).flags;
    if (pareto) mark_dominated(e);
  }

  AxiomSet axioms() const noexcept { return axioms_; }
  const std::vector<AltMask>& committees() const noexcept { return committees_; }
  std::size_t size() const noexcept { return committees_.size(); }

  int index_of(AltMask c) const {
    if (c >= index_.size() || index_[c] < 0) throw UsageError("not a committee of this election");
    return index_[c];
  }
  std::uint16_t flags_at(std::size_t i) const { return flags_[i]; }
  std::uint16_t flags(AltMask c) const { return flags_[static_cast<std::size_t>(index_of(c))]; }
  int count_at(std::size_t i) const { return std::popcount(flags_[i]); }
  int count(AltMask c) const { return std::popcount(flags(c)); }

 private:
  void mark_dominated(const Election& e) {
    const auto n = static_cast<std::size_t>(e.n());
    const std::size_t total = committees_.size();
    std::vector<std::uint8_t> counts(total * n);
    for (std::size_t i = 0; i < total; ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        counts[i * n + v] = static_cast<std::uint8_t>(popcount(e.approval(static_cast<int>(v)) & committees_[i]));
      }
    }
    const auto flag = AxiomSet::flag(AxiomId::StrongPareto);
    for (std::size_t i = 0; i < total; ++i) {
      const std::uint8_t* mine = &counts[i * n];
      for (std::size_t j = 0; j < total; ++j) {
        if (i == j) continue;
        const std::uint8_t* other = &counts[j * n];
        bool weakly = true, strictly = false;
        for (std::size_t v = 0; v < n; ++v) {
          if (other[v] < mine[v]) {
            weakly = false;
            break;
          }
          strictly |= other[v] > mine[v];
        }
        if (weakly && strictly) {
          flags_[i] |= flag;
          break;
        }
      }
    }
  }

  AxiomSet axioms_;
  int m_ = 0;
  int k_ = 0;
  std::vector<AltMask> committees_;
  std::vector<std::uint16_t> flags_;
  std::vector<int> index_;
};

}  // namespace mwv
