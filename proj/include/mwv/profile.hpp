#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mwv/errors.hpp"

namespace mwv {

using Alternative = int;
using Ranking = std::vector<Alternative>;

// Set of alternatives as a bitmask; bit a set <=> alternative a present.
using AltMask = std::uint64_t;

inline constexpr int kMaxAlternatives = 64;

constexpr AltMask bit(Alternative a) { return AltMask{1} << a; }
constexpr int popcount(AltMask s) { return std::popcount(s); }
constexpr AltMask full_mask(int m) { return m >= 64 ? ~AltMask{0} : (AltMask{1} << m) - 1; }

inline std::vector<Alternative> members_of(AltMask s) {
  std::vector<Alternative> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Strict complete rankings; position 0 is most preferred.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;

  PreferenceProfile(int m, std::vector<Ranking> rankings) : m_(m), rankings_(std::move(rankings)) {
    if (m_ < 2 || m_ > kMaxAlternatives) {
      throw ParameterError("profile needs 2 <= m <= 64, got m=" + std::to_string(m_));
    }
    if (rankings_.empty()) throw ParameterError("profile needs at least one voter");
    for (std::size_t v = 0; v < rankings_.size(); ++v) {
      if (!is_permutation(rankings_[v], m_)) {
        throw ParameterError("ranking of voter " + std::to_string(v) + " is not a permutation of 0.." +
                             std::to_string(m_ - 1));
      }
    }
  }

  int num_alternatives() const noexcept { return m_; }
  int num_voters() const noexcept { return static_cast<int>(rankings_.size()); }
  const std::vector<Ranking>& rankings() const noexcept { return rankings_; }
  const Ranking& ranking(int v) const { return rankings_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

  static bool is_permutation(std::span<const Alternative> r, int m) {
    if (static_cast<int>(r.size()) != m) return false;
    AltMask seen = 0;
    for (Alternative a : r) {
      if (a < 0 || a >= m || (seen & bit(a)) != 0) return false;
      seen |= bit(a);
    }
    return true;
  }

 private:
  int m_ = 0;
  std::vector<Ranking> rankings_;
};

struct ApprovalProfile {
  int m = 0;
  int k = 0;
  std::vector<AltMask> approvals;

  int num_voters() const noexcept { return static_cast<int>(approvals.size()); }
};

inline void check_committee_size(int m, int k) {
  if (k < 1 || k >= m) {
    throw ParameterError("committee size must satisfy 1 <= k < m (k=" + std::to_string(k) +
                         ", m=" + std::to_string(m) + ")");
  }
}

// Top-k truncation of every ranking.
inline ApprovalProfile derive_approvals(const PreferenceProfile& profile, int k) {
  check_committee_size(profile.num_alternatives(), k);
  ApprovalProfile out{profile.num_alternatives(), k, {}};
  out.approvals.reserve(profile.rankings().size());
  for (const auto& r : profile.rankings()) {
    AltMask s = 0;
    for (int i = 0; i < k; ++i) s |= bit(r[static_cast<std::size_t>(i)]);
    out.approvals.push_back(s);
  }
  return out;
}

// A k-subset of alternatives held in canonical ascending order.
class Committee {
 public:
  Committee() = default;

  explicit Committee(std::vector<Alternative> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw ParameterError("committee members must be distinct");
    }
    for (Alternative a : members_) {
      if (a < 0 || a >= kMaxAlternatives) throw ParameterError("committee member out of range");
    }
  }

  static Committee from_mask(AltMask s) {
    Committee c;
    c.members_ = members_of(s);
    return c;
  }

  const std::vector<Alternative>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(Alternative a) const { return std::binary_search(members_.begin(), members_.end(), a); }

  AltMask mask() const {
    AltMask s = 0;
    for (Alternative a : members_) s |= bit(a);
    return s;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(members_[i]);
    }
    return s + "}";
  }

  // Lexicographic on the ascending member sequence: the first non-shared
  // alternative decides.
  friend auto operator<=>(const Committee&, const Committee&) = default;
  friend bool operator==(const Committee&, const Committee&) = default;

 private:
  std::vector<Alternative> members_;
};

// Lexicographically least committee; the global tie-breaking convention.
inline Committee tie_break(std::span<const Committee> candidates) {
  if (candidates.empty()) throw UsageError("tie_break needs at least one committee");
  return *std::min_element(candidates.begin(), candidates.end());
}

// Committee masks compare lexicographically on their ascending members iff
// the lowest differing bit belongs to the smaller committee.
constexpr bool lex_less(AltMask a, AltMask b) {
  if (a == b) return false;
  AltMask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

// All k-subsets of {0..m-1}, in lexicographic order of canonical members.
inline std::vector<AltMask> all_committees(int m, int k) {
  std::vector<AltMask> out;
  if (k < 0 || k > m) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    AltMask s = 0;
    for (int a : idx) s |= bit(a);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace mwv
