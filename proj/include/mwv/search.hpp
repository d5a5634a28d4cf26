#pragma once

#include <span>
#include <vector>

#include "mwv/axioms.hpp"

namespace mwv {

inline constexpr int kMaxSearchAlternatives = 12;

struct SearchResult {
  Committee committee;
  int violations = 0;
};

namespace detail {

inline void check_search(const Election& e, AxiomSet axioms) {
  if (axioms.empty()) throw UsageError("axiom set must be non-empty");
  if (e.m() > kMaxSearchAlternatives) throw CapacityError("exhaustive committee search needs m <= 12");
}

// Best committee over the table entries listed in `order`; `better(a, b)`
// compares violation counts. Equal counts go to the lexicographically least
// committee whatever the visiting order.
template <class Better>
SearchResult extreme_in(const ViolationTable& table, std::span<const std::size_t> order, Better better) {
  std::size_t best = order.front();
  for (std::size_t i : order) {
    const int c = table.count_at(i), b = table.count_at(best);
    if (better(c, b) || (c == b && lex_less(table.committees()[i], table.committees()[best]))) best = i;
  }
  return {Committee::from_mask(table.committees()[best]), table.count_at(best)};
}

inline std::vector<std::size_t> identity_order(std::size_t size) {
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = i;
  return order;
}

}  // namespace detail

inline SearchResult min_violation_committee(const ViolationTable& table) {
  auto order = detail::identity_order(table.size());
  return detail::extreme_in(table, order, [](int a, int b) { return a < b; });
}

inline SearchResult max_violation_committee(const ViolationTable& table) {
  auto order = detail::identity_order(table.size());
  return detail::extreme_in(table, order, [](int a, int b) { return a > b; });
}

// Same answers when committees are visited in an arbitrary order.
inline SearchResult min_violation_committee(const ViolationTable& table, std::span<const std::size_t> order) {
  if (order.empty()) throw UsageError("empty committee order");
  return detail::extreme_in(table, order, [](int a, int b) { return a < b; });
}

inline SearchResult max_violation_committee(const ViolationTable& table, std::span<const std::size_t> order) {
  if (order.empty()) throw UsageError("empty committee order");
  return detail::extreme_in(table, order, [](int a, int b) { return a > b; });
}

inline SearchResult min_violation_committee(const Election& e, AxiomSet axioms) {
  detail::check_search(e, axioms);
  return min_violation_committee(ViolationTable(e, axioms));
}

inline SearchResult max_violation_committee(const Election& e, AxiomSet axioms) {
  detail::check_search(e, axioms);
  return max_violation_committee(ViolationTable(e, axioms));
}

inline SearchResult min_violation_committee(const PreferenceProfile& profile, int k, AxiomSet axioms) {
  return min_violation_committee(Election(profile, k), axioms);
}

inline SearchResult max_violation_committee(const PreferenceProfile& profile, int k, AxiomSet axioms) {
  return max_violation_committee(Election(profile, k), axioms);
}

}  // namespace mwv
