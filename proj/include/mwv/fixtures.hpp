#pragma once

// Small hand-built profiles (n = 10, m = 10, k = 5) separating pairs of
// axioms that do not imply each other.

#include <vector>

#include "mwv/profile.hpp"

namespace mwv::fixtures {

namespace detail {

inline std::vector<Ranking> with_majority_block(std::vector<Ranking> head) {
  for (int i = 0; i < 6; ++i) head.push_back({9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  return head;
}

}  // namespace detail

inline constexpr int kFixtureK = 5;

// Four voters share the top pair {0,1}; six share the top five {5,...,9},
// which is also the Condorcet committee. Dummett's forces 0 and 1 in, while
// the Condorcet and fixed-majority conditions both force {5,...,9}.
inline PreferenceProfile dummett_vs_majority() {
  return PreferenceProfile(10, detail::with_majority_block({
                                   {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
                                   {0, 1, 4, 5, 6, 7, 8, 9, 2, 3},
                                   {0, 1, 6, 7, 8, 9, 2, 3, 4, 5},
                                   {0, 1, 8, 9, 2, 3, 4, 5, 6, 7},
                               }));
}

// {3,4,5,6,7} satisfies EJR but leaves out 0, which four voters rank first.
inline PreferenceProfile ejr_without_dummett() {
  return PreferenceProfile(10, detail::with_majority_block({
                                   {0, 6, 2, 3, 4, 5, 1, 7, 8, 9},
                                   {0, 7, 2, 3, 4, 5, 6, 1, 8, 9},
                                   {0, 8, 2, 3, 4, 5, 6, 7, 1, 9},
                                   {0, 9, 2, 3, 4, 5, 6, 7, 8, 1},
                               }));
}

// {5,...,9} satisfies Dummett's but the four voters approving {3,4} get only
// one member each, so EJR fails.
inline PreferenceProfile dummett_without_ejr() {
  return PreferenceProfile(10, detail::with_majority_block({
                                   {0, 6, 2, 3, 4, 5, 1, 7, 8, 9},
                                   {1, 7, 2, 3, 4, 5, 6, 0, 8, 9},
                                   {2, 8, 1, 3, 4, 5, 6, 7, 0, 9},
                                   {3, 9, 2, 1, 4, 5, 6, 7, 8, 0},
                               }));
}

}  // namespace mwv::fixtures
