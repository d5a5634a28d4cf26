#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace mwv;
using testing_support::naive_instance;

namespace {

int naive_count(const PreferenceProfile& p, int k, AltMask c, AxiomSet axioms) {
  auto in = naive_instance(p, k, c);
  int count = 0;
  for (AxiomId a : axioms.members()) count += naive::violates(a, in);
  return count;
}

// Exhaustive oracle: scan every committee in lexicographic order, keep the
// first strictly better one.
SearchResult naive_extreme(const PreferenceProfile& p, int k, AxiomSet axioms, bool maximize) {
  SearchResult best;
  bool first = true;
  for (AltMask c : all_committees(p.num_alternatives(), k)) {
    int v = naive_count(p, k, c, axioms);
    if (first || (maximize ? v > best.violations : v < best.violations)) {
      best = {Committee::from_mask(c), v};
      first = false;
    }
  }
  return best;
}

}  // namespace

TEST(Search, IdentityProfileHasAZeroViolationCommittee) {
  for (int k = 1; k < 6; ++k) {
    auto r = min_violation_committee(testing_support::identity_profile(9, 6), k, AxiomSet::all());
    EXPECT_EQ(r.committee.mask(), full_mask(k));
    EXPECT_EQ(r.violations, 0);
  }
}

TEST(Search, FixtureForcesAViolation) {
  AxiomSet pair;
  pair.insert(AxiomId::CondorcetWinner);
  pair.insert(AxiomId::Dummetts);
  auto r = min_violation_committee(fixtures::dummett_vs_majority(), fixtures::kFixtureK, pair);
  EXPECT_GE(r.violations, 1);
}

TEST(Search, NeverViolatedSingleton) {
  AxiomSet jr;
  jr.insert(AxiomId::JR);
  for (int k : {3, 4}) {
    auto p = testing_support::identity_profile(10, 5);
    EXPECT_EQ(min_violation_committee(p, k, jr).violations, 0);
    if (k == 4) {
      EXPECT_EQ(max_violation_committee(p, k, jr).violations, 0);
    }
  }
}

TEST(Search, IdentityMaximumAvoidsTheTop) {
  auto p = testing_support::identity_profile(10, 5);
  auto hi = max_violation_committee(p, 2, AxiomSet::all());
  EXPECT_EQ(hi.violations, naive_count(p, 2, bit(3) | bit(4), AxiomSet::all()));
  EXPECT_EQ(hi.committee.mask() & bit(0), 0u);
  EXPECT_EQ(hi.violations, naive_extreme(p, 2, AxiomSet::all(), true).violations);
}

TEST(Search, MatchesNaiveExhaustiveSearch) {
  for (const auto& s : sample_profiles(DistributionSpec::mixed({}), 8, 6, 30, RngSeed{12})) {
    for (int k = 1; k < 6; ++k) {
      for (AxiomSet axioms : {AxiomSet::all(), AxiomSet::root()}) {
        auto lo = min_violation_committee(s.profile, k, axioms);
        auto hi = max_violation_committee(s.profile, k, axioms);
        auto nlo = naive_extreme(s.profile, k, axioms, false);
        auto nhi = naive_extreme(s.profile, k, axioms, true);
        EXPECT_EQ(lo.committee, nlo.committee);
        EXPECT_EQ(lo.violations, nlo.violations);
        EXPECT_EQ(hi.committee, nhi.committee);
        EXPECT_EQ(hi.violations, nhi.violations);
        EXPECT_LE(lo.violations, hi.violations);
      }
    }
  }
}

TEST(Search, OrderIndependent) {
  std::mt19937_64 rng(3);
  for (const auto& s : sample_profiles(DistributionSpec::ic(), 20, 7, 20, RngSeed{13})) {
    Election e(s.profile, 3);
    ViolationTable table(e, AxiomSet::all());
    auto order = std::vector<std::size_t>(table.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(min_violation_committee(table, order).committee, min_violation_committee(table).committee);
      EXPECT_EQ(max_violation_committee(table, order).committee, max_violation_committee(table).committee);
    }
  }
}

TEST(Search, RulesLieBetweenTheOracles) {
  for (const auto& s : sample_profiles(DistributionSpec::mixed({}), 25, 6, 40, RngSeed{14})) {
    for (int k : {2, 3}) {
      Election e(s.profile, k);
      ViolationTable table(e, AxiomSet::all());
      const int lo = min_violation_committee(table).violations, hi = max_violation_committee(table).violations;
      for (const auto& rule : default_sweep_rules()) {
        auto r = rule_needs_seed(rule.id) ? RuleSpec::seeded(rule.id, s.seed) : rule;
        const int v = table.count(elect(r, e).mask());
        EXPECT_LE(lo, v) << rule.name();
        EXPECT_LE(v, hi) << rule.name();
      }
    }
  }
}

TEST(Search, Guards) {
  EXPECT_THROW(min_violation_committee(testing_support::identity_profile(3, 5), 2, AxiomSet{}), UsageError);
  EXPECT_THROW(max_violation_committee(testing_support::identity_profile(3, 13), 2, AxiomSet::all()), CapacityError);
}
