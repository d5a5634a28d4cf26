#pragma once

// Small helpers shared by the unit tests.

#include <initializer_list>
#include <string>
#include <vector>

#include <mwv/mwv.hpp>

#include "oracle/naive_axioms.hpp"

namespace testing_support {

// Rankings written as letter strings, e.g. "abc" means a > b > c.
inline mwv::Ranking parse_letters(const std::string& s) {
  mwv::Ranking r;
  for (char c : s) r.push_back(c - 'a');
  return r;
}

inline mwv::PreferenceProfile letters(std::initializer_list<std::pair<int, std::string>> groups) {
  std::vector<mwv::Ranking> rankings;
  int m = 0;
  for (const auto& [count, text] : groups) {
    m = static_cast<int>(text.size());
    for (int i = 0; i < count; ++i) rankings.push_back(parse_letters(text));
  }
  return mwv::PreferenceProfile(m, std::move(rankings));
}

inline mwv::Committee committee(std::initializer_list<int> members) { return mwv::Committee(std::vector<int>(members)); }

inline mwv::PreferenceProfile identity_profile(int n, int m) {
  return mwv::sample_profile(mwv::DistributionSpec::identity(), n, m, mwv::RngSeed{0});
}

inline naive::Instance naive_instance(const mwv::PreferenceProfile& p, int k, mwv::AltMask c) {
  naive::Instance in;
  in.rankings = p.rankings();
  in.m = p.num_alternatives();
  in.k = k;
  for (int a : mwv::members_of(c)) in.committee.insert(a);
  return in;
}

}  // namespace testing_support
