#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mwv/election.hpp"
#include "mwv/random.hpp"
#include "mwv/rules/approval.hpp"
#include "mwv/rules/monroe.hpp"
#include "mwv/rules/scoring.hpp"
#include "mwv/rules/stv.hpp"

namespace mwv {

enum class RuleId {
  Borda,
  SNTV,
  STV,
  Bloc,
  PAV,
  CC,
  LexCC,
  SeqCC,
  Monroe,
  GreedyMonroe,
  MAV,
  MES,
  EPH,
  RSD,
  RandomCommittee,
  PositionalScoring,
};

inline constexpr std::array<RuleId, 16> kAllRules = {
    RuleId::Borda,  RuleId::SNTV,         RuleId::STV, RuleId::Bloc, RuleId::PAV, RuleId::CC,
    RuleId::LexCC,  RuleId::SeqCC,        RuleId::Monroe, RuleId::GreedyMonroe, RuleId::MAV,
    RuleId::MES,    RuleId::EPH,          RuleId::RSD, RuleId::RandomCommittee, RuleId::PositionalScoring,
};

// Lowercase identifiers used on the command line and in committee records.
inline std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::Borda: return "borda";
    case RuleId::SNTV: return "sntv";
    case RuleId::STV: return "stv";
    case RuleId::Bloc: return "bloc";
    case RuleId::PAV: return "pav";
    case RuleId::CC: return "cc";
    case RuleId::LexCC: return "lexcc";
    case RuleId::SeqCC: return "seqcc";
    case RuleId::Monroe: return "monroe";
    case RuleId::GreedyMonroe: return "greedymonroe";
    case RuleId::MAV: return "mav";
    case RuleId::MES: return "mes";
    case RuleId::EPH: return "eph";
    case RuleId::RSD: return "rsd";
    case RuleId::RandomCommittee: return "randomcommittee";
    case RuleId::PositionalScoring: return "positionalscoring";
  }
  return "unknown";
}

inline RuleId parse_rule_id(std::string_view name) {
  for (RuleId id : kAllRules) {
    if (rule_name(id) == name) return id;
  }
  throw ParameterError("unknown rule '" + std::string(name) + "'");
}

inline bool rule_needs_seed(RuleId id) { return id == RuleId::RSD || id == RuleId::RandomCommittee; }

struct RuleSpec {
  RuleId id = RuleId::Borda;
  std::optional<ScoreVector> scores;  // PositionalScoring only
  std::optional<RngSeed> seed;        // RSD / RandomCommittee only

  static RuleSpec of(RuleId id) { return {id, std::nullopt, std::nullopt}; }
  static RuleSpec positional(ScoreVector v) { return {RuleId::PositionalScoring, std::move(v), std::nullopt}; }
  static RuleSpec seeded(RuleId id, RngSeed s) { return {id, std::nullopt, s}; }

  std::string name() const { return std::string(rule_name(id)); }

  void validate() const {
    if ((id == RuleId::PositionalScoring) != scores.has_value()) {
      throw ParameterError("a score vector is required by, and only by, positionalscoring");
    }
    if (rule_needs_seed(id) != seed.has_value()) {
      throw ParameterError("a seed is required by, and only by, rsd and randomcommittee");
    }
  }
};

inline AltMask random_committee_mask(int m, int k, RngSeed seed) {
  check_committee_size(m, k);
  Rng rng = make_rng(seed);
  std::vector<Alternative> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  AltMask out = 0;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, m - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
    out |= bit(pool[static_cast<std::size_t>(i)]);
  }
  return out;
}

inline AltMask rsd_committee(const Election& e, RngSeed seed) {
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<int> pick(0, e.n() - 1);
  return e.approval(pick(rng));
}

// Resolute election of one committee under the rule's fixed tie-breaking.
inline AltMask elect_mask(const RuleSpec& rule, const Election& e) {
  rule.validate();
  switch (rule.id) {
    case RuleId::Borda: return borda_committee(e);
    case RuleId::SNTV: return sntv_committee(e);
    case RuleId::Bloc: return bloc_committee(e);
    case RuleId::PositionalScoring: {
      auto counts = position_counts(e);
      return psr_committee(counts, e.m(), *rule.scores, e.k());
    }
    case RuleId::STV: return stv_committee(e);
    case RuleId::PAV: return pav_committee(e);
    case RuleId::CC: return cc_committee(e);
    case RuleId::LexCC: return lexcc_committee(e);
    case RuleId::MAV: return mav_committee(e);
    case RuleId::Monroe: return monroe_committee(e);
    case RuleId::SeqCC: return seqcc_committee(e);
    case RuleId::GreedyMonroe: return greedy_monroe_committee(e);
    case RuleId::MES: return mes_committee(e);
    case RuleId::EPH: return eph_committee(e);
    case RuleId::RSD: return rsd_committee(e, *rule.seed);
    case RuleId::RandomCommittee: return random_committee_mask(e.m(), e.k(), *rule.seed);
  }
  throw UsageError("unhandled rule");
}

inline Committee elect(const RuleSpec& rule, const Election& e) { return Committee::from_mask(elect_mask(rule, e)); }

inline Committee elect(const RuleSpec& rule, const PreferenceProfile& profile, int k) {
  return elect(rule, Election(profile, k));
}

namespace detail {

template <std::size_t N>
void require_family(const RuleSpec& rule, const std::array<RuleId, N>& family, std::string_view op) {
  if (std::find(family.begin(), family.end(), rule.id) == family.end()) {
    throw UsageError(std::string(op) + " does not handle rule '" + rule.name() + "'");
  }
}

}  // namespace detail

inline Committee elect_scoring(const RuleSpec& rule, const PreferenceProfile& profile, int k) {
  detail::require_family(rule, std::array{RuleId::Borda, RuleId::SNTV, RuleId::Bloc, RuleId::PositionalScoring},
                         "elect_scoring");
  return elect(rule, profile, k);
}

inline Committee elect_stv(const PreferenceProfile& profile, int k, StvOptions opts = {}) {
  return Committee::from_mask(stv_committee(Election(profile, k), opts));
}

inline Committee elect_optimizing(const RuleSpec& rule, const PreferenceProfile& profile, int k) {
  detail::require_family(rule, std::array{RuleId::PAV, RuleId::CC, RuleId::LexCC, RuleId::MAV, RuleId::Monroe},
                         "elect_optimizing");
  return elect(rule, profile, k);
}

inline Committee elect_sequential(const RuleSpec& rule, const PreferenceProfile& profile, int k) {
  detail::require_family(rule, std::array{RuleId::SeqCC, RuleId::GreedyMonroe, RuleId::MES, RuleId::EPH},
                         "elect_sequential");
  return elect(rule, profile, k);
}

inline Committee elect_rsd(const PreferenceProfile& profile, int k, RngSeed seed) {
  return Committee::from_mask(rsd_committee(Election(profile, k), seed));
}

inline Committee random_committee(int m, int k, RngSeed seed) {
  return Committee::from_mask(random_committee_mask(m, k, seed));
}

}  // namespace mwv
