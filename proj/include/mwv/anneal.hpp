#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "mwv/metrics.hpp"

namespace mwv {

struct AnnealConfig {
  int m = 7;
  int k = 1;
  AxiomSet axioms = AxiomSet::all();
  int steps = 1000;
  int train_profiles = 2000;
  std::optional<ScoreVector> initial;  // Borda when empty
  double proposal_scale = 0.1;
  double t0 = 0.05;
  double decay = 0.995;
  RngSeed seed{0};
  int threads = 1;

  void validate() const {
    if (steps < 1) throw UsageError("anneal needs steps >= 1");
    if (train_profiles < 1) throw UsageError("anneal needs train_profiles >= 1");
    if (axioms.empty()) throw UsageError("axiom set must be non-empty");
    if (m > kMaxSearchAlternatives) throw CapacityError("anneal needs m <= 12");
    check_committee_size(m, k);
    if (!(proposal_scale > 0) || !(t0 > 0) || !(decay > 0 && decay <= 1)) {
      throw UsageError("anneal needs proposal_scale > 0, t0 > 0 and 0 < decay <= 1");
    }
    if (initial && initial->size() != m) throw UsageError("initial vector length must equal m");
  }
};

// Caches what a positional rule's AVR depends on: per-profile position counts
// and the violation count of every committee. Evaluating a vector is then a
// scoring pass plus one table lookup per profile.
class ScoringLoss {
 public:
  ScoringLoss(std::span<const PreferenceProfile> profiles, int k, AxiomSet axioms, int threads)
      : m_(profiles.empty() ? 0 : profiles.front().num_alternatives()), k_(k), axioms_(axioms) {
    if (profiles.empty()) throw UsageError("loss needs at least one profile");
    if (m_ > kMaxSearchAlternatives) throw CapacityError("loss needs m <= 12");
    const std::size_t stride = std::size_t{1} << m_;
    const auto um = static_cast<std::size_t>(m_);
    counts_.assign(profiles.size() * um * um, 0);
    violations_.assign(profiles.size() * stride, 0);
    parallel_for(profiles.size(), threads, [&](std::size_t p) {
      if (profiles[p].num_alternatives() != m_) throw DataError("profiles disagree on m");
      Election e(profiles[p], k);
      auto pc = position_counts(e);
      std::copy(pc.begin(), pc.end(), counts_.begin() + static_cast<std::ptrdiff_t>(p * um * um));
      ViolationTable table(e, axioms);
      for (std::size_t i = 0; i < table.size(); ++i) {
        violations_[p * stride + table.committees()[i]] = static_cast<std::uint8_t>(table.count_at(i));
      }
    });
    profiles_ = profiles.size();
  }

  std::size_t size() const noexcept { return profiles_; }

  AvrCounts counts(const ScoreVector& vec) const {
    const std::size_t stride = std::size_t{1} << m_;
    const auto um = static_cast<std::size_t>(m_);
    AvrCounts out;
    for (std::size_t p = 0; p < profiles_; ++p) {
      std::span<const int> pc(counts_.data() + p * um * um, um * um);
      out.violations += violations_[p * stride + psr_committee(pc, m_, vec, k_)];
    }
    out.trials = static_cast<long>(profiles_) * axioms_.size();
    return out;
  }

  double operator()(const ScoreVector& vec) const { return counts(vec).rate(); }

 private:
  int m_;
  int k_;
  AxiomSet axioms_;
  std::size_t profiles_ = 0;
  std::vector<int> counts_;
  std::vector<std::uint8_t> violations_;
};

struct AnnealResult {
  ScoreVector vector;
  double train_avr = 0;
  std::optional<double> eval_avr;
  double borda_train_avr = 0;
  std::optional<double> borda_eval_avr;
  std::vector<double> best_trace;  // best-seen training loss after each step
  int accepted = 0;

  nlohmann::json to_json(const AnnealConfig& config) const {
    nlohmann::json j{{"m", config.m},
                     {"k", config.k},
                     {"axiom_set", axiom_set_name(config.axioms)},
                     {"vector", vector.values()},
                     {"train_avr", train_avr},
                     {"borda_train_avr", borda_train_avr},
                     {"steps", config.steps},
                     {"accepted", accepted},
                     {"seed", config.seed.value}};
    j["eval_avr"] = eval_avr ? nlohmann::json(*eval_avr) : nlohmann::json(nullptr);
    j["borda_eval_avr"] = borda_eval_avr ? nlohmann::json(*borda_eval_avr) : nlohmann::json(nullptr);
    return j;
  }
};

// Gaussian kick to one interior coordinate, clamped to [0,1], interior
// re-sorted descending so the vector stays monotone with fixed endpoints.
inline ScoreVector propose_neighbor(const ScoreVector& current, double scale, Rng& rng) {
  std::vector<double> s = current.values();
  const int m = current.size();
  if (m <= 2) return current;
  std::uniform_int_distribution<int> pick(1, m - 2);
  std::normal_distribution<double> noise(0.0, scale);
  auto& x = s[static_cast<std::size_t>(pick(rng))];
  x = std::clamp(x + noise(rng), 0.0, 1.0);
  std::sort(s.begin() + 1, s.end() - 1, std::greater<>());
  return ScoreVector(std::move(s));
}

// Simulated annealing over positional score vectors. The first
// config.train_profiles profiles form the training slice; any remaining
// profiles form the held-out slice.
inline AnnealResult optimize_score_vector(const AnnealConfig& config, std::span<const PreferenceProfile> profiles) {
  config.validate();
  if (profiles.size() < static_cast<std::size_t>(config.train_profiles)) {
    throw UsageError("anneal needs at least " + std::to_string(config.train_profiles) + " profiles, got " +
                     std::to_string(profiles.size()));
  }
  for (const auto& p : profiles) {
    if (p.num_alternatives() != config.m) throw DataError("profile m does not match the anneal configuration");
  }
  const auto train = profiles.first(static_cast<std::size_t>(config.train_profiles));
  const auto held_out = profiles.subspan(static_cast<std::size_t>(config.train_profiles));
  ScoringLoss loss(train, config.k, config.axioms, config.threads);
  const ScoreVector borda = ScoreVector::borda(config.m);

  Rng rng = make_rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ScoreVector current = config.initial.value_or(borda);
  double current_loss = loss(current);
  AnnealResult result;
  result.vector = current;
  result.train_avr = current_loss;
  double temperature = config.t0;
  for (int step = 0; step < config.steps; ++step) {
    ScoreVector candidate = propose_neighbor(current, config.proposal_scale, rng);
    const double candidate_loss = loss(candidate);
    const double delta = candidate_loss - current_loss;
    if (delta <= 0 || unit(rng) < std::exp(-delta / temperature)) {
      current = std::move(candidate);
      current_loss = candidate_loss;
      ++result.accepted;
      if (current_loss < result.train_avr) {
        result.vector = current;
        result.train_avr = current_loss;
      }
    }
    result.best_trace.push_back(result.train_avr);
    temperature *= config.decay;
  }
  result.borda_train_avr = loss(borda);
  if (!held_out.empty()) {
    ScoringLoss eval(held_out, config.k, config.axioms, config.threads);
    result.eval_avr = eval(result.vector);
    result.borda_eval_avr = eval(borda);
  }
  return result;
}

}  // namespace mwv
