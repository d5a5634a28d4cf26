// Acceptance suite: one PASS/FAIL line per criterion, plus indented detail.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <random>
#include <utility>
#include <vector>

#include <mwv/mwv.hpp>

#include "oracle/naive_axioms.hpp"

using namespace mwv;

namespace {

int failures = 0;

void verdict(bool ok, const std::string& name, const std::string& summary) {
  std::printf("%s  %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), summary.c_str());
  std::fflush(stdout);
  failures += !ok;
}

template <class... Args>
void info(const char* fmt, Args... args) {
  std::printf("      ");
  std::printf(fmt, args...);
  std::printf("\n");
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

naive::Instance instance(const PreferenceProfile& p, int k, AltMask c) {
  naive::Instance in;
  for (const auto& r : p.rankings()) in.rankings.emplace_back(r.begin(), r.end());
  in.m = p.num_alternatives();
  in.k = k;
  for (int a = 0; a < in.m; ++a) {
    if (c >> a & 1u) in.committee.insert(a);
  }
  return in;
}

AltMask mask_of(std::initializer_list<int> members) {
  AltMask out = 0;
  for (int a : members) out |= bit(a);
  return out;
}

bool violated(AxiomId a, const Election& e, AltMask c) { return violates(a, e, Committee::from_mask(c)); }

double closed_form_random_distance(int m, int k) {
  const double shared = (static_cast<double>(k) * k + static_cast<double>(m - k) * (m - k)) / m;
  return (m - shared) / (m - std::abs(m - 2 * k));
}

// Shared sweep for the zero-cell, random-distance, dominance and ordering
// criteria: m=7, every experiment distribution, k=1..6, n=50.
EvaluationReport main_sweep() {
  SweepConfig config;
  config.rules = default_sweep_rules();
  config.distributions = experiment_distributions();
  config.m_list = {7};
  config.k_list = {1, 2, 3, 4, 5, 6};
  config.n = 50;
  config.profiles_per_cell = 2000;
  config.seed = RngSeed{20240601};
  config.rename = true;
  config.threads = default_threads();
  return avr_sweep(config);
}

void known_zeros(const EvaluationReport& report) {
  using A = AxiomId;
  const std::vector<std::pair<const char*, std::vector<A>>> cells = {
      {"borda", {A::StrongUnanimity}},
      {"eph", {A::StrongPareto}},
      {"sntv", {A::MajorityWinner, A::SolidCoalitions}},
      {"bloc", {A::StrongPareto, A::FixedMajority, A::StrongUnanimity}},
      {"stv", {A::MajorityWinner, A::SolidCoalitions, A::Dummetts}},
      {"pav", {A::StrongPareto, A::JR, A::EJR}},
      {"mes", {A::JR, A::EJR}},
      {"cc", {A::JR}},
      {"seqcc", {A::JR}},
      {"monroe", {A::StrongUnanimity, A::JR}},
      {"greedymonroe", {A::StrongUnanimity, A::JR}},
  };
  int pairs = 0, bad = 0;
  double worst = 0;
  for (const auto& [rule, axioms] : cells) {
    for (A a : axioms) {
      const double r = report.rate(rule, a);
      ++pairs;
      worst = std::max(worst, r);
      if (r > 0.001) {
        ++bad;
        info("%s / %s = %.4f", rule, std::string(axiom_name(a)).c_str(), r);
      }
    }
  }
  verdict(bad == 0, "known-satisfaction zeros",
          std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs <= .001 (worst " + fmt("%.4f", worst) + ")");
}

void random_distance(const EvaluationReport& report) {
  double closed = 0;
  for (int k = 1; k <= 6; ++k) closed += closed_form_random_distance(7, k) / 6;
  const bool closed_ok = std::round(closed * 1000) == 714;
  const auto d = report.distances();
  std::size_t random = 0;
  while (d.names[random] != "randomcommittee") ++random;
  double lo = 1, hi = 0;
  bool ok = closed_ok;
  for (std::size_t i = 0; i < d.names.size(); ++i) {
    if (i == random) continue;
    const double v = d.values[i][random];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (std::abs(v - 0.714) > 0.02) {
      ok = false;
      info("%s: %.3f", d.names[i].c_str(), v);
    }
  }
  verdict(ok, "random-baseline distance",
          "closed form " + fmt("%.4f", closed) + ", measured range [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) +
              "] vs .714 +- .02");
}

void dominance(const EvaluationReport& report) {
  verdict(report.dominance_exceptions() == 0, "oracle dominance",
          std::to_string(report.dominance_exceptions()) + " exceptions over " + std::to_string(report.cells.size()) +
              " cells, " + std::to_string(report.total_profiles()) + " profiles");
}

void ordering(const EvaluationReport& report) {
  const double borda = report.mean_rate("borda"), cc = report.mean_rate("cc"), seqcc = report.mean_rate("seqcc");
  double middle_lo = 1, middle_hi = 0;
  for (const char* r : {"eph", "bloc", "pav"}) {
    middle_lo = std::min(middle_lo, report.mean_rate(r));
    middle_hi = std::max(middle_hi, report.mean_rate(r));
  }
  for (const auto& name : report.rows) info("%-16s mean %.4f", name.c_str(), report.mean_rate(name));
  const bool ok = std::abs(borda - 0.021) <= 0.01 && std::abs(cc - 0.195) <= 0.05 && borda < middle_lo &&
                  middle_hi < std::min(cc, seqcc);
  verdict(ok, "mean-AVR ordering",
          "borda " + fmt("%.4f", borda) + ", {eph,bloc,pav} in [" + fmt("%.4f", middle_lo) + ", " +
              fmt("%.4f", middle_hi) + "], cc " + fmt("%.4f", cc) + ", seqcc " + fmt("%.4f", seqcc));
}

void implication_audit_criterion() {
  // Mixed profiles at m=5; 10 committees per profile for k=2 and k=3.
  bool valid_edges_clean = true;
  std::vector<std::string> failing;
  long min_checked = -1;
  for (int k : {2, 3}) {
    std::vector<PreferenceProfile> profiles;
    for (auto& s : sample_profiles(DistributionSpec::mixed({}), 50, 5, 1500, RngSeed{static_cast<std::uint64_t>(77 + k)})) {
      profiles.push_back(std::move(s.profile));
    }
    const auto report = implication_audit(profiles, k);
    for (const auto& t : report.edges) {
      if (t.checked == 0) continue;
      min_checked = min_checked < 0 ? t.checked : std::min(min_checked, t.checked);
      info("k=%d %-40s checked %ld, counterexamples %ld", k, t.edge.label().c_str(), t.checked, t.counterexamples);
      if (t.counterexamples > 0) failing.push_back(t.edge.label() + " (k=" + std::to_string(k) + ")");
    }
  }
  // Independent edge checks on hand-built profiles, using the naive oracle.
  struct Known {
    const char* what;
    std::vector<Ranking> rankings;
    int k;
    AltMask committee;
    AxiomId holds, fails;
  };
  const std::vector<Known> known = {
      {"local_stability->strong_unanimity", {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}, 2,
       mask_of({0, 2}), AxiomId::LocalStability, AxiomId::StrongUnanimity},
      {"solid_coalitions->jr", {{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 0, 1}, {3, 2, 0, 1}}, 2, mask_of({2, 3}),
       AxiomId::SolidCoalitions, AxiomId::JR},
      {"local_stability->condorcet_loser", {{0, 2, 1}, {1, 2, 0}, {2, 0, 1}}, 2, mask_of({0, 1}),
       AxiomId::LocalStability, AxiomId::CondorcetLoser},
  };
  for (const auto& c : known) {
    const PreferenceProfile p(static_cast<int>(c.rankings.front().size()), c.rankings);
    const auto in = instance(p, c.k, c.committee);
    const bool confirmed = !naive::violates(c.holds, in) && naive::violates(c.fails, in);
    info("hand counterexample to %s confirmed by naive oracle: %s", c.what, confirmed ? "yes" : "no");
  }

  // Fixture profiles.
  bool fixtures_ok = true;
  {
    Election e(fixtures::dummett_vs_majority(), fixtures::kFixtureK);
    ViolationTable t(e, AxiomSet::all());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto f = t.flags_at(i);
      const bool d = f & AxiomSet::flag(AxiomId::Dummetts);
      fixtures_ok = fixtures_ok && (d || (f & AxiomSet::flag(AxiomId::CondorcetWinner))) &&
                    (d || (f & AxiomSet::flag(AxiomId::FixedMajority)));
    }
  }
  {
    Election e(fixtures::ejr_without_dummett(), fixtures::kFixtureK);
    const AltMask c = mask_of({3, 4, 5, 6, 7});
    fixtures_ok = fixtures_ok && !violated(AxiomId::EJR, e, c) && violated(AxiomId::Dummetts, e, c);
  }
  {
    Election e(fixtures::dummett_without_ejr(), fixtures::kFixtureK);
    const AltMask c = mask_of({5, 6, 7, 8, 9});
    fixtures_ok = fixtures_ok && !violated(AxiomId::Dummetts, e, c) && violated(AxiomId::EJR, e, c);
  }
  info("fixture profiles reproduce the stated separations: %s", fixtures_ok ? "yes" : "no");

  valid_edges_clean = failing.empty();
  std::string summary = "min " + std::to_string(min_checked) + " pairs per edge; ";
  if (valid_edges_clean) {
    summary += "no counterexamples";
  } else {
    summary += "counterexamples on";
    for (const auto& f : failing) summary += " " + f;
  }
  summary += fixtures_ok ? "; fixtures ok" : "; fixtures WRONG";
  verdict(valid_edges_clean && fixtures_ok && min_checked >= 10000, "implication audit", summary);
}

void annealing() {
  bool ok = true;
  std::vector<PreferenceProfile> profiles;
  for (auto& s : sample_profiles(DistributionSpec::mixed({}), 50, 7, 3000, RngSeed{4242})) profiles.push_back(std::move(s.profile));
  for (int k : {1, 3, 6}) {
    for (AxiomSet axioms : {AxiomSet::all(), AxiomSet::root()}) {
      AnnealConfig config;
      config.m = 7;
      config.k = k;
      config.axioms = axioms;
      config.steps = 1000;
      config.train_profiles = 1000;
      config.seed = RngSeed{static_cast<std::uint64_t>(k)};
      config.threads = default_threads();
      const auto r = optimize_score_vector(config, profiles);
      const auto& v = r.vector.values();
      bool shape = v.front() == 1.0 && v.back() == 0.0;
      for (std::size_t i = 1; i < v.size(); ++i) shape = shape && v[i] <= v[i - 1];
      const bool better = *r.eval_avr <= *r.borda_eval_avr + 0.002;
      ok = ok && shape && better;
      std::string vec;
      for (double x : v) vec += fmt(" %.3f", x);
      info("k=%d %-4s opt eval %.4f, borda eval %.4f, train %.4f/%.4f, vector [%s ] %s", k,
           axiom_set_name(axioms).c_str(), *r.eval_avr, *r.borda_eval_avr, r.train_avr, r.borda_train_avr,
           vec.c_str(), shape && better ? "" : "<-");
    }
  }
  verdict(ok, "annealing", "held-out Opt <= Borda + .002 and monotone 1..0 shape on all six runs");
}

void metric_formulas() {
  auto repeat = [](AltMask c, std::size_t times) { return std::vector<Committee>(times, Committee::from_mask(c)); };
  const auto a = repeat(mask_of({0, 1, 2}), 5), b = repeat(mask_of({3, 4, 5}), 5);
  std::vector<Committee> x, y;
  for (std::uint64_t s = 0; s < 50; ++s) {
    x.push_back(random_committee(7, 3, RngSeed{s}));
    y.push_back(random_committee(7, 3, RngSeed{s + 1000}));
  }
  const bool ok = rule_distance(x, x, 7, 3) == 0.0 && rule_distance(x, y, 7, 3) == rule_distance(y, x, 7, 3) &&
                  distance_delta(7, 2) == 1.75 && rule_distance(a, b, 6, 3) == 1.0;
  verdict(ok, "metric formulas", "d(F,F)=0, symmetry, delta(7,2)=1.75, disjoint at m=2k gives 1");
}

void double_implementation() {
  long checks = 0, disagreements = 0;
  auto compare = [&](const PreferenceProfile& p, int k, AltMask c) {
    Election e(p, k);
    const auto in = instance(p, k, c);
    for (AxiomId a : kAllAxioms) {
      ++checks;
      if (violated(a, e, c) != naive::violates(a, in)) {
        ++disagreements;
        if (disagreements <= 5) info("disagreement on %s", std::string(axiom_name(a)).c_str());
      }
    }
  };
  // Every n=3, m=3 profile (ordered voters) with every committee.
  std::vector<Ranking> perms;
  Ranking r = {0, 1, 2};
  do perms.push_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  for (const auto& r0 : perms) {
    for (const auto& r1 : perms) {
      for (const auto& r2 : perms) {
        const PreferenceProfile p(3, {r0, r1, r2});
        for (int k : {1, 2}) {
          for (AltMask c : all_committees(3, k)) compare(p, k, c);
        }
      }
    }
  }
  const long exhaustive = checks;
  // 1000 random pairs at n=50, m=7 from the mixed distribution.
  Rng rng = make_rng(RngSeed{99});
  const auto sampled = sample_profiles(DistributionSpec::mixed({}), 50, 7, 1000, RngSeed{98});
  for (const auto& s : sampled) {
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto committees = all_committees(7, k);
    compare(s.profile, k, committees[std::uniform_int_distribution<std::size_t>(0, committees.size() - 1)(rng)]);
  }
  verdict(disagreements == 0, "double implementation",
          std::to_string(disagreements) + " disagreements in " + std::to_string(exhaustive) + " exhaustive + " +
              std::to_string(checks - exhaustive) + " random axiom checks");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  metric_formulas();
  double_implementation();
  implication_audit_criterion();
  const auto report = main_sweep();
  known_zeros(report);
  random_distance(report);
  dominance(report);
  ordering(report);
  annealing();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed (%.0f s)\n", failures, seconds);
  return failures;
}
