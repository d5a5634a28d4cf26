#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mwv/errors.hpp"
#include "mwv/profile.hpp"
#include "mwv/random.hpp"

namespace mwv {

enum class DistributionKind {
  IC,
  IAC,
  Mallows,
  Urn,
  Euclidean,
  Identity,
  SinglePeakedConitzer,
  SinglePeakedWalsh,
  Stratified,
  Mixed,
};

enum class Topology { Ball, Cube };
enum class Placement { Uniform, Gaussian };

struct EuclideanParams {
  int dimension = 3;
  Topology topology = Topology::Ball;
  Placement placement = Placement::Uniform;
  friend bool operator==(const EuclideanParams&, const EuclideanParams&) = default;
};

// Gaussian placements are standard normal, truncated to this radius (ball)
// or half-width (cube). Uniform placements use the unit ball / [-1,1]^d.
inline constexpr double kGaussianTruncation = 3.0;

struct DistributionSpec {
  DistributionKind kind = DistributionKind::IC;
  // Mallows: normalized dispersion in [0,1]; empty means drawn U[0,1] per profile.
  std::optional<double> dispersion;
  // Urn: contagion alpha >= 0; empty means drawn from Gamma(shape, scale) per profile.
  std::optional<double> alpha;
  double urn_gamma_shape = 0.8;
  double urn_gamma_scale = 1.0;
  // Stratified: first-class weight in (0,1).
  double weight = 0.5;
  EuclideanParams euclidean;
  // Mixed: equally weighted components.
  std::vector<DistributionSpec> components;

  static DistributionSpec of(DistributionKind kind) {
    DistributionSpec s;
    s.kind = kind;
    return s;
  }
  static DistributionSpec ic() { return of(DistributionKind::IC); }
  static DistributionSpec iac() { return of(DistributionKind::IAC); }
  static DistributionSpec identity() { return of(DistributionKind::Identity); }
  static DistributionSpec sp_conitzer() { return of(DistributionKind::SinglePeakedConitzer); }
  static DistributionSpec sp_walsh() { return of(DistributionKind::SinglePeakedWalsh); }
  static DistributionSpec mallows(std::optional<double> dispersion = std::nullopt) {
    DistributionSpec s = of(DistributionKind::Mallows);
    s.dispersion = dispersion;
    return s;
  }
  static DistributionSpec urn(std::optional<double> alpha = std::nullopt) {
    DistributionSpec s = of(DistributionKind::Urn);
    s.alpha = alpha;
    return s;
  }
  static DistributionSpec stratified(double w = 0.5) {
    DistributionSpec s = of(DistributionKind::Stratified);
    s.weight = w;
    return s;
  }
  static DistributionSpec euclidean_space(int dimension, Topology t, Placement p) {
    DistributionSpec s = of(DistributionKind::Euclidean);
    s.euclidean = {dimension, t, p};
    return s;
  }
  static DistributionSpec mixed(std::vector<DistributionSpec> parts);

  std::string name() const;
  void validate() const;
};

// The sixteen concrete experiment distributions (everything except Mixed).
inline std::vector<DistributionSpec> standard_distributions() {
  std::vector<DistributionSpec> out = {
      DistributionSpec::ic(),          DistributionSpec::iac(),         DistributionSpec::identity(),
      DistributionSpec::mallows(),     DistributionSpec::urn(),         DistributionSpec::sp_conitzer(),
      DistributionSpec::sp_walsh(),    DistributionSpec::stratified(0.5),
  };
  for (int dim : {3, 10}) {
    for (Topology t : {Topology::Ball, Topology::Cube}) {
      for (Placement p : {Placement::Uniform, Placement::Gaussian}) {
        out.push_back(DistributionSpec::euclidean_space(dim, t, p));
      }
    }
  }
  return out;
}

inline DistributionSpec DistributionSpec::mixed(std::vector<DistributionSpec> parts) {
  DistributionSpec s = of(DistributionKind::Mixed);
  s.components = parts.empty() ? standard_distributions() : std::move(parts);
  return s;
}

// Standard sixteen plus their even mixture.
inline std::vector<DistributionSpec> experiment_distributions() {
  auto out = standard_distributions();
  out.push_back(DistributionSpec::mixed({}));
  return out;
}

namespace detail {

inline std::string format_param(double x) {
  std::string s = std::to_string(x);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline double parse_param(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    double v = std::stod(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParameterError("bad " + std::string(what) + " parameter '" + std::string(text) + "'");
  }
}

}  // namespace detail

inline std::string DistributionSpec::name() const {
  switch (kind) {
    case DistributionKind::IC: return "ic";
    case DistributionKind::IAC: return "iac";
    case DistributionKind::Identity: return "identity";
    case DistributionKind::SinglePeakedConitzer: return "sp-conitzer";
    case DistributionKind::SinglePeakedWalsh: return "sp-walsh";
    case DistributionKind::Mallows:
      return dispersion ? "mallows:" + detail::format_param(*dispersion) : "mallows";
    case DistributionKind::Urn: return alpha ? "urn:" + detail::format_param(*alpha) : "urn";
    case DistributionKind::Stratified: return "stratified:" + detail::format_param(weight);
    case DistributionKind::Euclidean:
      return "euclidean-" + std::to_string(euclidean.dimension) +
             (euclidean.topology == Topology::Ball ? "-ball" : "-cube") +
             (euclidean.placement == Placement::Uniform ? "-uniform" : "-gaussian");
    case DistributionKind::Mixed: return "mixed";
  }
  return "unknown";
}

inline void DistributionSpec::validate() const {
  switch (kind) {
    case DistributionKind::Mallows:
      if (dispersion && !(*dispersion >= 0.0 && *dispersion <= 1.0)) {
        throw ParameterError("Mallows dispersion must lie in [0,1]");
      }
      break;
    case DistributionKind::Urn:
      if (alpha && !(*alpha >= 0.0)) throw ParameterError("Urn alpha must be non-negative");
      if (!(urn_gamma_shape > 0.0) || !(urn_gamma_scale > 0.0)) {
        throw ParameterError("Urn Gamma prior needs positive shape and scale");
      }
      break;
    case DistributionKind::Stratified:
      if (!(weight > 0.0 && weight < 1.0)) throw ParameterError("Stratified weight must lie in (0,1)");
      break;
    case DistributionKind::Euclidean:
      if (euclidean.dimension < 1) throw ParameterError("Euclidean dimension must be positive");
      break;
    case DistributionKind::Mixed:
      if (components.empty()) throw ParameterError("Mixed needs at least one component");
      for (const auto& c : components) {
        if (c.kind == DistributionKind::Mixed) throw ParameterError("Mixed components cannot be Mixed");
        c.validate();
      }
      break;
    default: break;
  }
}

// Accepts the names produced by DistributionSpec::name().
inline DistributionSpec parse_distribution(std::string_view text) {
  std::string_view head = text;
  std::optional<std::string_view> arg;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  auto no_arg = [&](DistributionSpec s) {
    if (arg) throw ParameterError("distribution '" + std::string(head) + "' takes no parameter");
    return s;
  };
  DistributionSpec out;
  if (head == "ic") out = no_arg(DistributionSpec::ic());
  else if (head == "iac") out = no_arg(DistributionSpec::iac());
  else if (head == "identity") out = no_arg(DistributionSpec::identity());
  else if (head == "sp-conitzer") out = no_arg(DistributionSpec::sp_conitzer());
  else if (head == "sp-walsh") out = no_arg(DistributionSpec::sp_walsh());
  else if (head == "mixed") out = no_arg(DistributionSpec::mixed({}));
  else if (head == "mallows") {
    out = DistributionSpec::mallows(arg ? std::optional(detail::parse_param(*arg, "mallows")) : std::nullopt);
  } else if (head == "urn") {
    out = DistributionSpec::urn(arg ? std::optional(detail::parse_param(*arg, "urn")) : std::nullopt);
  } else if (head == "stratified") {
    out = DistributionSpec::stratified(arg ? detail::parse_param(*arg, "stratified") : 0.5);
  } else if (head.starts_with("euclidean-")) {
    // euclidean-<dim>-<ball|cube>-<uniform|gaussian>
    std::string rest(head.substr(10));
    auto d1 = rest.find('-');
    auto d2 = d1 == std::string::npos ? d1 : rest.find('-', d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos || arg) {
      throw ParameterError("malformed euclidean distribution '" + std::string(text) + "'");
    }
    int dim = static_cast<int>(detail::parse_param(rest.substr(0, d1), "euclidean dimension"));
    std::string topo = rest.substr(d1 + 1, d2 - d1 - 1);
    std::string place = rest.substr(d2 + 1);
    if ((topo != "ball" && topo != "cube") || (place != "uniform" && place != "gaussian")) {
      throw ParameterError("malformed euclidean distribution '" + std::string(text) + "'");
    }
    out = DistributionSpec::euclidean_space(dim, topo == "ball" ? Topology::Ball : Topology::Cube,
                                            place == "uniform" ? Placement::Uniform : Placement::Gaussian);
  } else {
    throw ParameterError("unknown distribution '" + std::string(text) + "'");
  }
  out.validate();
  return out;
}

namespace detail {

inline Ranking identity_ranking(int m) {
  Ranking r(static_cast<std::size_t>(m));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline Ranking uniform_ranking(int m, Rng& rng) {
  Ranking r = identity_ranking(m);
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

// Expected Kendall-tau distance from the center under Mallows(phi).
inline double mallows_expected_swaps(int m, double phi) {
  double total = 0.0;
  for (int j = 1; j <= m; ++j) {
    double num = 0.0, den = 0.0, p = 1.0;
    for (int d = 0; d < j; ++d) {
      num += d * p;
      den += p;
      p *= phi;
    }
    total += num / den;
  }
  return total;
}

}  // namespace detail

// Maps a normalized dispersion (expected swaps as a fraction of m(m-1)/4)
// onto the Mallows phi.
inline double mallows_phi_from_normalized(int m, double normalized) {
  if (normalized <= 0.0) return 0.0;
  if (normalized >= 1.0) return 1.0;
  const double target = normalized * m * (m - 1) / 4.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (detail::mallows_expected_swaps(m, mid) < target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace detail {

// Repeated insertion around the identity center.
inline Ranking mallows_ranking(int m, double phi, Rng& rng) {
  Ranking r;
  r.reserve(static_cast<std::size_t>(m));
  std::vector<double> weights;
  for (int j = 0; j < m; ++j) {
    weights.assign(static_cast<std::size_t>(j + 1), 0.0);
    double p = 1.0;
    for (int d = 0; d <= j; ++d) {
      weights[static_cast<std::size_t>(d)] = p;
      p *= phi;
    }
    int d = 0;
    if (phi > 0.0) {
      std::discrete_distribution<int> pick(weights.begin(), weights.end());
      d = pick(rng);
    }
    // d = number of already placed items the new item is ranked above.
    r.insert(r.begin() + (j - d), j);
  }
  return r;
}

// Each voter draws a fresh uniform order with probability
// orders / (orders + voters_so_far * copies), otherwise copies an earlier voter.
inline std::vector<Ranking> urn_rankings(int n, int m, double copies_per_draw, Rng& rng) {
  double orders = std::tgamma(m + 1.0);
  std::vector<Ranking> out;
  out.reserve(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    double fresh = orders / (orders + i * copies_per_draw);
    if (i == 0 || unit(rng) < fresh) {
      out.push_back(uniform_ranking(m, rng));
    } else {
      std::uniform_int_distribution<int> prev(0, i - 1);
      out.push_back(out[static_cast<std::size_t>(prev(rng))]);
    }
  }
  return out;
}

inline std::vector<double> euclidean_point(const EuclideanParams& p, Rng& rng) {
  const auto d = static_cast<std::size_t>(p.dimension);
  std::vector<double> x(d);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (p.placement == Placement::Uniform) {
    if (p.topology == Topology::Cube) {
      for (auto& c : x) c = 2.0 * unit(rng) - 1.0;
    } else {
      double norm = 0.0;
      do {
        norm = 0.0;
        for (auto& c : x) {
          c = normal(rng);
          norm += c * c;
        }
      } while (norm == 0.0);
      norm = std::sqrt(norm);
      double radius = std::pow(unit(rng), 1.0 / p.dimension);
      for (auto& c : x) c = c / norm * radius;
    }
    return x;
  }
  while (true) {
    double norm2 = 0.0, max_abs = 0.0;
    for (auto& c : x) {
      c = normal(rng);
      norm2 += c * c;
      max_abs = std::max(max_abs, std::abs(c));
    }
    bool inside = p.topology == Topology::Ball ? norm2 <= kGaussianTruncation * kGaussianTruncation
                                               : max_abs <= kGaussianTruncation;
    if (inside) return x;
  }
}

inline std::vector<Ranking> euclidean_rankings(int n, int m, const EuclideanParams& p, Rng& rng) {
  std::vector<std::vector<double>> alts;
  for (int a = 0; a < m; ++a) alts.push_back(euclidean_point(p, rng));
  std::vector<Ranking> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<double> dist(static_cast<std::size_t>(m));
  for (int v = 0; v < n; ++v) {
    auto x = euclidean_point(p, rng);
    for (int a = 0; a < m; ++a) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double diff = x[i] - alts[static_cast<std::size_t>(a)][i];
        s += diff * diff;
      }
      dist[static_cast<std::size_t>(a)] = s;
    }
    Ranking r = identity_ranking(m);
    std::stable_sort(r.begin(), r.end(), [&](int a, int b) {
      return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
    });
    out.push_back(std::move(r));
  }
  return out;
}

// Uniform peak, then grow left/right with equal probability.
inline Ranking conitzer_ranking(int m, Rng& rng) {
  std::uniform_int_distribution<int> peak_dist(0, m - 1);
  std::bernoulli_distribution coin(0.5);
  int peak = peak_dist(rng);
  Ranking r{peak};
  int left = peak - 1, right = peak + 1;
  while (static_cast<int>(r.size()) < m) {
    bool go_left = left >= 0 && (right >= m || coin(rng));
    r.push_back(go_left ? left-- : right++);
  }
  return r;
}

// Uniform over all 2^(m-1) orders single-peaked on the axis 0..m-1: fill
// positions from last to first with an end of the remaining interval.
inline Ranking walsh_ranking(int m, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  Ranking r(static_cast<std::size_t>(m));
  int lo = 0, hi = m - 1;
  for (int pos = m - 1; pos > 0; --pos) {
    r[static_cast<std::size_t>(pos)] = coin(rng) ? lo++ : hi--;
  }
  r[0] = lo;
  return r;
}

inline int stratified_first_class(int m, double w) {
  return std::clamp(static_cast<int>(std::floor(w * m)), 1, m - 1);
}

inline Ranking stratified_ranking(int m, double w, Rng& rng) {
  int split = stratified_first_class(m, w);
  Ranking r = identity_ranking(m);
  std::shuffle(r.begin(), r.begin() + split, rng);
  std::shuffle(r.begin() + split, r.end(), rng);
  return r;
}

}  // namespace detail

// Draws one profile; a pure function of (spec, n, m, seed).
inline PreferenceProfile sample_profile(const DistributionSpec& spec, int n, int m, RngSeed seed) {
  if (n < 1) throw ParameterError("sample_profile needs n >= 1");
  if (m < 2 || m > kMaxAlternatives) throw ParameterError("sample_profile needs 2 <= m <= 64");
  spec.validate();
  Rng rng = make_rng(seed);
  std::vector<Ranking> rankings;
  rankings.reserve(static_cast<std::size_t>(n));
  switch (spec.kind) {
    case DistributionKind::IC:
      for (int v = 0; v < n; ++v) rankings.push_back(detail::uniform_ranking(m, rng));
      break;
    case DistributionKind::IAC:
      // Polya-Eggenberger urn adding one copy per draw: uniform over anonymous profiles.
      rankings = detail::urn_rankings(n, m, 1.0, rng);
      break;
    case DistributionKind::Urn: {
      double alpha = 0.0;
      if (spec.alpha) {
        alpha = *spec.alpha;
      } else {
        std::gamma_distribution<double> prior(spec.urn_gamma_shape, spec.urn_gamma_scale);
        alpha = prior(rng);
      }
      rankings = detail::urn_rankings(n, m, alpha * std::tgamma(m + 1.0), rng);
      break;
    }
    case DistributionKind::Mallows: {
      double norm = 0.0;
      if (spec.dispersion) {
        norm = *spec.dispersion;
      } else {
        norm = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      }
      double phi = mallows_phi_from_normalized(m, norm);
      for (int v = 0; v < n; ++v) rankings.push_back(detail::mallows_ranking(m, phi, rng));
      break;
    }
    case DistributionKind::Euclidean:
      rankings = detail::euclidean_rankings(n, m, spec.euclidean, rng);
      break;
    case DistributionKind::Identity:
      rankings.assign(static_cast<std::size_t>(n), detail::identity_ranking(m));
      break;
    case DistributionKind::SinglePeakedConitzer:
      for (int v = 0; v < n; ++v) rankings.push_back(detail::conitzer_ranking(m, rng));
      break;
    case DistributionKind::SinglePeakedWalsh:
      for (int v = 0; v < n; ++v) rankings.push_back(detail::walsh_ranking(m, rng));
      break;
    case DistributionKind::Stratified:
      for (int v = 0; v < n; ++v) rankings.push_back(detail::stratified_ranking(m, spec.weight, rng));
      break;
    case DistributionKind::Mixed: {
      std::uniform_int_distribution<std::size_t> pick(0, spec.components.size() - 1);
      const auto& part = spec.components[pick(rng)];
      return sample_profile(part, n, m, RngSeed{rng()});
    }
  }
  return PreferenceProfile(m, std::move(rankings));
}

struct SampledProfile {
  PreferenceProfile profile;
  RngSeed seed;
};

// Profile i is drawn with derive_seed(seed, i), so each one replays on its own.
inline std::vector<SampledProfile> sample_profiles(const DistributionSpec& spec, int n, int m, int count,
                                                   RngSeed seed) {
  std::vector<SampledProfile> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    RngSeed s = derive_seed(seed, static_cast<std::uint64_t>(i));
    out.push_back({sample_profile(spec, n, m, s), s});
  }
  return out;
}

// Uniform permutation pi; alternative a is renamed to pi[a].
inline std::vector<Alternative> random_permutation(int m, RngSeed seed) {
  Rng rng = make_rng(seed);
  return detail::uniform_ranking(m, rng);
}

inline PreferenceProfile apply_renaming(const PreferenceProfile& profile, std::span<const Alternative> pi) {
  const int m = profile.num_alternatives();
  if (!PreferenceProfile::is_permutation(pi, m)) throw ParameterError("renaming is not a permutation");
  std::vector<Ranking> out = profile.rankings();
  for (auto& r : out) {
    for (auto& a : r) a = pi[static_cast<std::size_t>(a)];
  }
  return PreferenceProfile(m, std::move(out));
}

inline PreferenceProfile rename_alternatives(const PreferenceProfile& profile, RngSeed seed) {
  auto pi = random_permutation(profile.num_alternatives(), seed);
  return apply_renaming(profile, pi);
}

}  // namespace mwv
