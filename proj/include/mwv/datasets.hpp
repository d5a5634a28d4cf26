#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "mwv/distributions.hpp"
#include "mwv/election.hpp"
#include "mwv/io.hpp"
#include "mwv/search.hpp"

namespace mwv {

// [majority | weighted | ranking], each m x m row-major. Majority uses weak
// majorities, so a tied pair sets both (i,j) and (j,i).
using FeatureVector = std::vector<double>;

inline FeatureVector build_features(const PreferenceProfile& profile) {
  const int m = profile.num_alternatives();
  const double n = profile.num_voters();
  const auto um = static_cast<std::size_t>(m);
  FeatureVector f(3 * um * um, 0.0);
  std::vector<int> prefer(um * um, 0), at(um * um, 0);
  for (const auto& r : profile.rankings()) {
    for (std::size_t p = 0; p < um; ++p) {
      ++at[static_cast<std::size_t>(r[p]) * um + p];
      for (std::size_t q = p + 1; q < um; ++q) ++prefer[static_cast<std::size_t>(r[p]) * um + static_cast<std::size_t>(r[q])];
    }
  }
  for (std::size_t i = 0; i < um; ++i) {
    for (std::size_t j = 0; j < um; ++j) {
      const std::size_t cell = i * um + j;
      if (i != j) {
        f[cell] = 2 * prefer[cell] >= profile.num_voters() ? 1.0 : 0.0;
        f[um * um + cell] = prefer[cell] / n;
      }
      f[2 * um * um + cell] = at[cell] / n;
    }
  }
  return f;
}

struct DatasetExample {
  int m = 0;
  int n = 0;
  int k = 0;
  std::string dist;
  std::string axiom_set;  // "all" or "root" (or an explicit list)
  FeatureVector features;
  std::vector<int> label;  // k-hot over m
  int min_violations = 0;

  friend bool operator==(const DatasetExample&, const DatasetExample&) = default;
};

inline std::vector<int> k_hot(const Committee& c, int m) {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (Alternative a : c.members()) out[static_cast<std::size_t>(a)] = 1;
  return out;
}

// Renames the alternatives with `seed`, then labels the renamed profile with
// its minimum-violation committee.
inline DatasetExample make_example(const PreferenceProfile& profile, int k, AxiomSet axioms, RngSeed seed,
                                   std::string dist = "") {
  const PreferenceProfile renamed = rename_alternatives(profile, seed);
  const auto best = min_violation_committee(renamed, k, axioms);
  DatasetExample ex;
  ex.m = renamed.num_alternatives();
  ex.n = renamed.num_voters();
  ex.k = k;
  ex.dist = std::move(dist);
  ex.axiom_set = axiom_set_name(axioms);
  ex.features = build_features(renamed);
  ex.label = k_hot(best.committee, ex.m);
  ex.min_violations = best.violations;
  return ex;
}

// Drops examples whose features repeat an earlier example, keeping the first.
inline std::vector<DatasetExample> deduplicate(const std::vector<DatasetExample>& examples) {
  std::set<FeatureVector> seen;
  std::vector<DatasetExample> out;
  for (const auto& ex : examples) {
    if (seen.insert(ex.features).second) out.push_back(ex);
  }
  return out;
}

inline Json example_to_json(const DatasetExample& ex) {
  return Json{{"m", ex.m},
              {"n", ex.n},
              {"k", ex.k},
              {"dist", ex.dist},
              {"axiom_set", ex.axiom_set},
              {"features", ex.features},
              {"label", ex.label},
              {"min_violations", ex.min_violations}};
}

inline void write_dataset(std::ostream& out, const std::vector<DatasetExample>& examples) {
  for (const auto& ex : examples) out << example_to_json(ex).dump(-1, ' ', false, Json::error_handler_t::strict) << '\n';
}

inline void write_dataset(const std::string& path, const std::vector<DatasetExample>& examples) {
  auto out = open_output(path);
  write_dataset(out, examples);
}

// Every record must share m, k, dist and axiom_set with the first one.
inline std::vector<DatasetExample> read_dataset(std::istream& in) {
  std::vector<DatasetExample> out;
  for_each_json_line(in, [&](const Json& r, std::size_t line) {
    DatasetExample ex;
    ex.m = detail::field<int>(r, "m", line);
    ex.n = detail::field<int>(r, "n", line);
    ex.k = detail::field<int>(r, "k", line);
    ex.dist = detail::field<std::string>(r, "dist", line);
    ex.axiom_set = detail::field<std::string>(r, "axiom_set", line);
    ex.features = detail::field<std::vector<double>>(r, "features", line);
    ex.label = detail::field<std::vector<int>>(r, "label", line);
    ex.min_violations = detail::field<int>(r, "min_violations", line);
    if (ex.m < 2 || ex.n < 1 || ex.k < 1 || ex.k >= ex.m) throw ParseError(line, "invalid m, n or k");
    const auto um = static_cast<std::size_t>(ex.m);
    if (ex.features.size() != 3 * um * um) throw ParseError(line, "features must have 3*m*m entries");
    for (double x : ex.features) {
      if (!(x >= 0.0 && x <= 1.0)) throw ParseError(line, "feature value outside [0,1]");
    }
    if (ex.label.size() != um) throw ParseError(line, "label must have m entries");
    int ones = 0;
    for (int x : ex.label) {
      if (x != 0 && x != 1) throw ParseError(line, "label entries must be 0 or 1");
      ones += x;
    }
    if (ones != ex.k) throw ParseError(line, "label must have exactly k ones");
    if (ex.min_violations < 0) throw ParseError(line, "negative min_violations");
    if (!out.empty()) {
      const auto& f = out.front();
      if (ex.m != f.m || ex.k != f.k || ex.dist != f.dist || ex.axiom_set != f.axiom_set) {
        throw ParseError(line, "record differs from the first record in m, k, dist or axiom_set");
      }
    }
    out.push_back(std::move(ex));
  });
  return out;
}

inline std::vector<DatasetExample> read_dataset(const std::string& path) {
  auto in = open_input(path);
  return read_dataset(in);
}

// ---------------------------------------------------------------------------
// Predictions: {"index": i, "scores": [m reals]} or {"index": i, "committee": [k ints]}.
// Indices must run 0, 1, 2, ... without gaps.

inline Committee decode_scores(std::span<const double> scores, int k) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw DataError("prediction scores must be finite");
  }
  return Committee::from_mask(top_k_by_score<double>(scores, k));
}

inline std::vector<Committee> read_predictions(std::istream& in, int m, int k) {
  check_committee_size(m, k);
  std::vector<Committee> out;
  for_each_json_line(in, [&](const Json& r, std::size_t line) {
    if (!detail::has_index(r)) throw ParseError(line, "missing field 'index'");
    detail::check_index(r, out.size(), line);
    if (r.contains("scores")) {
      auto scores = detail::field<std::vector<double>>(r, "scores", line);
      if (static_cast<int>(scores.size()) != m) {
        throw ParseError(line, "expected " + std::to_string(m) + " scores, found " + std::to_string(scores.size()));
      }
      try {
        out.push_back(decode_scores(scores, k));
      } catch (const DataError& e) {
        throw ParseError(line, e.what());
      }
    } else if (r.contains("committee")) {
      auto members = detail::field<std::vector<Alternative>>(r, "committee", line);
      if (static_cast<int>(members.size()) != k) {
        throw ParseError(line, "expected " + std::to_string(k) + " committee members, found " +
                                   std::to_string(members.size()));
      }
      for (Alternative a : members) {
        if (a < 0 || a >= m) throw ParseError(line, "committee member " + std::to_string(a) + " out of range");
      }
      try {
        out.push_back(Committee(std::move(members)));
      } catch (const ParameterError& e) {
        throw ParseError(line, e.what());
      }
    } else {
      throw ParseError(line, "record needs 'scores' or 'committee'");
    }
  });
  return out;
}

inline std::vector<Committee> read_predictions(const std::string& path, int m, int k) {
  auto in = open_input(path);
  return read_predictions(in, m, k);
}

inline void write_score_predictions(std::ostream& out, const std::vector<std::vector<double>>& scores) {
  for (std::size_t i = 0; i < scores.size(); ++i) out << Json{{"index", i}, {"scores", scores[i]}}.dump() << '\n';
}

}  // namespace mwv
