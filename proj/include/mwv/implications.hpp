#pragma once

#include <string>
#include <vector>

#include "mwv/axioms.hpp"

namespace mwv {

// "Satisfying `from` implies satisfying `to`" on every profile and committee,
// provided k >= min_k. `top_k_approvals` marks edges that rely on approvals
// being the top-k truncation, which is always the case here.
struct ImplicationEdge {
  AxiomId from;
  AxiomId to;
  int min_k = 1;
  bool top_k_approvals = false;

  std::string label() const { return std::string(axiom_name(from)) + "->" + std::string(axiom_name(to)); }
};

inline const std::vector<ImplicationEdge>& implication_edges() {
  using A = AxiomId;
  static const std::vector<ImplicationEdge> edges = {
      {A::CondorcetWinner, A::FixedMajority},
      {A::SolidCoalitions, A::MajorityWinner, 2},
      {A::SolidCoalitions, A::JR, 1, true},
      {A::LocalStability, A::SolidCoalitions},
      {A::LocalStability, A::StrongUnanimity},
      {A::EJR, A::StrongUnanimity, 1, true},
      {A::StrongPareto, A::StrongUnanimity, 1, true},
      {A::LocalStability, A::CondorcetLoser, 2},
      {A::FixedMajority, A::StrongUnanimity},
      {A::Dummetts, A::SolidCoalitions},
      {A::Dummetts, A::StrongUnanimity},
      {A::Core, A::EJR},
      {A::EJR, A::JR},
  };
  return edges;
}

struct ImplicationCounterexample {
  std::size_t profile_index;
  Committee committee;
  std::string edge;
};

struct EdgeTally {
  ImplicationEdge edge;
  long checked = 0;
  long counterexamples = 0;
};

struct ImplicationReport {
  int k = 0;
  std::vector<EdgeTally> edges;
  std::vector<ImplicationCounterexample> counterexamples;  // first few per edge
  long total_counterexamples() const {
    long out = 0;
    for (const auto& e : edges) out += e.counterexamples;
    return out;
  }
};

// Checks every edge on every committee of every profile. Keeps at most
// `keep_per_edge` counterexample tuples per edge; the tallies are complete.
inline ImplicationReport implication_audit(const std::vector<PreferenceProfile>& profiles, int k,
                                           std::size_t keep_per_edge = 5) {
  ImplicationReport report;
  report.k = k;
  for (const auto& edge : implication_edges()) report.edges.push_back({edge});
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    if (profiles[p].num_alternatives() > 10) throw CapacityError("implication audit needs m <= 10");
    Election e(profiles[p], k);
    ViolationTable table(e, AxiomSet::all());
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto flags = table.flags_at(i);
      for (auto& tally : report.edges) {
        if (k < tally.edge.min_k) continue;
        ++tally.checked;
        const bool from_ok = (flags & AxiomSet::flag(tally.edge.from)) == 0;
        const bool to_bad = (flags & AxiomSet::flag(tally.edge.to)) != 0;
        if (from_ok && to_bad) {
          if (static_cast<std::size_t>(tally.counterexamples) < keep_per_edge) {
            report.counterexamples.push_back(
                {p, Committee::from_mask(table.committees()[i]), tally.edge.label()});
          }
          ++tally.counterexamples;
        }
      }
    }
  }
  return report;
}

}  // namespace mwv
