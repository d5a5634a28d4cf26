#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "mwv/election.hpp"

namespace mwv {

// Optimal balanced assignment value for a fixed committee: every voter gets
// one member, every member gets between floor(n/k) and ceil(n/k) voters,
// maximising the summed Borda score of assigned members.
//
// Successive shortest paths on the min-cost flow, with the residual graph
// contracted onto the k members: an edge i -> j is "move the cheapest voter
// from i to j", the start node stands for any unassigned voter. Member -> sink
// costs are -big for the first floor(n/k) units, then 0 for one extra unit.
inline long monroe_assignment_value(const Election& e, std::span<const Alternative> members) {
  const int n = e.n();
  const int k = static_cast<int>(members.size());
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  const long big = static_cast<long>(n) * e.m() + 1;
  const long inf = std::numeric_limits<long>::max() / 4;
  const auto uk = static_cast<std::size_t>(k);

  std::vector<long> util(static_cast<std::size_t>(n) * uk);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < k; ++j) util[static_cast<std::size_t>(v) * uk + static_cast<std::size_t>(j)] = e.borda(v, members[static_cast<std::size_t>(j)]);
  }
  auto u = [&](int v, int j) { return util[static_cast<std::size_t>(v) * uk + static_cast<std::size_t>(j)]; };

  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  std::vector<int> load(uk, 0);
  // Nodes: 0..k-1 members, k = start.
  const int start = k;
  std::vector<long> edge((uk + 1) * uk);
  std::vector<int> via((uk + 1) * uk);
  std::vector<long> dist(uk + 1);
  std::vector<int> pred(uk + 1);

  for (int step = 0; step < n; ++step) {
    std::fill(edge.begin(), edge.end(), inf);
    std::fill(via.begin(), via.end(), -1);
    for (int v = 0; v < n; ++v) {
      int from = assign[static_cast<std::size_t>(v)];
      int node = from < 0 ? start : from;
      for (int j = 0; j < k; ++j) {
        if (j == from) continue;
        long c = (from < 0 ? 0 : u(v, from)) - u(v, j);
        auto idx = static_cast<std::size_t>(node) * uk + static_cast<std::size_t>(j);
        if (c < edge[idx]) {
          edge[idx] = c;
          via[idx] = v;
        }
      }
    }
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(pred.begin(), pred.end(), -1);
    dist[static_cast<std::size_t>(start)] = 0;
    for (int round = 0; round <= k; ++round) {
      bool changed = false;
      for (int a = 0; a <= k; ++a) {
        if (dist[static_cast<std::size_t>(a)] >= inf) continue;
        for (int b = 0; b < k; ++b) {
          long c = edge[static_cast<std::size_t>(a) * uk + static_cast<std::size_t>(b)];
          if (c >= inf) continue;
          if (dist[static_cast<std::size_t>(a)] + c < dist[static_cast<std::size_t>(b)]) {
            dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + c;
            pred[static_cast<std::size_t>(b)] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int end = -1;
    long best = inf;
    for (int j = 0; j < k; ++j) {
      int l = load[static_cast<std::size_t>(j)];
      if (l >= hi || dist[static_cast<std::size_t>(j)] >= inf) continue;
      long total = dist[static_cast<std::size_t>(j)] + (l < lo ? -big : 0);
      if (total < best) {
        best = total;
        end = j;
      }
    }
    // Walk back from end to start, reassigning one voter per edge.
    int node = end;
    while (node != start) {
      int prev = pred[static_cast<std::size_t>(node)];
      int v = via[static_cast<std::size_t>(prev) * uk + static_cast<std::size_t>(node)];
      assign[static_cast<std::size_t>(v)] = node;
      node = prev;
    }
    ++load[static_cast<std::size_t>(end)];
  }
  long value = 0;
  for (int v = 0; v < n; ++v) value += u(v, assign[static_cast<std::size_t>(v)]);
  return value;
}

// Exhaustive Monroe with branch and bound: the unconstrained bound
// sum_v max_{c in C} borda(v, c) is checked before the exact assignment.
inline AltMask monroe_committee(const Election& e) {
  auto committees = all_committees(e.m(), e.k());
  std::vector<long> bound(committees.size());
  for (std::size_t i = 0; i < committees.size(); ++i) {
    long s = 0;
    for (int v = 0; v < e.n(); ++v) {
      // First member of C in v's ranking.
      for (Alternative a : e.ranking(v)) {
        if (committees[i] & bit(a)) {
          s += e.borda(v, a);
          break;
        }
      }
    }
    bound[i] = s;
  }
  std::vector<std::size_t> order(committees.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });

  AltMask best = 0;
  long best_value = -1;
  for (std::size_t i : order) {
    AltMask c = committees[i];
    if (bound[i] < best_value) break;
    if (bound[i] == best_value && !lex_less(c, best)) continue;
    auto members = members_of(c);
    long value = monroe_assignment_value(e, members);
    if (value > best_value || (value == best_value && lex_less(c, best))) {
      best = c;
      best_value = value;
    }
  }
  return best;
}

// Greedy Monroe: each round takes the (alternative, voter group) pair with the
// largest summed Borda score; groups have ceil(n/k) voters for the first
// n mod k rounds, floor(n/k) afterwards.
inline AltMask greedy_monroe_committee(const Election& e) {
  const int n = e.n(), k = e.k();
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  int left = n;
  AltMask chosen = 0;
  std::vector<std::pair<int, int>> scored;  // (-score, voter)
  for (int round = 0; round < k; ++round) {
    int size = round < n % k ? n / k + 1 : n / k;
    size = std::min(size, left);
    int best = -1;
    long best_score = -1;
    for (int a = 0; a < e.m(); ++a) {
      if (chosen & bit(a)) continue;
      scored.clear();
      for (int v = 0; v < n; ++v) {
        if (active[static_cast<std::size_t>(v)]) scored.emplace_back(-e.borda(v, a), v);
      }
      std::partial_sort(scored.begin(), scored.begin() + size, scored.end());
      long s = 0;
      for (int i = 0; i < size; ++i) s -= scored[static_cast<std::size_t>(i)].first;
      if (s > best_score) {
        best = a;
        best_score = s;
      }
    }
    chosen |= bit(best);
    scored.clear();
    for (int v = 0; v < n; ++v) {
      if (active[static_cast<std::size_t>(v)]) scored.emplace_back(-e.borda(v, best), v);
    }
    std::partial_sort(scored.begin(), scored.begin() + size, scored.end());
    for (int i = 0; i < size; ++i) active[static_cast<std::size_t>(scored[static_cast<std::size_t>(i)].second)] = 0;
    left -= size;
  }
  return chosen;
}

}  // namespace mwv
