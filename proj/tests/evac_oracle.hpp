#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "thompson/evac.hpp"

namespace thompson::testutil {

// Exhaustive search over all families of simple escape paths with the
// edge-budget constraint; the independent oracle for evac_exists.
inline bool evac_brute_force(const EvacInstance& ins, int C) {
  std::vector<std::vector<int>> outEdges(static_cast<std::size_t>(ins.n));
  for (std::size_t e = 0; e < ins.edges.size(); ++e)
    outEdges[static_cast<std::size_t>(ins.edges[e].first)].push_back(static_cast<int>(e));

  // all simple paths from v to any boundary vertex
  std::vector<std::vector<std::vector<int>>> candidates(static_cast<std::size_t>(ins.n));
  for (int v = 0; v < ins.n; ++v) {
    std::vector<int> path;
    std::vector<bool> onPath(static_cast<std::size_t>(ins.n), false);
    auto dfs = [&](auto&& self, int cur) -> void {
      if (ins.boundary[static_cast<std::size_t>(cur)])
        candidates[static_cast<std::size_t>(v)].push_back(path);
      onPath[static_cast<std::size_t>(cur)] = true;
      for (int e : outEdges[static_cast<std::size_t>(cur)]) {
        int t = ins.edges[static_cast<std::size_t>(e)].second;
        if (onPath[static_cast<std::size_t>(t)]) continue;
        path.push_back(e);
        self(self, t);
        path.pop_back();
      }
      onPath[static_cast<std::size_t>(cur)] = false;
    };
    dfs(dfs, v);
    if (candidates[static_cast<std::size_t>(v)].empty()) return false;
  }

  // fewest-options-first assignment with edge budgets
  std::vector<int> order(static_cast<std::size_t>(ins.n));
  for (int v = 0; v < ins.n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return candidates[static_cast<std::size_t>(a)].size() <
           candidates[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> budget(ins.edges.size(), C);
  auto assign = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    for (const auto& path : candidates[static_cast<std::size_t>(order[idx])]) {
      std::size_t taken = 0;
      bool ok = true;
      for (int e : path) {
        if (budget[static_cast<std::size_t>(e)] == 0) {
          ok = false;
          break;
        }
        --budget[static_cast<std::size_t>(e)];
        ++taken;
      }
      if (ok && self(self, idx + 1)) return true;
      for (std::size_t i = 0; i < taken; ++i) ++budget[static_cast<std::size_t>(path[i])];
    }
    return false;
  };
  return assign(assign, 0);
}

// Random automaton-shaped instance: per generator a random partial
// injection; the boundary is derived from missing labels as in a snapshot.
inline EvacInstance random_evac_instance(std::mt19937_64& rng, int n, int m) {
  EvacInstance ins;
  ins.n = n;
  ins.boundary.assign(static_cast<std::size_t>(n), false);
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(2 * m), -1));
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int g = 0; g < m; ++g) {
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int v = 0; v < n; ++v) {
      if (coin(rng) < 55) {
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(2 * g)] =
            perm[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]
           [static_cast<std::size_t>(2 * g + 1)] = v;
      }
    }
  }
  std::map<std::pair<int, int>, int> ids;
  for (int v = 0; v < n; ++v) {
    bool full = true;
    for (int l = 0; l < 2 * m; ++l) {
      int t = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
      if (t < 0) {
        full = false;
        continue;
      }
      ids[{v, l}] = static_cast<int>(ins.edges.size());
      ins.edges.emplace_back(v, t);
    }
    ins.boundary[static_cast<std::size_t>(v)] = !full;
  }
  ins.inverseEdge.assign(ins.edges.size(), -1);
  for (const auto& [key, id] : ids) {
    auto [v, l] = key;
    int t = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(l)];
    auto it = ids.find({t, l ^ 1});
    if (it != ids.end()) ins.inverseEdge[static_cast<std::size_t>(id)] = it->second;
  }
  return ins;
}

}  // namespace thompson::testutil
