#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/cayley.hpp"
#include "thompson/maxflow.hpp"
#include "thompson/numeric.hpp"

namespace thompson {

// Abstract input of the evacuation-scheme feasibility problem: a finite
// directed graph, a set of escape (boundary) vertices, and the pairing of
// mutually inverse directed edges where one exists.
struct EvacInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // directed (from, to)
  std::vector<int> inverseEdge;            // index of e^-1, or -1
  std::vector<bool> boundary;

  static EvacInstance from_snapshot(const SubgraphSnapshot& s) {
    EvacInstance ins;
    ins.n = static_cast<int>(s.size());
    ins.boundary.resize(s.size());
    std::map<std::pair<int, std::size_t>, int> edgeId;
    for (int v = 0; v < ins.n; ++v) {
      ins.boundary[static_cast<std::size_t>(v)] = s.is_boundary(v);
      for (std::size_t l = 0; l < s.label_count(); ++l) {
        int t = s.target(v, l);
        if (t < 0) continue;
        edgeId[{v, l}] = static_cast<int>(ins.edges.size());
        ins.edges.emplace_back(v, t);
      }
    }
    ins.inverseEdge.assign(ins.edges.size(), -1);
    for (const auto& [key, id] : edgeId) {
      auto [v, l] = key;
      int t = s.target(v, l);
      auto it = edgeId.find({t, SubgraphSnapshot::inverse_label(l)});
      if (it != edgeId.end()) ins.inverseEdge[static_cast<std::size_t>(id)] = it->second;
    }
    return ins;
  }
};

// Per-vertex escape paths as edge index sequences; boundary vertices may use
// the empty path.
struct EvacScheme {
  int capacity = 1;
  std::vector<std::vector<int>> paths;
};

inline bool verify_scheme(const EvacInstance& ins, const EvacScheme& scheme) {
  if (scheme.paths.size() != static_cast<std::size_t>(ins.n)) return false;
  std::map<int, int> used;
  for (int v = 0; v < ins.n; ++v) {
    int cur = v;
    for (int e : scheme.paths[static_cast<std::size_t>(v)]) {
      if (e < 0 || e >= static_cast<int>(ins.edges.size())) return false;
      if (ins.edges[static_cast<std::size_t>(e)].first != cur) return false;
      used[e]++;
      cur = ins.edges[static_cast<std::size_t>(e)].second;
    }
    if (!ins.boundary[static_cast<std::size_t>(cur)]) return false;
  }
  for (const auto& [e, count] : used) {
    if (count > scheme.capacity) return false;
    if (scheme.capacity == 1) {
      int inv = ins.inverseEdge[static_cast<std::size_t>(e)];
      if (inv >= 0 && inv > e && used.count(inv)) return false;
    }
  }
  return true;
}

// Feasibility by integral max flow: unit supply per vertex, capacity C per
// directed edge, free absorption on the boundary.  On success the witness
// has simple paths, and for C = 1 an edge and its inverse never both occur.
inline std::pair<bool, std::optional<EvacScheme>> evac_exists(const EvacInstance& ins, int C) {
  if (C < 1) throw std::invalid_argument("capacity must be positive");
  const int n = ins.n;
  MaxFlow net(n + 2);  // 0 = source, 1 = sink, 2+v = vertex
  std::vector<int> sinkArc(static_cast<std::size_t>(n), -1);
  std::vector<int> arcOf(ins.edges.size());
  for (int v = 0; v < n; ++v) {
    net.add_edge(0, 2 + v, 1);
    if (ins.boundary[static_cast<std::size_t>(v)]) sinkArc[static_cast<std::size_t>(v)] = net.add_edge(2 + v, 1, n);
  }
  for (std::size_t e = 0; e < ins.edges.size(); ++e)
    arcOf[e] = net.add_edge(2 + ins.edges[e].first, 2 + ins.edges[e].second, C);

  if (net.run(0, 1) != n) return {false, std::nullopt};

  std::vector<long long> flow(ins.edges.size());
  for (std::size_t e = 0; e < ins.edges.size(); ++e) flow[e] = net.flow_on(arcOf[e]);

  // purification: flow on an edge cancels against flow on its inverse
  for (std::size_t e = 0; e < ins.edges.size(); ++e) {
    int inv = ins.inverseEdge[e];
    if (inv < 0 || static_cast<std::size_t>(inv) <= e) continue;
    long long cancel = std::min(flow[e], flow[static_cast<std::size_t>(inv)]);
    flow[e] -= cancel;
    flow[static_cast<std::size_t>(inv)] -= cancel;
  }

  std::vector<long long> sinkFlow(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (sinkArc[static_cast<std::size_t>(v)] >= 0)
      sinkFlow[static_cast<std::size_t>(v)] = net.flow_on(sinkArc[static_cast<std::size_t>(v)]);

  std::vector<std::vector<int>> outEdges(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < ins.edges.size(); ++e)
    outEdges[static_cast<std::size_t>(ins.edges[e].first)].push_back(static_cast<int>(e));

  // one path per vertex; entering a repeated vertex drops the cycle just
  // walked (its flow has already been consumed)
  EvacScheme scheme;
  scheme.capacity = C;
  scheme.paths.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> path;
    std::vector<int> nodes{v};
    int cur = v;
    for (;;) {
      if (sinkFlow[static_cast<std::size_t>(cur)] > 0) {
        --sinkFlow[static_cast<std::size_t>(cur)];
        break;
      }
      bool advanced = false;
      for (int e : outEdges[static_cast<std::size_t>(cur)]) {
        if (flow[static_cast<std::size_t>(e)] == 0) continue;
        --flow[static_cast<std::size_t>(e)];
        int t = ins.edges[static_cast<std::size_t>(e)].second;
        auto seen = std::find(nodes.begin(), nodes.end(), t);
        if (seen != nodes.end()) {
          std::size_t keep = static_cast<std::size_t>(seen - nodes.begin());
          path.resize(keep);
          nodes.resize(keep + 1);
        } else {
          path.push_back(e);
          nodes.push_back(t);
        }
        cur = t;
        advanced = true;
        break;
      }
      if (!advanced) throw std::logic_error("flow decomposition stuck");
    }
    scheme.paths[static_cast<std::size_t>(v)] = std::move(path);
  }
  if (!verify_scheme(ins, scheme)) throw std::logic_error("extracted scheme fails verification");
  return {true, std::move(scheme)};
}

inline std::pair<bool, std::optional<EvacScheme>> evac_exists(const SubgraphSnapshot& s, int C) {
  return evac_exists(EvacInstance::from_snapshot(s), C);
}

inline nlohmann::json scheme_to_json(const SubgraphSnapshot& s, const EvacScheme& scheme) {
  EvacInstance ins = EvacInstance::from_snapshot(s);
  // recover the edge labels in the order from_snapshot assigns ids
  std::vector<std::string> edgeKey;
  for (int v = 0; v < ins.n; ++v)
    for (std::size_t l = 0; l < s.label_count(); ++l)
      if (s.target(v, l) >= 0)
        edgeKey.push_back(s.vertex_keys()[static_cast<std::size_t>(v)] + "|" + s.label_name(l));

  nlohmann::json paths = nlohmann::json::array();
  std::map<std::string, int> edgeUse;
  for (std::size_t v = 0; v < scheme.paths.size(); ++v) {
    nlohmann::json path = nlohmann::json::array();
    for (int e : scheme.paths[v]) {
      path.push_back({{"from", s.vertex_keys()[static_cast<std::size_t>(ins.edges[static_cast<std::size_t>(e)].first)]},
                      {"to", s.vertex_keys()[static_cast<std::size_t>(ins.edges[static_cast<std::size_t>(e)].second)]}});
      edgeUse[edgeKey[static_cast<std::size_t>(e)]] += 1;
    }
    paths.push_back({{"vertex", s.vertex_keys()[v]}, {"path", std::move(path)}});
  }
  return {{"capacity", scheme.capacity},
          {"feasible", true},
          {"paths", std::move(paths)},
          {"edgeUse", edgeUse}};
}

enum class FlowScope { All, Interior };

// Flow check on a snapshot: antisymmetry, |f| <= C, and inflow >= eps on the
// chosen vertices.  The flow is keyed on directed edges as
// "vertexKey|label"; it must be defined on all of them.
inline bool verify_flow(const SubgraphSnapshot& s,
                        const std::map<std::string, Rational>& f, const Rational& C,
                        const Rational& eps, FlowScope scope,
                        const std::set<std::string>* explicitScope = nullptr) {
  auto edge_key = [&](int v, std::size_t l) {
    return s.vertex_keys()[static_cast<std::size_t>(v)] + "|" + s.label_name(l);
  };
  std::vector<Rational> inflow(s.size(), Rational(0));
  for (std::size_t v = 0; v < s.size(); ++v) {
    for (std::size_t l = 0; l < s.label_count(); ++l) {
      int t = s.target(static_cast<int>(v), l);
      if (t < 0) continue;
      auto it = f.find(edge_key(static_cast<int>(v), l));
      if (it == f.end()) return false;
      const Rational& val = it->second;
      if (val > C || -val > C) return false;
      auto inv = f.find(edge_key(t, SubgraphSnapshot::inverse_label(l)));
      if (inv == f.end() || inv->second != -val) return false;  // antisymmetry
      inflow[static_cast<std::size_t>(t)] += val;
    }
  }
  for (std::size_t v = 0; v < s.size(); ++v) {
    const std::string& key = s.vertex_keys()[v];
    bool inScope = explicitScope
                       ? explicitScope->count(key) > 0
                       : (scope == FlowScope::All || !s.is_boundary(static_cast<int>(v)));
    if (inScope && inflow[v] < eps) return false;
  }
  return true;
}

}  // namespace thompson
