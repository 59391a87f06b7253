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
#include "thompson/forest.hpp"
#include "thompson/numeric.hpp"
#include "thompson/polynomial.hpp"

namespace thompson {

enum class GenSet { Std, Sym, SymX0, StdX2 };

inline std::string genset_name(GenSet g) {
  switch (g) {
    case GenSet::Std: return "x0,x1";
    case GenSet::Sym: return "x1,xb1";
    case GenSet::SymX0: return "x0,x1,xb1";
    case GenSet::StdX2: return "x0,x1,x2";
  }
  throw std::logic_error("bad genset");
}

inline std::optional<GenSet> genset_from_name(const std::string& s) {
  if (s == "x0,x1") return GenSet::Std;
  if (s == "x1,xb1") return GenSet::Sym;
  if (s == "x0,x1,xb1") return GenSet::SymX0;
  if (s == "x0,x1,x2") return GenSet::StdX2;
  return std::nullopt;
}

inline std::vector<GenLabel> genset_generators(GenSet g) {
  switch (g) {
    case GenSet::Std: return {GenLabel::x0, GenLabel::x1};
    case GenSet::Sym: return {GenLabel::x1, GenLabel::xbar1};
    case GenSet::SymX0: return {GenLabel::x0, GenLabel::x1, GenLabel::xbar1};
    case GenSet::StdX2: return {GenLabel::x0, GenLabel::x1, GenLabel::x2};
  }
  throw std::logic_error("bad genset");
}

struct BBParams {
  int n = 1;      // leaves
  int k = 0;      // height cap
  GenSet genset = GenSet::Std;
};

struct CapExceeded : std::runtime_error {
  BigInt count;
  explicit CapExceeded(BigInt c)
      : std::runtime_error("enumeration would produce " + c.str() +
                           " vertices; raise the cap or use the dp mode"),
        count(std::move(c)) {}
};

namespace bbdp {

using Vec = std::vector<BigInt>;  // coefficients 0..n

inline Vec conv(const Vec& a, const Vec& b, int n) {
  Vec c(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      c[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return c;
}

// Tree counts by leaf number, height <= k, as a vector of length n+1.
inline Vec tree_vec(int n, int k) {
  Vec v(static_cast<std::size_t>(n) + 1, BigInt(0));
  if (k < 0) return v;  // no trees at negative height caps
  if (n >= 1) v[1] = 1;
  Vec prev = v;
  for (int h = 1; h <= std::min(k, n - 1); ++h) {
    Vec sq = conv(prev, prev, n);
    Vec cur(static_cast<std::size_t>(n) + 1, BigInt(0));
    if (n >= 1) cur[1] = 1;
    for (int i = 2; i <= n; ++i) cur[static_cast<std::size_t>(i)] = sq[static_cast<std::size_t>(i)];
    prev = std::move(cur);
  }
  return prev;
}

// E = 1/(1 - phi): forests with any number of trees (including none).
inline Vec forest_vec(const Vec& phi, int n) {
  Vec e(static_cast<std::size_t>(n) + 1, BigInt(0));
  e[0] = 1;
  for (int j = 1; j <= n; ++j) {
    BigInt s = 0;
    for (int b = 1; b <= j; ++b)
      s += phi[static_cast<std::size_t>(b)] * e[static_cast<std::size_t>(j - b)];
    e[static_cast<std::size_t>(j)] = s;
  }
  return e;
}

inline BigInt coefficient(const Vec& v, int n) { return v[static_cast<std::size_t>(n)]; }

// [x^n] E * f1 * ... * fm * E
inline BigInt window_count(const Vec& e, const std::vector<Vec>& factors, int n) {
  Vec acc = e;
  for (const auto& f : factors) acc = conv(acc, f, n);
  acc = conv(acc, e, n);
  return coefficient(acc, n);
}

struct Tables {
  int n, k;
  Vec phi;      // trees of height <= k
  Vec phiDown;  // trees of height <= k-1
  Vec high;     // trees of height exactly k
  Vec nontriv;  // nontrivial trees of height <= k
  Vec triv;     // the single-leaf tree
  Vec e;        // forests (possibly empty)
};

inline Tables make_tables(int n, int k) {
  Tables t;
  t.n = n;
  t.k = k;
  t.phi = tree_vec(n, k);
  t.phiDown = tree_vec(n, k - 1);
  t.high = t.phi;
  for (int i = 0; i <= n; ++i)
    t.high[static_cast<std::size_t>(i)] -= t.phiDown[static_cast<std::size_t>(i)];
  t.nontriv = t.phi;
  if (n >= 1) t.nontriv[1] -= 1;
  t.triv.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  if (n >= 1) t.triv[1] = 1;
  t.e = forest_vec(t.phi, n);
  return t;
}

inline nlohmann::json tables_to_json(const Tables& t) {
  auto pack = [](const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
  };
  return {{"schema", "bbtables/1"}, {"n", t.n},          {"k", t.k},
          {"phi", pack(t.phi)},     {"phiDown", pack(t.phiDown)}, {"e", pack(t.e)}};
}

inline Tables tables_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != "bbtables/1")
    throw std::invalid_argument("unknown checkpoint schema");
  Tables t;
  t.n = j.at("n").get<int>();
  t.k = j.at("k").get<int>();
  auto unpack = [&](const char* key) {
    Vec v;
    for (const auto& s : j.at(key)) v.emplace_back(s.get<std::string>());
    if (v.size() != static_cast<std::size_t>(t.n) + 1)
      throw std::invalid_argument("checkpoint vector length mismatch");
    return v;
  };
  t.phi = unpack("phi");
  t.phiDown = unpack("phiDown");
  t.e = unpack("e");
  t.high = t.phi;
  for (int i = 0; i <= t.n; ++i)
    t.high[static_cast<std::size_t>(i)] -= t.phiDown[static_cast<std::size_t>(i)];
  t.nontriv = t.phi;
  if (t.n >= 1) t.nontriv[1] -= 1;
  t.triv.assign(static_cast<std::size_t>(t.n) + 1, BigInt(0));
  if (t.n >= 1) t.triv[1] = 1;
  return t;
}

// Number of BB(n,k) vertices accepting the given label, by counting the
// local acceptance pattern around the marked tree:
//   x0      - some tree left of the mark
//   x0^-1   - some tree right of the mark
//   x1,xb1  - marked tree nontrivial
//   x1^-1   - right neighbour exists, both trees of height < k
//   xb1^-1  - left neighbour exists, both trees of height < k
//   x2      - right neighbour exists and is nontrivial
//   x2^-1   - two right neighbours of height < k
inline BigInt accept_count(const Tables& t, GenLabel l) {
  const int n = t.n;
  switch (l) {
    case GenLabel::x0: {
      Vec leftNonempty = t.e;
      leftNonempty[0] -= 1;
      Vec acc = conv(leftNonempty, t.phi, n);
      acc = conv(acc, t.e, n);
      return coefficient(acc, n);
    }
    case GenLabel::x0inv: {
      Vec rightNonempty = t.e;
      rightNonempty[0] -= 1;
      Vec acc = conv(t.e, t.phi, n);
      acc = conv(acc, rightNonempty, n);
      return coefficient(acc, n);
    }
    case GenLabel::x1:
    case GenLabel::xbar1:
      return window_count(t.e, {t.nontriv}, n);
    case GenLabel::x1inv:
      return window_count(t.e, {t.phiDown, t.phiDown}, n);
    case GenLabel::xbar1inv:
      return window_count(t.e, {t.phiDown, t.phiDown}, n);
    case GenLabel::x2:
      return window_count(t.e, {t.phi, t.nontriv}, n);
    case GenLabel::x2inv:
      return window_count(t.e, {t.phi, t.phiDown, t.phiDown}, n);
  }
  throw std::logic_error("bad label");
}

}  // namespace bbdp

inline BigInt bb_vertex_count_dp(int n, int k) {
  auto t = bbdp::make_tables(n, k);
  return bbdp::window_count(t.e, {t.phi}, n);
}

// Exact density of BB(n,k) for the given generating set, computed from
// generating-polynomial convolutions without materializing the vertex set.
inline Rational bb_density_dp_on(const bbdp::Tables& t, GenSet genset) {
  BigInt vertices = bbdp::window_count(t.e, {t.phi}, t.n);
  if (vertices == 0) throw std::invalid_argument("BB set is empty for these parameters");
  BigInt edges = 0;
  for (GenLabel g : genset_generators(genset)) {
    edges += bbdp::accept_count(t, g);
    edges += bbdp::accept_count(t, inverse(g));
  }
  return Rational(edges, vertices);
}

inline Rational bb_density_dp(const BBParams& p) {
  return bb_density_dp_on(bbdp::make_tables(p.n, p.k), p.genset);
}

inline std::vector<MarkedForest> bb_vertices(const BBParams& p, BigInt cap = BigInt(10'000'000),
                                             bool overrideCap = false) {
  BigInt count = bb_vertex_count_dp(p.n, p.k);
  if (!overrideCap && count > cap) throw CapExceeded(count);
  return enumerate_marked_forests(p.n, p.k);
}

// The automaton induced on an arbitrary set of marked forests: edges are the
// partial actions with the height cap, so acceptance of a label at a vertex
// is definedness of the action with a result inside the set.
inline SubgraphSnapshot bb_graph_on(const BBParams& p, const std::vector<MarkedForest>& verts) {
  std::vector<std::string> keys;
  keys.reserve(verts.size());
  std::map<std::string, int> index;
  for (const auto& f : verts) {
    index.emplace(f.str(), static_cast<int>(keys.size()));
    keys.push_back(f.str());
  }
  auto gens = genset_generators(p.genset);
  std::vector<std::string> genNames;
  for (auto g : gens) genNames.push_back(label_name(g));
  std::vector<std::vector<int>> adj(keys.size(), std::vector<int>(2 * gens.size(), -1));
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        GenLabel l = dir ? inverse(gens[i]) : gens[i];
        if (auto img = apply_generator(verts[v], l, p.k)) {
          auto it = index.find(img->str());
          if (it != index.end()) adj[v][2 * i + static_cast<std::size_t>(dir)] = it->second;
        }
      }
    }
  }
  return SubgraphSnapshot(std::move(keys), std::move(genNames), std::move(adj), std::nullopt);
}

// The full BB(n,k) automaton as a snapshot.
inline SubgraphSnapshot bb_graph(const BBParams& p, BigInt cap = BigInt(10'000'000),
                                 bool overrideCap = false) {
  auto verts = bb_vertices(p, cap, overrideCap);
  return bb_graph_on(p, verts);
}

// A special forest: T0 marked and trivial, T1 and T3 of height exactly k,
// T2 trivial, T4 nontrivial.
struct SpecialForestWitness {
  MarkedForest forest;
  std::size_t t0 = 0;  // == forest.mark
  bool leftEnd = false;  // T0 is the leftmost tree (end effects possible)
};

inline bool is_special_vertex(const MarkedForest& f, int k) {
  std::size_t p = f.mark;
  if (p + 4 >= f.trees.size()) return false;
  return f.trees[p].is_leaf() && f.trees[p + 1].height() == k && f.trees[p + 2].is_leaf() &&
         f.trees[p + 3].height() == k && !f.trees[p + 4].is_leaf();
}

struct SpecialScan {
  BigInt count = 0;  // exact, by DP
  std::vector<SpecialForestWitness> witnesses;
};

// Exact count of special vertices by DP, plus enumerated witnesses when the
// vertex set fits under the cap.
inline SpecialScan find_special(const BBParams& p, BigInt cap = BigInt(10'000'000)) {
  if (p.k < 1) throw std::invalid_argument("special forests need k >= 1");
  SpecialScan out;
  auto t = bbdp::make_tables(p.n, p.k);
  out.count = bbdp::window_count(t.e, {t.triv, t.high, t.triv, t.high, t.nontriv}, p.n);
  if (bb_vertex_count_dp(p.n, p.k) <= cap) {
    for (const auto& f : enumerate_marked_forests(p.n, p.k)) {
      if (is_special_vertex(f, p.k))
        out.witnesses.push_back({f, f.mark, f.mark == 0});
    }
    if (BigInt(out.witnesses.size()) != out.count)
      throw std::logic_error("special-forest DP and enumeration disagree");
  }
  return out;
}

enum class PruneMode { Isolated, SpecialABC };

struct PruneResult {
  Rational before, after;
  std::size_t removedVertices = 0;
  std::size_t removedDirectedEdges = 0;
  // per-triple incident directed edge counts (SpecialABC mode)
  std::vector<std::size_t> perTripleRemoved;
};

// Removes low-density fragments and reports both exact densities.
//   Isolated  (genset {x1,xb1}):    vertices of degree zero
//   SpecialABC ({x0,x1} / {x0,x1,x2}): the a,b,c vertices of every special forest
inline PruneResult prune(const BBParams& p, PruneMode mode, BigInt cap = BigInt(10'000'000)) {
  if (mode == PruneMode::Isolated && p.genset != GenSet::Sym)
    throw std::invalid_argument("isolated pruning expects the symmetric genset");
  if (mode == PruneMode::SpecialABC && p.genset != GenSet::Std && p.genset != GenSet::StdX2)
    throw std::invalid_argument("special-abc pruning expects x0,x1 or x0,x1,x2");

  auto verts = bb_vertices(p, cap);
  SubgraphSnapshot full = bb_graph_on(p, verts);
  PruneResult res;
  res.before = full.density();

  std::set<std::string> removed;
  if (mode == PruneMode::Isolated) {
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (full.degree(static_cast<int>(v)) == 0) removed.insert(verts[v].str());
  } else {
    for (const auto& f : verts) {
      if (!is_special_vertex(f, p.k)) continue;
      std::vector<std::string> triple;
      for (std::size_t d = 0; d < 3; ++d)
        triple.push_back(MarkedForest(f.trees, f.mark + d).str());
      // incident directed edges of the triple in the full graph
      std::set<std::string> tset(triple.begin(), triple.end());
      std::size_t intra = 0, outgoing = 0;
      for (const auto& key : triple) {
        int v = full.vertex_index(key);
        for (std::size_t l = 0; l < full.label_count(); ++l) {
          int tgt = full.target(v, l);
          if (tgt < 0) continue;
          if (tset.count(full.vertex_keys()[static_cast<std::size_t>(tgt)]))
            ++intra;
          else
            ++outgoing;
        }
      }
      res.perTripleRemoved.push_back(intra + 2 * outgoing);
      removed.insert(triple.begin(), triple.end());
    }
  }

  res.removedVertices = removed.size();
  if (removed.size() == verts.size())
    throw std::invalid_argument("pruning would empty the vertex set");

  std::vector<MarkedForest> kept;
  for (const auto& f : verts)
    if (!removed.count(f.str())) kept.push_back(f);
  SubgraphSnapshot pruned = bb_graph_on(p, kept);
  res.after = pruned.density();
  res.removedDirectedEdges = full.internal_directed_edges() - pruned.internal_directed_edges();
  return res;
}

}  // namespace thompson
