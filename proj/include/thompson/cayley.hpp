#pragma once

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/normal_form.hpp"
#include "thompson/numeric.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// Finite generating multiset; repeats are allowed and each repeat
// contributes its own edges.
struct GeneratingSet {
  enum class Side { Right, Left };
  Side side = Side::Right;
  std::vector<GroupWord> gens;

  std::size_t m() const { return gens.size(); }

  static GeneratingSet right(std::vector<GroupWord> g) { return {Side::Right, std::move(g)}; }
  static GeneratingSet left(std::vector<GroupWord> g) { return {Side::Left, std::move(g)}; }
};

// A finite subgraph of a Cayley graph (or of an abstract automaton with the
// same local structure): vertex keys, one slot per vertex and directed label,
// and the exact boundary/density statistics.
//
// Directed labels are indexed 0..2m-1: label 2i is generator i, label 2i+1
// its inverse.  adjacency[v][l] is the target vertex index or -1 when the
// edge leaves the subgraph.
class SubgraphSnapshot {
 public:
  SubgraphSnapshot(std::vector<std::string> keys, std::vector<std::string> genNames,
                   std::vector<std::vector<int>> adjacency,
                   std::optional<std::size_t> outerBoundary)
      : keys_(std::move(keys)),
        genNames_(std::move(genNames)),
        adj_(std::move(adjacency)),
        outer_(outerBoundary) {
    if (keys_.empty()) throw std::invalid_argument("snapshot needs a non-empty vertex set");
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], static_cast<int>(i));
    if (index_.size() != keys_.size()) throw std::invalid_argument("duplicate vertex keys");
    compute_stats();
  }

  std::size_t size() const { return keys_.size(); }
  std::size_t m() const { return genNames_.size(); }
  std::size_t label_count() const { return 2 * m(); }
  const std::vector<std::string>& vertex_keys() const { return keys_; }
  const std::vector<std::string>& generator_names() const { return genNames_; }

  std::string label_name(std::size_t l) const {
    std::string base = genNames_[l / 2];
    return l % 2 ? base + "^-1" : base;
  }
  static std::size_t inverse_label(std::size_t l) { return l ^ 1; }

  int target(int v, std::size_t l) const { return adj_[static_cast<std::size_t>(v)][l]; }
  int vertex_index(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }

  std::size_t degree(int v) const {
    std::size_t d = 0;
    for (std::size_t l = 0; l < label_count(); ++l)
      if (target(v, l) >= 0) ++d;
    return d;
  }

  bool is_boundary(int v) const { return degree(v) < label_count(); }

  // exact statistics
  std::size_t internal_directed_edges() const { return internalDirected_; }
  std::size_t inner_boundary_size() const { return innerBoundary_; }
  std::size_t cheeger_boundary_size() const { return cheeger_; }
  std::optional<std::size_t> outer_boundary_size() const { return outer_; }
  Rational density() const {
    return Rational(BigInt(internalDirected_), BigInt(size()));
  }
  Rational iota() const { return Rational(BigInt(cheeger_), BigInt(size())); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = "snapshot/1";
    j["generators"] = genNames_;
    j["vertices"] = keys_;
    auto edges = nlohmann::json::array();
    for (std::size_t v = 0; v < keys_.size(); ++v)
      for (std::size_t l = 0; l < label_count(); ++l)
        if (adj_[v][l] >= 0)
          edges.push_back({v, l, adj_[v][l]});
    j["edges"] = std::move(edges);
    j["stats"] = {{"size", size()},
                  {"internalDirectedEdges", internalDirected_},
                  {"innerBoundary", innerBoundary_},
                  {"cheegerBoundary", cheeger_},
                  {"density", thompson::to_string(density())},
                  {"iota", thompson::to_string(iota())},
                  {"exact", true}};
    if (outer_) j["stats"]["outerBoundary"] = *outer_;
    return j;
  }

  static SubgraphSnapshot from_json(const nlohmann::json& j) {
    std::vector<std::string> keys = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<std::vector<int>> adj(keys.size(), std::vector<int>(2 * gens.size(), -1));
    for (const auto& e : j.at("edges")) {
      std::size_t v = e.at(0).get<std::size_t>();
      std::size_t l = e.at(1).get<std::size_t>();
      int t = e.at(2).get<int>();
      if (v >= keys.size() || l >= 2 * gens.size() || t < 0 ||
          t >= static_cast<int>(keys.size()))
        throw std::invalid_argument("snapshot edge out of range");
      adj[v][l] = t;
    }
    std::optional<std::size_t> outer;
    if (j.contains("stats") && j.at("stats").contains("outerBoundary"))
      outer = j.at("stats").at("outerBoundary").get<std::size_t>();
    SubgraphSnapshot s(std::move(keys), std::move(gens), std::move(adj), outer);
    return s;
  }

 private:
  void compute_stats() {
    internalDirected_ = 0;
    innerBoundary_ = 0;
    std::size_t external = 0;
    for (std::size_t v = 0; v < keys_.size(); ++v) {
      if (adj_[v].size() != label_count())
        throw std::invalid_argument("snapshot adjacency has wrong label count");
      std::size_t deg = 0;
      for (std::size_t l = 0; l < label_count(); ++l) {
        int t = adj_[v][l];
        if (t >= 0) {
          ++deg;
          // Serre condition: the inverse directed edge must be present
          if (adj_[static_cast<std::size_t>(t)][inverse_label(l)] != static_cast<int>(v))
            throw std::invalid_argument("snapshot edges are not closed under inversion");
        } else {
          ++external;
        }
      }
      internalDirected_ += deg;
      if (deg < label_count()) ++innerBoundary_;
    }
    cheeger_ = external;

    // delta + iota = 2m, exactly, and the boundary sandwich inequalities.
    // These hold on every snapshot ever built, so violations are internal
    // errors, not test failures.
    if (internalDirected_ + cheeger_ != label_count() * size() ||
        density() + iota() != Rational(BigInt(label_count())))
      throw std::logic_error("snapshot violates delta + iota = 2m");
    if (cheeger_ > 0 || innerBoundary_ > 0) {
      if (!(innerBoundary_ <= cheeger_ && cheeger_ <= label_count() * innerBoundary_))
        throw std::logic_error("snapshot violates the inner boundary sandwich");
    }
    if (outer_ && (cheeger_ > 0 || *outer_ > 0)) {
      if (!(*outer_ <= cheeger_ && cheeger_ <= label_count() * *outer_))
        throw std::logic_error("snapshot violates the outer boundary sandwich");
    }
  }

  std::vector<std::string> keys_;
  std::vector<std::string> genNames_;
  std::vector<std::vector<int>> adj_;
  std::map<std::string, int> index_;
  std::size_t internalDirected_ = 0, innerBoundary_ = 0, cheeger_ = 0;
  std::optional<std::size_t> outer_;
};

namespace detail {

// One Cayley step from v: label 2i multiplies by generator i, label 2i+1 by
// its inverse; right graphs multiply on the right, left graphs cancel on
// the left.
inline NormalForm cayley_step(const NormalForm& v, const GeneratingSet& A, std::size_t label,
                              const std::vector<NormalForm>& genElems) {
  const NormalForm& g = genElems[label / 2];
  NormalForm h = label % 2 ? invert(g) : g;
  if (A.side == GeneratingSet::Side::Right) return multiply(v, h);
  return multiply(invert(h), v);
}

inline std::vector<NormalForm> generator_elements(const GeneratingSet& A) {
  if (A.gens.empty()) throw std::invalid_argument("generating set must be non-empty");
  std::vector<NormalForm> out;
  out.reserve(A.gens.size());
  for (const auto& w : A.gens) out.push_back(nf_from_word(w));
  return out;
}

}  // namespace detail

// Snapshot of the full subgraph spanned by Y in the chosen Cayley graph.
inline SubgraphSnapshot build_subgraph(const std::vector<NormalForm>& Y,
                                       const GeneratingSet& A) {
  if (Y.empty()) throw std::invalid_argument("build_subgraph needs non-empty Y");
  auto genElems = detail::generator_elements(A);
  std::map<NormalForm, int> index;
  std::vector<std::string> keys;
  for (const auto& v : Y) {
    if (index.emplace(v, static_cast<int>(keys.size())).second) keys.push_back(v.str());
  }
  std::vector<const NormalForm*> elems(index.size());
  for (const auto& [nf, i] : index) elems[static_cast<std::size_t>(i)] = &nf;

  std::set<NormalForm> outer;
  std::vector<std::vector<int>> adj(keys.size(), std::vector<int>(2 * A.m(), -1));
  for (std::size_t v = 0; v < elems.size(); ++v) {
    for (std::size_t l = 0; l < 2 * A.m(); ++l) {
      NormalForm t = detail::cayley_step(*elems[v], A, l, genElems);
      auto it = index.find(t);
      if (it != index.end())
        adj[v][l] = it->second;
      else
        outer.insert(std::move(t));
    }
  }
  std::vector<std::string> genNames;
  for (const auto& w : A.gens) genNames.push_back(to_string(w));
  return SubgraphSnapshot(std::move(keys), std::move(genNames), std::move(adj), outer.size());
}

inline std::vector<NormalForm> ball(const NormalForm& center, int radius,
                                    const GeneratingSet& A,
                                    std::size_t cap = 10'000'000) {
  auto genElems = detail::generator_elements(A);
  std::set<NormalForm> seen{center};
  std::deque<std::pair<NormalForm, int>> queue{{center, 0}};
  std::vector<NormalForm> out{center};
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (d == radius) continue;
    for (std::size_t l = 0; l < 2 * A.m(); ++l) {
      NormalForm t = detail::cayley_step(v, A, l, genElems);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw std::length_error("ball exceeds vertex cap");
        out.push_back(t);
        queue.emplace_back(std::move(t), d + 1);
      }
    }
  }
  return out;
}

enum class DoublingVariant { Plain, WithInversesAndIdentity };

// Computes |A Y| (left multiplication) under the chosen variant and compares
// with c|Y|.
inline std::pair<bool, std::size_t> doubling_check(const std::vector<NormalForm>& Y,
                                                   const std::vector<GroupWord>& A,
                                                   const Rational& c,
                                                   DoublingVariant variant) {
  if (Y.empty()) throw std::invalid_argument("doubling_check needs non-empty Y");
  std::vector<NormalForm> multipliers;
  for (const auto& w : A) {
    NormalForm g = nf_from_word(w);
    multipliers.push_back(g);
    if (variant == DoublingVariant::WithInversesAndIdentity) multipliers.push_back(invert(g));
  }
  if (variant == DoublingVariant::WithInversesAndIdentity)
    multipliers.push_back(NormalForm::identity());
  std::set<NormalForm> product;
  for (const auto& g : multipliers)
    for (const auto& y : Y) product.insert(multiply(g, y));
  bool small = Rational(BigInt(product.size())) < c * Rational(BigInt(Y.size()));
  return {small, product.size()};
}

}  // namespace thompson
