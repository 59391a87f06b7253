#pragma once

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace thompson {

// Finite labelled directed graph with canonical string vertex keys.  Edges
// come in mutually inverse pairs (a Serre graph): adding (v, l, w) also
// records (w, l^-1, v) when addEdgePair is used.
class LabelledGraph {
 public:
  int add_vertex(const std::string& key) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(keys_.size());
    index_.emplace(key, id);
    keys_.push_back(key);
    return id;
  }

  bool has_vertex(const std::string& key) const { return index_.count(key) != 0; }

  void add_edge(const std::string& src, const std::string& label, const std::string& dst) {
    edges_.insert({add_vertex(src), label, add_vertex(dst)});
  }

  std::size_t vertex_count() const { return keys_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertex_keys() const { return keys_; }

  std::set<std::tuple<std::string, std::string, std::string>> edge_triples() const {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& [s, l, d] : edges_) out.insert({keys_[static_cast<std::size_t>(s)], l,
                                                     keys_[static_cast<std::size_t>(d)]});
    return out;
  }

  std::size_t degree(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + key);
    std::size_t d = 0;
    for (const auto& [s, l, t] : edges_)
      if (s == it->second) ++d;
    return d;
  }

  // Keeps only edges whose label (or its inverse form `label^-1`) is listed.
  LabelledGraph filter_labels(const std::set<std::string>& labels) const {
    LabelledGraph g;
    for (const auto& k : keys_) g.add_vertex(k);
    for (const auto& [s, l, d] : edges_) {
      std::string base = l.size() > 3 && l.substr(l.size() - 3) == "^-1" ? l.substr(0, l.size() - 3) : l;
      if (labels.count(base))
        g.add_edge(keys_[static_cast<std::size_t>(s)], l, keys_[static_cast<std::size_t>(d)]);
    }
    return g;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = keys_;
    auto edges = nlohmann::json::array();
    for (const auto& [s, l, d] : edges_)
      edges.push_back({keys_[static_cast<std::size_t>(s)], l, keys_[static_cast<std::size_t>(d)]});
    j["edges"] = std::move(edges);
    return j;
  }

 private:
  std::vector<std::string> keys_;
  std::map<std::string, int> index_;
  std::set<std::tuple<int, std::string, int>> edges_;
};

// Label-preserving isomorphism along an explicit vertex bijection.
inline bool isomorphic_under_map(const LabelledGraph& a, const LabelledGraph& b,
                                 const std::map<std::string, std::string>& vmap) {
  if (a.vertex_count() != b.vertex_count() || vmap.size() != a.vertex_count()) return false;
  std::set<std::string> image;
  for (const auto& k : a.vertex_keys()) {
    auto it = vmap.find(k);
    if (it == vmap.end() || !b.has_vertex(it->second)) return false;
    image.insert(it->second);
  }
  if (image.size() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  auto be = b.edge_triples();
  for (const auto& [s, l, d] : a.edge_triples())
    if (!be.count({vmap.at(s), l, vmap.at(d)})) return false;
  return true;
}

}  // namespace thompson
