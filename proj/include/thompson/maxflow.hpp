#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace thompson {

// Dinic max flow on small integral networks.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(static_cast<std::size_t>(n), -1), level_(n), it_(n) {}

  int add_edge(int from, int to, long long cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = id;
    edges_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = id + 1;
    return id;
  }

  long long flow_on(int id) const { return edges_[static_cast<std::size_t>(id ^ 1)].cap; }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      it_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    long long cap;
    int next;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(v)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
        const auto& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] < 0) {
          level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(ed.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t || limit == 0) return limit;
    for (int& e = it_[static_cast<std::size_t>(v)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
      auto& ed = edges_[static_cast<std::size_t>(e)];
      if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] == level_[static_cast<std::size_t>(v)] + 1) {
        long long pushed = dfs(ed.to, t, std::min(limit, ed.cap));
        if (pushed > 0) {
          ed.cap -= pushed;
          edges_[static_cast<std::size_t>(e ^ 1)].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace thompson
