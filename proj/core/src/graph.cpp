#include "lrb/graph.hpp"

#include <deque>

#include "lrb/error.hpp"

namespace lrb {

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error("NotSimple", "loop at " + std::to_string(u));
  adj_[u][v] = adj_[v][u] = 1;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    if (adj_[v][u]) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (adj_[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

std::vector<int> Graph::components(int* count) const {
  std::vector<int> comp(size(), -1);
  int c = 0;
  for (int s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < size(); ++u) {
        if (adj_[v][u] && comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool Graph::is_connected() const {
  int c = 0;
  components(&c);
  return c <= 1;
}

Graph Graph::complement() const {
  Graph g(size());
  g.labels = labels;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (!adj_[u][v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  Graph g(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    g.labels[i] = labels[vs[i]];
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adj_[vs[i]][vs[j]]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

Graph Graph::join(const Graph& a, const Graph& b) {
  const int na = a.size();
  Graph g(na + b.size());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u) {
    for (int v = 0; v < b.size(); ++v) g.add_edge(u, na + v);
  }
  for (int u = 0; u < na; ++u) g.labels[u] = a.labels[u];
  for (int v = 0; v < b.size(); ++v) g.labels[na + v] = b.labels[v];
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::vector<int> Graph::distances(int v) const {
  std::vector<int> d(size(), -1);
  std::deque<int> q{v};
  d[v] = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (int y = 0; y < size(); ++y) {
      if (adj_[x][y] && d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

}  // namespace lrb
