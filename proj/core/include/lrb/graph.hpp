#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lrb {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : labels(n), adj_(n, std::vector<char>(n, 0)) {
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  }

  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u][v] != 0; }
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v
  std::size_t edge_count() const;

  // Component id per vertex, numbered in order of first vertex.
  std::vector<int> components(int* count = nullptr) const;
  bool is_connected() const;

  Graph complement() const;
  Graph induced(const std::vector<int>& vs) const;
  // Disjoint union with every edge between the two sides.
  static Graph join(const Graph& a, const Graph& b);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph path(int n);

  // BFS distances from v; -1 when unreachable.
  std::vector<int> distances(int v) const;

  std::vector<std::string> labels;

 private:
  std::vector<std::vector<char>> adj_;
};

}  // namespace lrb
