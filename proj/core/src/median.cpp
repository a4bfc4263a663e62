#include "lrb/median.hpp"

#include <numeric>
#include <set>

#include "lrb/error.hpp"

namespace lrb {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::int64_t> MedianComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& c : cubes) {
    if (c.empty()) break;
    f.push_back(static_cast<std::int64_t>(c.size()));
  }
  return f;
}

Graph MedianComplex::crossing_graph() const {
  Graph g(num_classes);
  if (cubes.size() > 2) {
    for (const auto& sq : cubes[2]) {
      const auto z = zero_set(sq);
      if (!g.adjacent(z[0], z[1])) g.add_edge(z[0], z[1]);
    }
  }
  return g;
}

std::vector<int> MedianComplex::cube_vertices(const Covector& x) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertex_covector.size(); ++v) {
    bool ok = true;
    for (std::size_t c = 0; c < x.size() && ok; ++c) {
      if (x[c] != Sign::Zero && vertex_covector[v][c] != x[c]) ok = false;
    }
    if (ok) out.push_back(static_cast<int>(v));
  }
  return out;
}

Cat0Result cat0_from_median_graph(const Graph& g) {
  const int n = g.size();
  if (n == 0) throw Error("NotConnected", "empty graph");
  if (n > kMaxMedianVertices) throw Error("TooLarge", std::to_string(n) + " vertices");
  if (!g.is_connected()) throw PreconditionError("NotConnected", "median graphs are connected");

  std::vector<std::vector<int>> d(n);
  for (int v = 0; v < n; ++v) d[v] = g.distances(v);

  // Every triple has exactly one median.
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      for (int w = v; w < n; ++w) {
        int count = 0;
        for (int m = 0; m < n; ++m) {
          if (d[u][m] + d[m][v] == d[u][v] && d[v][m] + d[m][w] == d[v][w] &&
              d[u][m] + d[m][w] == d[u][w]) {
            ++count;
          }
        }
        if (count != 1) {
          throw Error("NotMedian", "(" + g.labels[u] + "," + g.labels[v] + "," + g.labels[w] +
                                       ") has " + std::to_string(count) + " medians");
        }
      }
    }
  }

  MedianComplex mc;
  mc.graph = g;
  mc.edges = g.edges();
  const int ne = static_cast<int>(mc.edges.size());
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  for (int e = 0; e < ne; ++e) {
    edge_id[mc.edges[e].first][mc.edges[e].second] = e;
    edge_id[mc.edges[e].second][mc.edges[e].first] = e;
  }

  // Opposite sides of every square u-v-w-x.
  UnionFind uf(ne);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (d[u][w] != 2) continue;
      std::vector<int> common;
      for (int v : g.neighbors(u)) {
        if (g.adjacent(v, w)) common.push_back(v);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const int v = common[i];
          const int x = common[j];
          uf.unite(edge_id[u][v], edge_id[x][w]);
          uf.unite(edge_id[u][x], edge_id[v][w]);
        }
      }
    }
  }
  std::vector<int> cls(ne, -1);
  std::vector<int> root_class(ne, -1);
  for (int e = 0; e < ne; ++e) {
    const int r = uf.find(e);
    if (root_class[r] < 0) root_class[r] = mc.num_classes++;
    cls[e] = root_class[r];
  }
  mc.edge_class = cls;

  // Djokovic-Winkler: ab ~ xy iff d(a,x) + d(b,y) != d(a,y) + d(b,x).
  mc.theta_consistent = true;
  for (int e = 0; e < ne && mc.theta_consistent; ++e) {
    for (int f = 0; f < ne; ++f) {
      const auto [a, b] = mc.edges[e];
      const auto [x, y] = mc.edges[f];
      const bool dw = d[a][x] + d[b][y] != d[a][y] + d[b][x];
      if (dw != (cls[e] == cls[f])) {
        mc.theta_consistent = false;
        break;
      }
    }
  }

  mc.halfspace.assign(mc.num_classes, std::vector<Sign>(n, Sign::Zero));
  for (int c = 0; c < mc.num_classes; ++c) {
    int rep = 0;
    while (cls[rep] != c) ++rep;
    const auto [a, b] = mc.edges[rep];
    for (int v = 0; v < n; ++v) {
      const bool near_a = d[v][a] < d[v][b];
      const bool near_a0 = d[0][a] < d[0][b];
      mc.halfspace[c][v] = near_a == near_a0 ? Sign::Plus : Sign::Minus;
    }
    // Removing the class must leave exactly two components.
    Graph cut(n);
    for (int e = 0; e < ne; ++e) {
      if (cls[e] != c) cut.add_edge(mc.edges[e].first, mc.edges[e].second);
    }
    int comps = 0;
    cut.components(&comps);
    if (comps != 2) {
      throw Error("NotMedian", "hyperplane " + std::to_string(c) + " leaves " +
                                   std::to_string(comps) + " components");
    }
  }
  mc.vertex_covector.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < mc.num_classes; ++c) mc.vertex_covector[v].push_back(mc.halfspace[c][v]);
  }
  const std::set<Covector> verts(mc.vertex_covector.begin(), mc.vertex_covector.end());
  if (static_cast<int>(verts.size()) != n) throw Error("NotMedian", "halfspaces do not separate");

  // Grow cubes one hyperplane at a time.
  auto is_cube = [&](const Covector& x) {
    const auto z = zero_set(x);
    for (std::uint32_t mask = 0; mask < (1u << z.size()); ++mask) {
      Covector y = x;
      for (std::size_t i = 0; i < z.size(); ++i) {
        y[z[i]] = (mask >> i) & 1u ? Sign::Minus : Sign::Plus;
      }
      if (!verts.count(y)) return false;
    }
    return true;
  };
  mc.cubes.push_back(std::vector<Covector>(verts.begin(), verts.end()));
  for (int k = 1; k <= kMaxCubeDim; ++k) {
    std::set<Covector> next;
    for (const auto& x : mc.cubes[k - 1]) {
      for (int c = 0; c < mc.num_classes; ++c) {
        if (x[c] == Sign::Zero) continue;
        Covector y = x;
        y[c] = Sign::Zero;
        if (!next.count(y) && is_cube(y)) next.insert(y);
      }
    }
    if (next.empty()) break;
    mc.cubes.push_back(std::vector<Covector>(next.begin(), next.end()));
  }

  std::vector<Covector> all;
  for (const auto& level : mc.cubes) all.insert(all.end(), level.begin(), level.end());
  std::vector<std::string> ground;
  for (int c = 0; c < mc.num_classes; ++c) ground.push_back("h" + std::to_string(c + 1));
  CovectorSet cs = CovectorSet::make(std::move(ground), std::move(all));
  Lrb b = covector_lrb(cs);
  return {std::move(mc), std::move(cs), std::move(b)};
}

}  // namespace lrb
