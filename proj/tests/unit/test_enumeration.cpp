#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/enumeration.hpp"
#include "lrb/error.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

Lrb hexagon() {
  Arrangement a;
  a.dim = 2;
  for (const auto& f : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}}) {
    a.forms.push_back({Rational(f[0]), Rational(f[1])});
    a.constants.push_back(Rational(0));
  }
  return face_monoid_central(a).lrb;
}

Graph cube_graph(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v) {
    for (int b = 0; b < d; ++b) {
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    }
  }
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Product of paths on a x b vertices.
Graph grid(int a, int b) {
  Graph g(a * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) g.add_edge(i * b + j, (i + 1) * b + j);
      if (j + 1 < b) g.add_edge(i * b + j, i * b + j + 1);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("cell counts of the hexagon", "[enumeration]") {
  const Lrb hex = hexagon();
  const CellCountReport r = cell_counts_vs_mobius(hex);
  CHECK(r.match());
  const int bot = *hex.lambda().minimum();
  CHECK(r.direct[bot] == 6);
  CHECK(r.mobius_side[bot] == 6);
  CHECK(r.f == std::vector<std::int64_t>{6, 6, 1});
  CHECK(r.minimal_ideal == 6);
  CHECK(r.euler == 1);
}

TEST_CASE("cell counts of ladders and cubes", "[enumeration]") {
  for (int n = 1; n <= 5; ++n) {
    const Lrb l = ladder(n);
    const CellCountReport r = cell_counts_vs_mobius(l);
    CHECK(r.match());
    const int top = *l.lambda().maximum();
    for (int x = 0; x < l.num_supports(); ++x) CHECK(r.direct[x] == (x == top ? 1 : 2));
  }
  const Lrb q3 = cat0_from_median_graph(cube_graph(3)).lrb;
  const CellCountReport c = cell_counts_vs_mobius(q3);
  CHECK(c.match());
  CHECK(c.minimal_ideal == 8);
  CHECK(c.f == std::vector<std::int64_t>{8, 12, 6, 1});

  CHECK(cell_counts_vs_mobius(face_monoid_central(boolean_arrangement(3)).lrb).match());
  CHECK(cell_counts_vs_mobius(braid_face_monoid(4)).match());
}

TEST_CASE("cell counts need a connected CW band", "[enumeration]") {
  auto kind = [](const Lrb& b) {
    try {
      cell_counts_vs_mobius(b);
    } catch (const PreconditionError& e) {
      return e.kind();
    }
    return std::string();
  };
  CHECK(kind(free_lrb({"a", "b", "c"})) == "NotCwLrb");
  CHECK(kind(left_zero(2)) == "NotCwLrb");
  CHECK_THROWS_AS(flag_vector_vs_mobius(left_zero(2)), PreconditionError);
}

TEST_CASE("flag vectors", "[enumeration]") {
  const Lrb hex = hexagon();
  const FlagReport h = flag_vector_vs_mobius(hex);
  CHECK(h.match());
  CHECK(h.direct.at({0, 1}) == 12);
  CHECK(h.direct.at({0}) == cell_counts_vs_mobius(hex).f[0]);

  const Lrb q3 = cat0_from_median_graph(cube_graph(3)).lrb;
  const FlagReport q = flag_vector_vs_mobius(q3);
  CHECK(q.match());
  CHECK(q.direct.at({0, 3}) == 8);

  for (const Lrb& b : {hex, q3, ladder(4), face_monoid_central(boolean_arrangement(3)).lrb}) {
    const FlagReport r = flag_vector_vs_mobius(b);
    CHECK(r.match());
    CHECK(r.direct == oracle::flag_counts(oracle::natural_order(oracle::table_of(b))));
  }
}

TEST_CASE("CAT(0) f-vector identity", "[enumeration]") {
  const Cat0FReport q3 = cat0_f_identity(cat0_from_median_graph(cube_graph(3)).complex);
  CHECK(q3.f == std::vector<std::int64_t>{8, 12, 6, 1});
  CHECK(q3.clique_f == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(q3.match());

  const Cat0FReport p3 = cat0_f_identity(cat0_from_median_graph(Graph::path(3)).complex);
  CHECK(p3.formula == std::vector<std::int64_t>{3, 2});
  CHECK(p3.match());

  const Cat0FReport t3 = cat0_f_identity(cat0_from_median_graph(star(3)).complex);
  CHECK(t3.formula == std::vector<std::int64_t>{4, 3});
  CHECK(t3.match());

  const Cat0FReport g = cat0_f_identity(cat0_from_median_graph(grid(2, 3)).complex);
  CHECK(g.f == std::vector<std::int64_t>{6, 7, 2});
  CHECK(g.match());
}

TEST_CASE("trees have one more vertex than edge", "[enumeration]") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Graph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(static_cast<int>(rng() % v), v);
    const Cat0FReport r = cat0_f_identity(cat0_from_median_graph(t).complex);
    REQUIRE(r.f.size() == 2);
    CHECK(r.f[0] == r.f[1] + 1);
    CHECK(r.match());
  }
}
