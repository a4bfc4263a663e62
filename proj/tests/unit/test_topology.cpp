#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lrb/cellular.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/error.hpp"
#include "lrb/median.hpp"
#include "lrb/simplicial.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

Arrangement plane_lines(std::vector<long> consts) {
  Arrangement a;
  a.dim = 2;
  for (const auto& f : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}}) {
    a.forms.push_back({Rational(f[0]), Rational(f[1])});
  }
  for (long c : consts) a.constants.push_back(Rational(c));
  return a;
}

Lrb hexagon() { return face_monoid_central(plane_lines({0, 0, 0})).lrb; }

Poset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers);
}

// Faces of a simplex on n vertices, ordered by inclusion.
Poset simplex_face_poset(int n) {
  const int m = (1 << n) - 1;
  std::vector<char> leq(static_cast<std::size_t>(m) * m, 0);
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) leq[(a - 1) * m + (b - 1)] = (a & b) == a ? 1 : 0;
  }
  return Poset::from_leq(m, leq);
}

std::vector<int> all_but(const Lrb& b, int skip) {
  std::vector<int> out;
  for (int a = 0; a < b.size(); ++a) {
    if (a != skip) out.push_back(a);
  }
  return out;
}

const Coefficients kQ{Field::Q};

}  // namespace

TEST_CASE("order complexes of small posets", "[topology]") {
  CHECK(order_complex(chain(2)).f_vector() == std::vector<std::int64_t>{2, 1});
  CHECK(order_complex(Poset::from_covers(3, {})).f_vector() == std::vector<std::int64_t>{3});
  const Lrb l = table_L();
  const SimplicialComplex s0 = order_complex(l.order(), {1, 2});
  CHECK(s0.f_vector() == std::vector<std::int64_t>{2});
  const HomologyResult h = reduced_homology(s0, kIntegers);
  CHECK(h.rank(0) == 1);
}

TEST_CASE("reduced homology of standard complexes", "[topology]") {
  const SimplicialComplex tri = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  const HomologyResult h = reduced_homology(tri, kIntegers);
  CHECK(h.rank(0) == 0);
  CHECK(h.rank(1) == 1);
  CHECK_FALSE(h.has_torsion(1));

  const HomologyResult e = reduced_homology(SimplicialComplex(0), kIntegers);
  CHECK(e.rank(-1) == 1);

  // Boundary of the hexagon monoid: its order complex is a circle.
  const Lrb hex = hexagon();
  const SimplicialComplex bd = order_complex(hex.order(), all_but(hex, *hex.identity()));
  CHECK(bd.num_vertices() == 12);
  const HomologyResult hb = reduced_homology(bd, kIntegers);
  CHECK(hb.rank(0) == 0);
  CHECK(hb.rank(1) == 1);
  CHECK(hb.top_nonzero() == 1);
}

TEST_CASE("projective plane has 2-torsion", "[topology]") {
  // Six-vertex triangulation of RP^2.
  const SimplicialComplex rp2 = SimplicialComplex::from_facets(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4},
          {1, 3, 5}, {2, 4, 5}});
  const HomologyResult z = reduced_homology(rp2, kIntegers);
  CHECK(z.rank(1) == 0);
  CHECK(z.has_torsion(1));
  CHECK(z.rank(2) == 0);
  CHECK(reduced_homology(rp2, Coefficients(Field::F2)).rank(1) == 1);
  CHECK(reduced_homology(rp2, Coefficients(Field::F2)).rank(2) == 1);
  CHECK(reduced_homology(rp2, Coefficients(Field::F3)).acyclic());
  CHECK(reduced_homology(rp2, kQ).acyclic());
  // Universal coefficients for cohomology: H^2(RP^2; Z) = Z/2.
  CHECK(reduced_cohomology(rp2, kIntegers).has_torsion(2));
  CHECK_FALSE(cohen_macaulay(rp2, Coefficients(Field::F2)));
  CHECK(cohen_macaulay(rp2, kQ));
}

TEST_CASE("augmented chain complexes square to zero", "[topology]") {
  const Lrb hex = hexagon();
  const ChainComplex c = augmented_chain_complex(order_complex(hex.order()));
  CHECK(c.squares_to_zero());
  // A cone is acyclic.
  CHECK(homology(c, kIntegers).acyclic());
}

TEST_CASE("Mobius functions", "[topology]") {
  const auto m3 = chain(3).mobius();
  CHECK(m3[0 * 3 + 2] == 0);
  CHECK(m3[0 * 3 + 1] == -1);

  // P({a,b}): 0 = {}, 1 = {a}, 2 = {b}, 3 = {a,b}.
  const Poset bool2 = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(bool2.mobius()[0 * 4 + 3] == 1);

  const Lrb hex = hexagon();
  const Poset& lam = hex.lambda();
  const auto mu = lam.mobius();
  std::vector<std::vector<char>> leq(lam.size(), std::vector<char>(lam.size()));
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) leq[x][y] = lam.leq(x, y);
  }
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) CHECK(mu[x * lam.size() + y] == oracle::mobius(leq, x, y));
  }
  CHECK(mu[*lam.minimum() * lam.size() + *lam.maximum()] == 2);
}

TEST_CASE("homology-CW proxy", "[topology]") {
  const CwReport tri = homology_cw_report(simplex_face_poset(3));
  CHECK(tri.passes);
  CHECK(tri.dim == 2);

  const CwReport l3 = homology_cw_report(ladder(3).order());
  CHECK(l3.passes);
  CHECK(l3.dim == 3);

  // Three atoms under a top.
  const CwReport bad = homology_cw_report(Poset::from_covers(4, {{0, 3}, {1, 3}, {2, 3}}));
  CHECK_FALSE(bad.passes);
  CHECK(bad.witness == 3);
}

TEST_CASE("Leray numbers", "[topology]") {
  const SimplicialComplex full = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  CHECK(leray_number(full, kQ) == 0);
  CHECK(leray_number(clique_complex(Graph::cycle(4)), kQ) == 2);
  CHECK(leray_number(clique_complex(Graph::path(5)), kQ) <= 1);
  CHECK_THROWS_AS(leray_number(SimplicialComplex(17), kQ), Error);
}

TEST_CASE("clique complexes and nerves", "[topology]") {
  CHECK(clique_complex(Graph::complete(3)).f_vector() == std::vector<std::int64_t>{3, 3, 1});
  CHECK(clique_complex(Graph::cycle(4)).f_vector() == std::vector<std::int64_t>{4, 4});

  // Hyperplanes of the 3-cube meet pairwise and all three at the center.
  Graph q3(8);
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      if (v < (v ^ (1 << b))) q3.add_edge(v, v ^ (1 << b));
    }
  }
  const Cat0Result r = cat0_from_median_graph(q3);
  std::vector<std::vector<int>> carriers(r.complex.num_classes);
  for (int k = 1; k < static_cast<int>(r.complex.cubes.size()); ++k) {
    for (std::size_t i = 0; i < r.complex.cubes[k].size(); ++i) {
      const Covector& x = r.complex.cubes[k][i];
      for (int c = 0; c < r.complex.num_classes; ++c) {
        if (x[c] == Sign::Zero) carriers[c].push_back(k * 1000 + static_cast<int>(i));
      }
    }
  }
  for (auto& c : carriers) std::sort(c.begin(), c.end());
  CHECK(nerve(carriers).f_vector() == clique_complex(Graph::complete(3)).f_vector());
}

TEST_CASE("Cohen-Macaulay tests", "[topology]") {
  CHECK(cohen_macaulay(SimplicialComplex::from_facets(3, {{0, 1, 2}}), kQ));
  CHECK_FALSE(cohen_macaulay(SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}}), kQ));
  const CmIntervalReport r = cm_open_intervals(hexagon().lambda());
  CHECK(r.all_pass);
  CHECK(r.intervals_checked > 0);
}

TEST_CASE("cellular chain complexes", "[topology]") {
  const CellularComplex edge = cellular_chain_complex(Poset::from_covers(3, {{0, 2}, {1, 2}}));
  REQUIRE(edge.ranks() == std::vector<long>{2, 1});
  CHECK(std::abs(edge.incidence(2, 0)) == 1);
  CHECK(edge.incidence(2, 0) == -edge.incidence(2, 1));

  const CellularComplex hex = cellular_chain_complex(hexagon().order());
  CHECK(hex.ranks() == std::vector<long>{6, 6, 1});
  CHECK(hex.squares_to_zero);
  CHECK(hex.diamonds_ok);
  CHECK(homology(hex.chain_complex(), kIntegers).acyclic());
  // Every 1-cell of the boundary hexagon meets the 2-cell.
  for (int c : hex.cells[1]) CHECK(std::abs(hex.incidence(hex.cells[2][0], c)) == 1);

  const CellularComplex l2 = cellular_chain_complex(ladder(2).order());
  CHECK(l2.ranks() == std::vector<long>{2, 2, 1});
  CHECK(homology(l2.chain_complex(), kIntegers).acyclic());

  try {
    cellular_chain_complex(Poset::from_covers(4, {{0, 3}, {1, 3}, {2, 3}}));
    FAIL("non-CW poset accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotCwProxy");
  }
}

TEST_CASE("f-vectors, flag vectors, Euler characteristic, thinness", "[topology]") {
  const Lrb hex = hexagon();
  CHECK(f_vector(hex.order()) == std::vector<std::int64_t>{6, 6, 1});
  CHECK(euler_characteristic(hex.order()) == 1);
  CHECK(flag_vector(hex.order()).at({0, 1}) == 12);
  CHECK(flag_vector(hex.order()) == oracle::flag_counts(oracle::natural_order(oracle::table_of(hex))));
  CHECK_FALSE(is_thin(hex.lambda()));

  // Face poset of the 3-cube with the empty face adjoined is thin.
  Graph q3(8);
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      if (v < (v ^ (1 << b))) q3.add_edge(v, v ^ (1 << b));
    }
  }
  const Lrb cube = cat0_from_median_graph(q3).lrb;
  CHECK(f_vector(cube.order()) == std::vector<std::int64_t>{8, 12, 6, 1});
  const int n = cube.size() + 1;
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) leq[0 * n + a] = 1;
  for (int a = 0; a < cube.size(); ++a) {
    for (int b = 0; b < cube.size(); ++b) leq[(a + 1) * n + (b + 1)] = cube.leq(a, b);
  }
  CHECK(is_thin(Poset::from_leq(n, leq)));

  // 0 < 1 < 2 and 3 < 2: not graded.
  CHECK_THROWS_AS(f_vector(Poset::from_covers(4, {{0, 1}, {1, 2}, {3, 2}})), Error);
}

TEST_CASE("Rota cross-cut consistency on geometric bands", "[topology]") {
  for (const Lrb& b : {hexagon(), face_semigroup_affine(plane_lines({0, 0, 1})).lrb}) {
    for (int x = 0; x < b.num_supports(); ++x) {
      const auto& lx = b.lclass(x);
      std::vector<Simplex> facets;
      for (int u = 0; u < b.size(); ++u) {
        Simplex s;
        for (std::size_t i = 0; i < lx.size(); ++i) {
          if (b.leq(lx[i], u)) s.push_back(static_cast<int>(i));
        }
        if (!s.empty()) facets.push_back(s);
      }
      const SimplicialComplex cc = SimplicialComplex::from_facets(static_cast<int>(lx.size()), facets);
      const SimplicialComplex oc = order_complex(b.order(), b.contraction_elements(x));
      const HomologyResult h1 = reduced_homology(cc, kIntegers);
      const HomologyResult h2 = reduced_homology(oc, kIntegers);
      for (int d = -1; d <= 3; ++d) {
        CHECK(h1.rank(d) == h2.rank(d));
        CHECK(h1.has_torsion(d) == h2.has_torsion(d));
      }
    }
  }
}
