#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrb/algebra.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/enumeration.hpp"
#include "lrb/error.hpp"
#include "lrb/ext.hpp"
#include "lrb/median.hpp"
#include "lrb/quiver.hpp"
#include "lrb/resolutions.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

// Random arrangements of lines in the plane with small integer data.
// Parallel or repeated lines are rejected and redrawn.
std::vector<Arrangement> random_arrangements(std::uint32_t seed, int count, bool central) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> lines(2, 4);
  std::vector<Arrangement> out;
  while (static_cast<int>(out.size()) < count) {
    Arrangement a;
    a.dim = 2;
    const int n = lines(rng);
    for (int i = 0; i < n; ++i) {
      a.forms.push_back({Rational(coef(rng)), Rational(coef(rng))});
      a.constants.push_back(central ? Rational(0) : Rational(coef(rng)));
    }
    try {
      a.validate();
    } catch (const Error&) {
      continue;
    }
    if (central && !a.is_essential()) continue;
    out.push_back(a);
  }
  return out;
}

std::vector<Lrb> random_bands(std::uint32_t seed) {
  std::vector<Lrb> out;
  for (const Arrangement& a : random_arrangements(seed, 4, true)) out.push_back(face_monoid_central(a).lrb);
  for (const Arrangement& a : random_arrangements(seed + 1, 4, false)) {
    out.push_back(face_semigroup_affine(a).lrb);
  }
  std::mt19937 rng(seed + 2);
  for (int t = 0; t < 3; ++t) {
    Graph g(4);
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    out.push_back(free_partially_commutative(g));
  }
  return out;
}

Graph random_tree(std::mt19937& rng, int n) {
  Graph t(n);
  for (int v = 1; v < n; ++v) t.add_edge(static_cast<int>(rng() % v), v);
  return t;
}

// Cartesian product of two graphs; median graphs are closed under it.
Graph box(const Graph& a, const Graph& b) {
  Graph g(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      for (int k = 0; k < b.size(); ++k) {
        if (j < k && b.adjacent(j, k)) g.add_edge(i * b.size() + j, i * b.size() + k);
      }
      for (int k = 0; k < a.size(); ++k) {
        if (i < k && a.adjacent(i, k)) g.add_edge(i * b.size() + j, k * b.size() + j);
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("random bands satisfy the axioms", "[properties]") {
  for (const Lrb& b : random_bands(101)) {
    const auto t = oracle::table_of(b);
    CHECK(oracle::is_left_regular_band(t));
    CHECK(oracle::left_ideals(t).size() == static_cast<std::size_t>(b.num_supports()));
    for (int x = 0; x < b.size(); ++x) {
      for (int y = 0; y < b.size(); ++y) {
        // sigma is a homomorphism onto the meet semilattice.
        CHECK(b.sigma(b.mul(x, y)) == b.support().meet_of(b.sigma(x), b.sigma(y)));
        if (b.leq(x, y)) {
          CHECK(b.lambda().leq(b.sigma(x), b.sigma(y)));
          for (int c = 0; c < b.size(); ++c) CHECK(b.leq(b.mul(c, x), b.mul(c, y)));
        }
      }
    }
    for (int x = 0; x < b.num_supports(); ++x) {
      const Restriction r = contraction(b, x);
      CHECK(oracle::is_left_regular_band(oracle::table_of(r.lrb)));
    }
  }
}

TEST_CASE("random bands: idempotents, Cartan, Ext", "[properties]") {
  for (const Lrb& b : random_bands(202)) {
    CHECK(eta_idempotents(b).all_pass());
    CHECK(eta_idempotents(b.with_rotated_representatives()).all_pass());
    CHECK(identity_element(b).has_value() == is_connected(b));
    if (!is_connected(b)) continue;
    const IntMatrix c = cartan_by_characters(b);
    CHECK(c == cartan_by_modules(b));
    CHECK(is_unipotent_lower_triangular(b, c));
    CHECK(entry_sum(c) == b.size());
    if (is_cw_lrb(b).passes) CHECK(c == cartan_by_mobius(b));
    CHECK(quiver(b, Field::Q) == quiver(b, Field::F2));
    CHECK(quiver(b, Field::Q) == quiver(b, Field::F3));
  }
}

TEST_CASE("random arrangements: resolutions and enumeration", "[properties]") {
  for (const Arrangement& a : random_arrangements(303, 3, true)) {
    const Lrb b = face_monoid_central(a).lrb;
    REQUIRE(is_cw_lrb(b).passes);
    CHECK(cell_counts_vs_mobius(b).match());
    CHECK(flag_vector_vs_mobius(b).match());
    const int bot = *b.lambda().minimum();
    CHECK(order_complex_resolution(b, bot).complex.certified());
    const CellularResolution r = minimal_cellular_resolution(b, bot);
    CHECK(r.complex.certified());
    CHECK(r.minimality.minimal());
    CHECK(global_dimension(b) == is_cw_lrb(b).dim);
  }
  for (const Arrangement& a : random_arrangements(304, 3, false)) {
    const Lrb b = face_semigroup_affine(a).lrb;
    if (!is_connected(b)) continue;
    for (int x = 0; x < b.num_supports(); ++x) {
      CHECK(geometric_crosscut_resolution(b, x).complex.certified());
    }
  }
}

TEST_CASE("random median graphs satisfy the CAT(0) identity", "[properties]") {
  std::mt19937 rng(405);
  for (int t = 0; t < 12; ++t) {
    Graph g = random_tree(rng, 2 + static_cast<int>(rng() % 4));
    if (t % 2 == 1) g = box(g, random_tree(rng, 2 + static_cast<int>(rng() % 2)));
    std::vector<std::pair<int, int>> edges = g.edges();
    REQUIRE(oracle::is_median_graph(g.size(), edges));
    const Cat0Result r = cat0_from_median_graph(g);
    CHECK(r.complex.theta_consistent);
    CHECK(cat0_f_identity(r.complex).match());
    CHECK(oracle::is_left_regular_band(oracle::table_of(r.lrb)));
    // Separation sets of vertex covectors measure graph distance.
    const auto dist = oracle::all_distances(g.size(), edges);
    for (int u = 0; u < g.size(); ++u) {
      for (int v = 0; v < g.size(); ++v) {
        CHECK(static_cast<int>(separation_set(r.complex.vertex_covector[u], r.complex.vertex_covector[v]).size()) ==
              dist[u][v]);
      }
    }
  }
}

TEST_CASE("composition of sign vectors is associative", "[properties]") {
  std::mt19937 rng(506);
  for (Alphabet a : {Alphabet::L, Alphabet::Ltilde}) {
    const int letters = a == Alphabet::L ? 3 : 5;
    for (int t = 0; t < 500; ++t) {
      Covector x(5), y(5), z(5);
      for (int i = 0; i < 5; ++i) {
        x[i] = static_cast<Sign>(rng() % letters);
        y[i] = static_cast<Sign>(rng() % letters);
        z[i] = static_cast<Sign>(rng() % letters);
      }
      CHECK(compose(compose(x, y, a), z, a) == compose(x, compose(y, z, a), a));
      CHECK(compose(x, x, a) == x);
      CHECK(compose(compose(x, y, a), x, a) == compose(x, y, a));
    }
  }
}
