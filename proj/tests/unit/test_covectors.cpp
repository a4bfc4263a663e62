#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/error.hpp"
#include "lrb/median.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

Arrangement arrangement(int dim, std::vector<std::vector<long>> forms, std::vector<long> consts) {
  Arrangement a;
  a.dim = dim;
  for (const auto& f : forms) {
    QVector row;
    for (long v : f) row.push_back(Rational(v));
    a.forms.push_back(row);
  }
  for (long c : consts) a.constants.push_back(Rational(c));
  return a;
}

Arrangement hexagon() { return arrangement(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 0}); }

std::set<std::string> as_strings(const CovectorSet& cs) {
  std::set<std::string> out;
  for (const auto& x : cs.vectors) out.insert(to_string(x));
  return out;
}

Covector cv(const std::string& s) { return covector_from_string(s); }

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
  Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
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

}  // namespace

TEST_CASE("composition of covectors", "[covectors]") {
  CHECK(compose(cv("0+-"), cv("+-0")) == cv("++-"));
  CHECK(compose(cv("0++"), cv("-++")) == cv("-++"));
  for (const auto& x : {cv("0+-"), cv("+++"), cv("000")}) CHECK(compose(x, x) == x);
  CHECK_THROWS_AS(compose(cv("0+"), cv("0+-")), Error);
  CHECK(compose(cv("0ij"), cv("+-+"), Alphabet::Ltilde) == cv("+ij"));
  CHECK(compose(cv("i0"), cv("j+"), Alphabet::Ltilde) == cv("i+"));
}

TEST_CASE("zero sets, separation sets and negation", "[covectors]") {
  CHECK(zero_set(cv("0+0")) == std::vector<int>{0, 2});
  CHECK(separation_set(cv("+-"), cv("--")) == std::vector<int>{0});
  CHECK(separation_set(cv("+-0"), cv("+-0")).empty());
  CHECK(negate(cv("+0-")) == cv("-0+"));
  CHECK_THROWS_AS(negate(cv("i+")), Error);
  for (const auto& x : {cv("+0-"), cv("0+-"), cv("---")}) CHECK(compose(x, negate(x)) == x);
}

TEST_CASE("sign feasibility", "[covectors]") {
  const auto one = arrangement(1, {{1}}, {0});
  CHECK(sign_feasible(1, one.forms, one.constants, cv("+")));
  const auto h = hexagon();
  CHECK_FALSE(sign_feasible(2, h.forms, h.constants, cv("++-")));
  CHECK(sign_feasible(2, h.forms, h.constants, cv("000")));
  CHECK(sign_feasible(2, h.forms, h.constants, cv("+-+")));
  CHECK_THROWS_AS(sign_feasible(3, h.forms, h.constants, cv("000")), Error);
}

TEST_CASE("hexagon face monoid agrees with a grid scan", "[covectors]") {
  const FaceBand fb = face_monoid_central(hexagon());
  CHECK(fb.covectors.vectors.size() == 13);
  CHECK(as_strings(fb.covectors) == oracle::grid_sign_vectors({{1, 0}, {0, 1}, {1, 1}}, {0, 0, 0}, 3, 1));
  CHECK(topes(fb.covectors).size() == 6);
  CHECK(cocircuits(fb.covectors).size() == 6);
  CHECK(fb.lrb.is_monoid());
  CHECK(to_string(fb.covectors.vectors[*fb.lrb.identity()]) == "000");
  // Cocircuits generate.
  CHECK(generated_by(fb.covectors.ground, cocircuits(fb.covectors)).vectors == fb.covectors.vectors);
}

TEST_CASE("Boolean arrangements give L^n", "[covectors]") {
  for (int n = 1; n <= 3; ++n) {
    const FaceBand fb = face_monoid_central(boolean_arrangement(n));
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    CHECK(static_cast<std::int64_t>(fb.covectors.vectors.size()) == p);
    Lrb ln = table_L();
    for (int i = 1; i < n; ++i) ln = product(ln, table_L());
    CHECK(find_isomorphism(fb.lrb, ln).has_value());
    std::int64_t t = 1 << n;
    CHECK(static_cast<std::int64_t>(topes(fb.covectors).size()) == t);
  }
  CHECK(find_isomorphism(face_monoid_central(arrangement(1, {{1}}, {0})).lrb, table_L()).has_value());
}

TEST_CASE("arrangement validation", "[covectors]") {
  CHECK_THROWS_AS(face_monoid_central(arrangement(2, {{0, 0}}, {0})), Error);
  CHECK_THROWS_AS(face_monoid_central(arrangement(2, {{1, 1}, {2, 2}}, {0, 0})), Error);
  CHECK_THROWS_AS(face_monoid_central(arrangement(1, {{1}}, {1})), Error);
  std::vector<std::vector<long>> ten(10, std::vector<long>{1, 0});
  for (int i = 0; i < 10; ++i) ten[i][1] = i;
  CHECK_THROWS_AS(face_monoid_central(arrangement(2, ten, std::vector<long>(10, 0))), Error);
}

TEST_CASE("affine face semigroups", "[covectors]") {
  const FaceBand pt = face_semigroup_affine(arrangement(1, {{1}}, {1}));
  CHECK(pt.lrb.size() == 3);

  const auto par = arrangement(2, {{1, 0}, {1, 0}}, {0, 1});
  const FaceBand p2 = face_semigroup_affine(par);
  CHECK(p2.lrb.size() == 5);
  CHECK(as_strings(p2.covectors) == oracle::grid_sign_vectors({{1, 0}, {1, 0}}, {0, 1}, 6, 2));

  const FaceBand a3 = face_semigroup_affine(arrangement(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1}));
  CHECK(a3.lrb.size() == 19);
  CHECK(as_strings(a3.covectors) ==
        oracle::grid_sign_vectors({{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1}, 12, 4));
  CHECK_FALSE(a3.lrb.is_monoid());
  CHECK(is_connected(a3.lrb));
  // 3 vertices, 9 edges, 7 regions.
  std::vector<int> by_zeros(3, 0);
  for (const auto& x : a3.covectors.vectors) ++by_zeros[zero_set(x).size()];
  CHECK(by_zeros == std::vector<int>{7, 9, 3});
}

TEST_CASE("axioms of covector sets", "[covectors]") {
  const CovectorSet hex = face_monoid_central(hexagon()).covectors;
  const AxiomReport r = check_axioms(hex);
  CHECK(r.oriented_matroid());
  CHECK(r.com());
  CHECK(r.fs);

  std::vector<Covector> fewer;
  for (const auto& x : hex.vectors) {
    if (to_string(x) != "+++") fewer.push_back(x);
  }
  const CovectorSet tampered = CovectorSet::make(hex.ground, fewer);
  const AxiomReport t = check_axioms(tampered);
  CHECK_FALSE(t.oriented_matroid());
  CHECK_FALSE(t.om2);
  CHECK_FALSE(t.om1);
  REQUIRE_FALSE(t.failures.empty());
  const auto om2 = std::find_if(t.failures.begin(), t.failures.end(),
                                [](const AxiomFailure& f) { return f.axiom == "OM2"; });
  REQUIRE(om2 != t.failures.end());
  CHECK_FALSE(om2->witness.empty());

  Graph p3 = Graph::path(3);
  const Cat0Result cat = cat0_from_median_graph(p3);
  const AxiomReport l = check_axioms(cat.covectors);
  CHECK(l.lopsided());
  CHECK(l.right_ideal);
  CHECK(l.om3);
  CHECK_FALSE(l.om0);
  CHECK_FALSE(l.oriented_matroid());
}

TEST_CASE("every contraction of the affine COM is a COM, every deletion an OM", "[covectors]") {
  const FaceBand a3 = face_semigroup_affine(arrangement(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1}));
  REQUIRE(check_axioms(a3.covectors).com());
  const Lrb& b = a3.lrb;
  for (int x = 0; x < b.num_supports(); ++x) {
    std::vector<Covector> vs;
    for (int a : b.contraction_elements(x)) vs.push_back(a3.covectors.vectors[a]);
    CHECK(check_axioms(CovectorSet::make(a3.covectors.ground, vs)).com());
  }
  for (int a = 0; a < b.size(); ++a) {
    // aB restricted to the zero set of a is an oriented matroid.
    const Restriction d = deletion(b, a);
    const auto zs = zero_set(a3.covectors.vectors[a]);
    std::vector<std::string> ground;
    for (int e : zs) ground.push_back(a3.covectors.ground[e]);
    std::vector<Covector> vs;
    for (int c : d.embed) {
      Covector y;
      for (int e : zs) y.push_back(a3.covectors.vectors[c][e]);
      vs.push_back(y);
    }
    if (ground.empty()) continue;
    CHECK(check_axioms(CovectorSet::make(ground, vs)).oriented_matroid());
  }
}

TEST_CASE("lexicographic extensions", "[covectors]") {
  const CovectorSet hex = face_monoid_central(hexagon()).covectors;
  const LexExtension ext = lexicographic_extension(hex, {0, 1, 2}, {Sign::Plus, Sign::Plus, Sign::Plus});
  CHECK(ext.generic);
  for (std::size_t i = 0; i < ext.cocircuits.size(); ++i) {
    CHECK(ext.sigma[i] != Sign::Zero);
    // sigma(-y) = -sigma(y).
    for (std::size_t j = 0; j < ext.cocircuits.size(); ++j) {
      if (ext.cocircuits[j] == negate(ext.cocircuits[i])) {
        CHECK(ext.sigma[j] == (ext.sigma[i] == Sign::Plus ? Sign::Minus : Sign::Plus));
      }
    }
  }
  CHECK(ext.axioms.oriented_matroid());
  CHECK(ext.hemisphere.size() == 7);

  // Extensions keep the rank, so extending {0,+,-} adds an element parallel
  // to e: the sign vectors of the forms x and 2x on the line.
  const CovectorSet l = CovectorSet::make({"e"}, {cv("0"), cv("+"), cv("-")});
  const LexExtension e1 = lexicographic_extension(l, {0}, {Sign::Plus});
  CHECK(e1.axioms.oriented_matroid());
  CHECK(as_strings(e1.extension) == std::set<std::string>{"00", "++", "--"});

  CHECK_THROWS_AS(lexicographic_extension(CovectorSet::make({"e"}, {cv("+"), cv("-")}), {0}, {Sign::Plus}),
                  Error);
}

TEST_CASE("visual hemispheres", "[covectors]") {
  const Arrangement h = hexagon();
  const FaceBand fb = face_monoid_central(h);
  const Hemisphere r = visual_hemisphere_realizable(h, fb, 7);
  CHECK(r.generic);
  CHECK(r.region.size() == 7);
  CHECK(r.covers_boundary);
  CHECK(r.region_connected);
  CHECK(fb.lrb.size() - static_cast<int>(r.region.size()) == 6);
  // Same seed, same answer.
  CHECK(visual_hemisphere_realizable(h, fb, 7).form == r.form);

  for (int n = 1; n <= 4; ++n) {
    const Arrangement b = boolean_arrangement(n);
    const FaceBand bf = face_monoid_central(b);
    const Hemisphere bh = visual_hemisphere_with_form(b, bf, QVector(n, Rational(1)));
    // Faces with at least one plus.
    int plus = 0;
    for (const auto& x : bf.covectors.vectors) {
      if (std::find(x.begin(), x.end(), Sign::Plus) != x.end()) ++plus;
    }
    CHECK(static_cast<int>(bh.region.size()) == plus);
    CHECK(bf.lrb.size() - static_cast<int>(bh.region.size()) == (1 << n));
    CHECK(check_cover_conditions(bf.lrb, bh.region).passes());
  }

  const Arrangement one = arrangement(1, {{1}}, {0});
  const FaceBand of = face_monoid_central(one);
  const Hemisphere oh = visual_hemisphere_realizable(one, of, 1);
  CHECK(oh.region.size() == 1);
  CHECK(of.lrb.size() - 1 == 2);

  CHECK_FALSE(is_generic_form(h, fb.covectors, QVector{Rational(1), Rational(0)}));
  CHECK_THROWS_AS(visual_hemisphere_with_form(h, fb, QVector{Rational(1), Rational(1)}), Error);
}

TEST_CASE("braid monoids and ranking COMs", "[covectors]") {
  const Lrb b3 = braid_face_monoid(3);
  CHECK(b3.size() == 13);
  CHECK(find_isomorphism(b3, face_monoid_central(hexagon()).lrb).has_value());
  CHECK(ordered_set_partitions(4).size() == 75);
  CHECK(face_monoid_central(braid_arrangement(4)).lrb.size() == 75);

  // Partition product against the realization.
  const Arrangement a4 = braid_arrangement(4);
  const auto parts = ordered_set_partitions(4);
  for (std::size_t i = 0; i < parts.size(); i += 7) {
    for (std::size_t j = 0; j < parts.size(); j += 5) {
      CHECK(braid_covector(braid_product(parts[i], parts[j]), 4) ==
            compose(braid_covector(parts[i], 4), braid_covector(parts[j], 4)));
    }
  }

  CHECK(ranking_com(Poset::from_covers(3, {})).table() == b3.table());
  const Lrb chain = ranking_com(Poset::from_covers(3, {{0, 1}, {1, 2}}));
  int minimal = 0;
  for (int a = 0; a < chain.size(); ++a) {
    if (chain.order().lower_covers(a).empty()) ++minimal;
  }
  CHECK(minimal == 1);
  // Linear extensions of 1 < 2, 3 incomparable: 3.
  const Lrb vee = ranking_com(Poset::from_covers(3, {{0, 1}}));
  int topes_vee = 0;
  for (int a = 0; a < vee.size(); ++a) {
    if (vee.order().lower_covers(a).empty()) ++topes_vee;
  }
  CHECK(topes_vee == 3);
}

TEST_CASE("CAT(0) cube complexes from median graphs", "[covectors][median]") {
  const Cat0Result p3 = cat0_from_median_graph(Graph::path(3));
  CHECK(p3.complex.num_classes == 2);
  CHECK(p3.complex.crossing_graph().edge_count() == 0);
  CHECK(p3.lrb.size() == 5);
  CHECK(p3.complex.f_vector() == std::vector<std::int64_t>{3, 2});

  const Graph q = cube_graph(3);
  const Cat0Result q3 = cat0_from_median_graph(q);
  CHECK(q3.complex.f_vector() == std::vector<std::int64_t>{8, 12, 6, 1});
  CHECK(q3.lrb.size() == 27);
  CHECK(q3.complex.crossing_graph().edge_count() == 3);
  CHECK(q3.complex.theta_consistent);

  const Graph t3 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(cat0_from_median_graph(t3).complex.f_vector() == std::vector<std::int64_t>{4, 3});

  // K_{2,3} has two medians for some triple.
  const Graph k23 = from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK_FALSE(oracle::is_median_graph(5, k23.edges()));
  try {
    cat0_from_median_graph(k23);
    FAIL("K_{2,3} accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotMedian");
  }
  try {
    cat0_from_median_graph(Graph(2));
    FAIL("disconnected graph accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotConnected");
  }
  CHECK_THROWS_AS(cat0_from_median_graph(Graph::cycle(3)), Error);
}

TEST_CASE("separating hyperplanes measure distance", "[covectors][median]") {
  for (const Graph& g : {cube_graph(3), Graph::path(5), from_edges(4, {{0, 1}, {0, 2}, {0, 3}}),
                         from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}})}) {
    REQUIRE(oracle::is_median_graph(g.size(), g.edges()));
    const Cat0Result r = cat0_from_median_graph(g);
    const auto d = oracle::all_distances(g.size(), g.edges());
    for (int u = 0; u < g.size(); ++u) {
      for (int v = 0; v < g.size(); ++v) {
        CHECK(static_cast<int>(separation_set(r.complex.vertex_covector[u], r.complex.vertex_covector[v]).size()) ==
              d[u][v]);
      }
    }
    // tau is an order embedding: a cube is a face of another iff its covector is above.
    const Lrb& b = r.lrb;
    for (int a = 0; a < b.size(); ++a) {
      for (int c = 0; c < b.size(); ++c) {
        auto va = r.complex.cube_vertices(r.covectors.vectors[a]);
        auto vc = r.complex.cube_vertices(r.covectors.vectors[c]);
        std::sort(va.begin(), va.end());
        std::sort(vc.begin(), vc.end());
        const bool face = std::includes(vc.begin(), vc.end(), va.begin(), va.end());
        CHECK(b.leq(a, c) == face);
      }
    }
    CHECK(check_axioms(r.covectors).lopsided());
  }
}
