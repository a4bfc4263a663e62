#include <catch2/catch_amalgamated.hpp>

#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/error.hpp"
#include "oracles.hpp"

using namespace lrb;

namespace {

Arrangement hexagon() {
  Arrangement a;
  a.dim = 2;
  a.forms = {{1, 0}, {0, 1}, {1, 1}};
  a.constants = {0, 0, 0};
  return a;
}

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

int support_of_rank(const Lrb& b, int h) {
  for (int x = 0; x < b.num_supports(); ++x) {
    if (b.lambda().heights()[x] == h) return x;
  }
  return -1;
}

}  // namespace

TEST_CASE("L validates with identity 0", "[lrb-core]") {
  const Lrb l = table_L();
  REQUIRE(l.is_monoid());
  CHECK(l.name(*l.identity()) == "0");
  CHECK(oracle::is_left_regular_band(oracle::table_of(l)));
}

TEST_CASE("left-zero band has no identity and an antichain order", "[lrb-core]") {
  const Lrb z = left_zero(2);
  CHECK_FALSE(z.is_monoid());
  CHECK_FALSE(z.order().comparable(0, 1));
}

TEST_CASE("validation names the failing axiom", "[lrb-core]") {
  SemigroupTable z2{2, {0, 1, 1, 0}, {"0", "1"}};
  CHECK(error_kind([&] { Lrb::validate(z2); }) == "NotIdempotent");

  // xy = y: idempotent and associative but yxy = xy fails.
  SemigroupTable rz{2, {0, 1, 0, 1}, {"x", "y"}};
  CHECK(error_kind([&] { Lrb::validate(rz); }) == "NotLeftRegular");

  SemigroupTable bad{2, {0, 2, 1, 1}, {"x", "y"}};
  CHECK(error_kind([&] { Lrb::validate(bad); }) == "TableOutOfRange");

  // Idempotent, not associative: (1*0)*2 = 2 but 1*(0*2) = 1.
  SemigroupTable na{3, {0, 0, 2,
                        2, 1, 1,
                        2, 2, 2}, {"a", "b", "c"}};
  CHECK(error_kind([&] { Lrb::validate(na); }) == "NotAssociative");
}

TEST_CASE("natural order of L", "[lrb-core]") {
  const Lrb l = table_L();
  CHECK(l.leq(1, 0));
  CHECK(l.leq(2, 0));
  CHECK_FALSE(l.order().comparable(1, 2));
}

TEST_CASE("support semilattice of L", "[lrb-core]") {
  const Lrb l = table_L();
  REQUIRE(l.num_supports() == 2);
  CHECK(l.lambda().length() == 1);
  const int bottom = *l.lambda().minimum();
  CHECK(l.lclass(bottom) == std::vector<int>{1, 2});
  CHECK(l.lclass(1 - bottom) == std::vector<int>{0});
  CHECK(oracle::left_ideals(oracle::table_of(l)).size() == 2);
}

TEST_CASE("support of L x L is a product of chains", "[lrb-core]") {
  const Lrb p = product(table_L(), table_L());
  CHECK(p.size() == 9);
  CHECK(p.num_supports() == 4);
  const Poset& lam = p.lambda();
  CHECK(lam.length() == 2);
  CHECK(lam.minimal().size() == 1);
  CHECK(lam.maximal().size() == 1);
  CHECK(f_vector(lam) == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("hexagon support semilattice and Mobius value", "[lrb-core]") {
  const Lrb h = face_monoid_central(hexagon()).lrb;
  REQUIRE(h.size() == 13);
  CHECK(f_vector(h.lambda()) == std::vector<std::int64_t>{1, 3, 1});
  const int bottom = *h.lambda().minimum();
  const int top = *h.lambda().maximum();
  CHECK(h.support().mu(bottom, top) == 2);
  // Brute-force support count from principal left ideals.
  CHECK(oracle::left_ideals(oracle::table_of(h)).size() == 5);
}

TEST_CASE("support map identities hold exhaustively on the hexagon", "[lrb-core]") {
  const Lrb h = face_monoid_central(hexagon()).lrb;
  const Support& s = h.support();
  for (int a = 0; a < h.size(); ++a) {
    for (int b = 0; b < h.size(); ++b) {
      CHECK(h.sigma(h.mul(a, b)) == s.meet_of(h.sigma(a), h.sigma(b)));
      const bool same = h.mul(a, b) == a && h.mul(b, a) == b;
      CHECK((h.sigma(a) == h.sigma(b)) == same);
    }
  }
  // mu * zeta = identity.
  const int m = h.num_supports();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      std::int64_t sum = 0;
      for (int z = 0; z < m; ++z) {
        if (h.lambda().leq(z, y)) sum += s.mu(x, z);
      }
      CHECK(sum == (x == y ? 1 : 0));
    }
  }
}

TEST_CASE("contractions", "[lrb-core]") {
  const Lrb h = face_monoid_central(hexagon()).lrb;
  const int bottom = *h.lambda().minimum();
  CHECK(contraction(h, bottom).lrb.size() == h.size());

  const int ray = support_of_rank(h, 1);
  const Restriction c = contraction(h, ray);
  CHECK(find_isomorphism(c.lrb, table_L()).has_value());

  const Lrb f3 = free_lrb({"a", "b", "c"});
  // The support of the word ab is {a, b}.
  int ab = -1;
  for (int a = 0; a < f3.size(); ++a) {
    if (f3.name(a) == "ab") ab = a;
  }
  REQUIRE(ab >= 0);
  const Restriction cf = contraction(f3, f3.sigma(ab));
  CHECK(find_isomorphism(cf.lrb, free_lrb({"a", "b"})).has_value());

  CHECK(error_kind([&] { contraction(h, 99); }) == "UnknownSupportElement");
}

TEST_CASE("deletions", "[lrb-core]") {
  const Lrb f2 = free_lrb({"a", "b"});
  int a = -1;
  for (int x = 0; x < f2.size(); ++x) {
    if (f2.name(x) == "a") a = x;
  }
  const Restriction d = deletion(f2, a);
  CHECK(d.lrb.size() == 2);
  CHECK(find_isomorphism(d.lrb, free_lrb({"b"})).has_value());
  CHECK(deletion(f2, *f2.identity()).lrb.size() == f2.size());

  const Lrb h = face_monoid_central(hexagon()).lrb;
  const int ray = h.lclass(support_of_rank(h, 1)).front();
  CHECK(find_isomorphism(deletion(h, ray).lrb, table_L()).has_value());
  // L-equivalent elements give isomorphic deletions.
  for (int x = 0; x < h.num_supports(); ++x) {
    const auto& cls = h.lclass(x);
    for (std::size_t i = 1; i < cls.size(); ++i) {
      CHECK(find_isomorphism(deletion(h, cls[0]).lrb, deletion(h, cls[i]).lrb).has_value());
    }
  }
}

TEST_CASE("suspensions, joins and products", "[lrb-core]") {
  const Lrb s0 = suspension(trivial_lrb());
  CHECK(s0.table() == table_L().table());
  const Lrb sl = suspension(table_L(), {"i", "j"});
  CHECK(sl.table() == table_Ltilde().table());
  CHECK(find_isomorphism(sl, table_Ltilde()).has_value());

  Lrb iter = trivial_lrb();
  for (int n = 1; n <= 4; ++n) {
    iter = suspension(iter, {"+" + std::to_string(n), "-" + std::to_string(n)});
    CHECK(find_isomorphism(iter, ladder(n)).has_value());
    // Lam(S(B)) gains a new bottom.
    CHECK(iter.num_supports() == n + 1);
  }

  const Lrb j = join(table_L(), left_zero(2));
  for (int b = 0; b < 3; ++b) {
    for (int bp = 3; bp < 5; ++bp) {
      CHECK(j.mul(bp, b) == b);
      CHECK(j.mul(b, bp) == b);
    }
  }

  const Lrb ll = product(table_L(), table_L());
  CHECK(find_isomorphism(ll, face_monoid_central(boolean_arrangement(2)).lrb).has_value());
}

TEST_CASE("free LRB sizes match repetition-free word counts", "[lrb-core]") {
  const std::vector<std::string> letters = {"a", "b", "c", "d", "e"};
  for (int k = 1; k <= 4; ++k) {
    const Lrb f = free_lrb({letters.begin(), letters.begin() + k});
    CHECK(f.size() == oracle::repetition_free_words(k));
    CHECK(f.is_monoid());
  }
  CHECK(free_lrb({"a", "b"}).size() == 5);
  CHECK(free_lrb({"a", "b", "c"}).size() == 16);
  CHECK(error_kind([] { free_lrb({"a", "b", "c", "d", "e", "f", "g", "h"}); }) ==
        "AlphabetTooLarge");
}

TEST_CASE("free partially commutative LRBs", "[lrb-core]") {
  const Graph c4 = Graph::cycle(4);
  const Lrb b = free_partially_commutative(c4);
  CHECK(b.size() == 25);
  CHECK(b.size() == fpc_size_by_orientations(c4));
  CHECK(b.size() == oracle::commutation_classes(4, c4.edges()));
  // C4 is the join of two edgeless pairs, so B(C4) = F(2) x F(2).
  CHECK(oracle::repetition_free_words(2) * oracle::repetition_free_words(2) == 25);

  CHECK(find_isomorphism(free_partially_commutative(Graph(3)), free_lrb({"0", "1", "2"})).has_value());
  CHECK(free_partially_commutative(Graph::complete(3)).size() == 8);
  CHECK(error_kind([] { free_partially_commutative(Graph(7)); }) == "GraphTooLarge");

  for (int n = 1; n <= 5; ++n) {
    const Graph p = Graph::path(n);
    CHECK(free_partially_commutative(p).size() == oracle::commutation_classes(n, p.edges()));
    CHECK(fpc_size_by_orientations(p) == oracle::commutation_classes(n, p.edges()));
  }
}

TEST_CASE("matroid LRBs", "[lrb-core]") {
  const Lrb free = matroid_lrb({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}});
  CHECK(find_isomorphism(free, free_lrb({"a", "b"})).has_value());

  const Lrb u12 = matroid_lrb({"a", "b"}, {{}, {"a"}, {"b"}});
  REQUIRE(u12.size() == 3);
  int a = -1, b = -1;
  for (int x = 0; x < 3; ++x) {
    if (u12.name(x) == "(a)") a = x;
    if (u12.name(x) == "(b)") b = x;
  }
  CHECK(u12.mul(a, b) == a);

  const Lrb u23 = matroid_lrb({"a", "b", "c"},
                              {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK(u23.size() == 10);
  CHECK(error_kind([] { matroid_lrb({"a", "b"}, {{}, {"a", "b"}}); }) == "NotAMatroid");
}

TEST_CASE("ladders", "[lrb-core]") {
  for (int n = 0; n <= 5; ++n) {
    const Lrb l = ladder(n);
    CHECK(l.size() == 2 * n + 1);
    CHECK(l.num_supports() == n + 1);
    CHECK(l.lambda().length() == n);
  }
  CHECK(find_isomorphism(ladder(1), table_L()).has_value());
  CHECK(find_isomorphism(ladder(2), table_Ltilde()).has_value());
  // Hasse diagram of L3: +-k covers +-(k+1) crosswise, 0 on top.
  const Lrb l3 = ladder(3);
  CHECK(l3.order().covers().size() == 2 + 4 + 4);
}

TEST_CASE("connectivity", "[lrb-core]") {
  CHECK(is_connected(table_L()));
  CHECK(is_connected(free_lrb({"a", "b", "c"})));
  CHECK_FALSE(is_connected(left_zero(2)));

  Arrangement aff = hexagon();
  aff.constants = {0, 0, 1};
  const Lrb a = face_semigroup_affine(aff).lrb;
  CHECK_FALSE(a.is_monoid());
  CHECK(is_connected(a));
  for (int x = 0; x < a.num_supports(); ++x) {
    CHECK(connectivity_graph(a, x).is_connected() == order_complex_connected(a, x));
  }
  const Lrb z = left_zero(2);
  CHECK(connectivity_graph(z, 0).is_connected() == order_complex_connected(z, 0));
}

TEST_CASE("principal series prefixes are left ideals", "[lrb-core]") {
  const Lrb l = table_L();
  const auto ps = principal_series(l);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == std::vector<int>{1, 2});
  CHECK(ps[1] == std::vector<int>{0});

  const Lrb c = chain_semilattice(4);
  const auto cs = principal_series(c);
  for (int i = 0; i < 4; ++i) CHECK(cs[i] == std::vector<int>{i});

  const Lrb h = face_monoid_central(hexagon()).lrb;
  std::vector<char> in(h.size(), 0);
  for (const auto& cls : principal_series(h)) {
    for (int a : cls) in[a] = 1;
    for (int b = 0; b < h.size(); ++b) {
      for (int a = 0; a < h.size(); ++a) {
        if (in[a]) CHECK(in[h.mul(b, a)]);
      }
    }
  }
}

TEST_CASE("rotated representatives keep the band", "[lrb-core]") {
  const Lrb h = face_monoid_central(hexagon()).lrb;
  const Lrb r = h.with_rotated_representatives();
  CHECK(r.table() == h.table());
  bool differs = false;
  for (int x = 0; x < h.num_supports(); ++x) {
    CHECK(r.sigma(r.rep(x)) == x);
    if (r.rep(x) != h.rep(x)) differs = true;
  }
  CHECK(differs);
}
