#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relq/poset.hpp"

using namespace relq;

TEST_CASE("chain basics") {
  auto c = FinitePoset::chain(4);
  CHECK(c.size() == 4);
  CHECK(c.leq(0, 3));
  CHECK(!c.leq(2, 1));
  CHECK(c.props().complete_lattice);
  CHECK(c.props().distributive);
  CHECK(c.props().pseudocomplemented);
  CHECK(!c.props().complemented);
  CHECK(c.props().bottom == 0);
  CHECK(c.props().top == 3);
  CHECK(c.props().atoms == bit(1));
}

TEST_CASE("boolean algebra on three atoms") {
  auto b = FinitePoset::boolean_algebra(3);
  CHECK(b.size() == 8);
  CHECK(b.props().boolean);
  CHECK(b.props().atomistic);
  CHECK(popcount(b.props().atoms) == 3);
  // Joins and meets behave like union and intersection of atom sets.
  int x = b.index_of("a"), y = b.index_of("b");
  auto j = join_of(b, bit(x) | bit(y));
  REQUIRE(j.has_value());
  CHECK(b.label(*j) == "ab");
  auto m = meet_of(b, bit(x) | bit(y));
  REQUIRE(m.has_value());
  CHECK(b.label(*m) == "0");
}

TEST_CASE("diamond and pentagon") {
  auto m3 = FinitePoset::diamond_m3();
  CHECK(m3.props().complete_lattice);
  CHECK(!m3.props().distributive);
  CHECK(m3.props().complemented);
  CHECK(!m3.props().pseudocomplemented);

  auto n5 = FinitePoset::pentagon_n5();
  CHECK(n5.props().complete_lattice);
  CHECK(!n5.props().distributive);
  CHECK(n5.props().pseudocomplemented);
  // 0 < a < c < 1 and 0 < b < 1; a* = b, b* = c.
  auto pa = pseudocomplement(n5, n5.index_of("a"));
  REQUIRE(pa.has_value());
  CHECK(n5.label(*pa) == "b");
  auto pb = pseudocomplement(n5, n5.index_of("b"));
  REQUIRE(pb.has_value());
  CHECK(n5.label(*pb) == "c");
  CHECK(!poset_isomorphic(m3, n5));
}

TEST_CASE("cuts") {
  auto c = FinitePoset::chain(3);
  CHECK(cut_delta(c, 0) == bit(0));            // lower bounds of everything
  CHECK(cut_delta(c, bit(1)) == (bit(0) | bit(1)));
  auto a = FinitePoset::antichain(2);
  CHECK(cut_delta(a, 0) == 0);                 // no least element
  CHECK(cut_delta(a, bit(0) | bit(1)) == a.carrier());  // no upper bounds
}

TEST_CASE("down and up closure, extrema") {
  auto b = FinitePoset::boolean_algebra(2);
  int ab = b.index_of("ab");
  CHECK(down_closure(b, bit(ab)) == b.carrier());
  CHECK(up_closure(b, bit(b.index_of("a"))) == (bit(b.index_of("a")) | bit(ab)));
  CHECK(minimals(b, b.carrier()) == bit(b.index_of("0")));
  CHECK(maximals(b, b.carrier()) == bit(ab));
}

TEST_CASE("polars in a boolean algebra are complements") {
  auto b = FinitePoset::boolean_algebra(2);
  int a = b.index_of("a");
  // polar of a = down-set of its complement b.
  CHECK(polar(b, a) == down_closure(b, bit(b.index_of("b"))));
  auto pc = pseudocomplement(b, a);
  REQUIRE(pc.has_value());
  CHECK(b.label(*pc) == "b");
}

TEST_CASE("product and dual") {
  auto c2 = FinitePoset::chain(2);
  auto prod = poset_product(c2, c2);
  CHECK(poset_isomorphic(prod, FinitePoset::boolean_algebra(2)));
  auto n5 = FinitePoset::pentagon_n5();
  CHECK(poset_isomorphic(dual(n5), n5));
  CHECK(!poset_isomorphic(dual(FinitePoset::chain(3)),
                          FinitePoset::antichain(3)));
}

TEST_CASE("restrict keeps induced order") {
  auto b = FinitePoset::boolean_algebra(2);
  Mask keep = b.carrier() & ~bit(b.index_of("0"));
  auto r = b.restrict(keep);
  CHECK(r.size() == 3);
  CHECK(r.leq(r.index_of("a"), r.index_of("ab")));
  CHECK(!r.leq(r.index_of("a"), r.index_of("b")));
  CHECK(!r.props().bottom.has_value());
}

TEST_CASE("from_covers rejects bad input") {
  CHECK_THROWS_AS(FinitePoset::from_covers({"x", "x"}, {}), RelqError);
  CHECK_THROWS_AS(FinitePoset::from_covers({"x", "y"}, {{"x", "z"}}),
                  RelqError);
  CHECK_THROWS_AS(
      FinitePoset::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
      RelqError);
}
