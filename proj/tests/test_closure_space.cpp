#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relq/closure_space.hpp"

using namespace relq;

TEST_CASE("generators are completed under intersection") {
  // Generators {ab, bc} force the intersection {b} to be closed too.
  auto s = ClosureSpace::from_generators(3, {0b011, 0b110}, {"a", "b", "c"});
  CHECK(s.closure_of(0b010) == 0b010);
  CHECK(s.closure_of(0b001) == 0b011);
  CHECK(s.closure_of(0b101) == 0b111);
  // The empty set is not an intersection of generators, so the least closed
  // set is {b}.
  CHECK(s.bottom() == 0b010);
  CHECK(!s.props().unbounded);
}

TEST_CASE("discrete space") {
  auto s = ClosureSpace::discrete(3);
  for (Mask m = 0; m < 8; ++m) CHECK(s.closure_of(m) == m);
  CHECK(s.props().t0);
  CHECK(s.props().unbounded);
}

TEST_CASE("specialization order recovers the poset") {
  auto c = FinitePoset::chain(3);
  // Closed sets of the Alexandroff view: all down-sets.
  std::vector<Mask> downs;
  for (Mask m = 0; m < 8; ++m)
    if (down_closure(c, m) == m) downs.push_back(m);
  auto s = ClosureSpace::from_generators(3, downs, c.labels());
  CHECK(s.props().t0);
  CHECK(poset_isomorphic(s.specialization_poset(), c));
  CHECK(s.point_closure(2) == 0b111);
}

TEST_CASE("bounded space and unbounded coreflection") {
  // Every closed set contains point 0, so {0} is the closure of the empty set.
  auto s = ClosureSpace::from_generators(2, {0b01, 0b11}, {"z", "x"});
  CHECK(!s.props().unbounded);
  CHECK(s.bottom() == 0b01);
  CHECK(s.truncated_ground() == 0b10);
  auto u = unbounded_coreflection(s);
  CHECK(u.size() == 1);
  CHECK(u.props().unbounded);
}

TEST_CASE("closed set lattice ordered by inclusion") {
  auto s = ClosureSpace::from_generators(2, {}, {"x", "y"});
  // Closed sets: {}, {x,y} plus forced ground; generators empty -> only ground
  // and total intersections.
  auto lat = closed_set_lattice(s);
  CHECK(lat.props().complete_lattice);
}

TEST_CASE("principal ideal space of a complete lattice") {
  auto b = FinitePoset::boolean_algebra(2);
  auto s = principal_ideal_space(b);
  // Point closures are the principal ideals.
  CHECK(s.point_closure(b.index_of("ab")) == b.carrier());
  CHECK(s.closure_of(bit(b.index_of("a")) | bit(b.index_of("b"))) ==
        b.carrier());
  CHECK(!s.props().unbounded);  // the least element lies in every closure
}
