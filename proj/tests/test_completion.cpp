#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relq/completion.hpp"

using namespace relq;

namespace {

AugmentedPoset aug(FinitePoset p, SubsetFamily f) {
  return {std::move(p), std::move(f)};
}

}  // namespace

TEST_CASE("powerset ideals of a complete lattice are the principal ideals") {
  auto b = FinitePoset::boolean_algebra(2);
  AugmentedPoset ap = aug(b, family_powerset());
  int count = 0;
  for (Mask m = 0; m < (Mask{1} << b.size()); ++m)
    if (is_ideal(ap, m)) ++count;
  CHECK(count == 4);
  for (int x = 0; x < b.size(); ++x) CHECK(is_ideal(ap, b.below(x)));
  CHECK(!is_ideal(ap, 0));  // the empty cut closes up to the bottom element
  CHECK(ideal_bottom(ap) == bit(b.index_of("0")));
  CHECK(ideal_closure(ap, bit(b.index_of("a")) | bit(b.index_of("b"))) ==
        b.carrier());
}

TEST_CASE("empty and singleton families give the down-sets") {
  auto b = FinitePoset::boolean_algebra(2);
  for (auto fam : {family_empty(), family_singletons(b)}) {
    AugmentedPoset ap = aug(b, fam);
    for (Mask m = 0; m < (Mask{1} << b.size()); ++m)
      CHECK(is_ideal(ap, m) == (down_closure(b, m) == m));
    CHECK(ideal_bottom(ap) == 0);
  }
}

TEST_CASE("directed family on a finite poset also gives the down-sets") {
  // Finite nonempty directed sets have a greatest element, so their cuts are
  // principal and add nothing beyond down-closure.
  auto b = FinitePoset::boolean_algebra(2);
  AugmentedPoset ap = aug(b, family_directed(b));
  for (Mask m = 0; m < (Mask{1} << b.size()); ++m)
    CHECK(is_ideal(ap, m) == (down_closure(b, m) == m));
}

TEST_CASE("explicit powerset materialization matches the powerset kind") {
  auto n5 = FinitePoset::pentagon_n5();
  AugmentedPoset lazy = aug(n5, family_powerset());
  AugmentedPoset expl = aug(n5, family_finite(n5));
  for (Mask m = 0; m < (Mask{1} << n5.size()); ++m)
    CHECK(ideal_closure(lazy, m) == ideal_closure(expl, m));
}

TEST_CASE("ideal system is a closure space on the carrier") {
  auto c = FinitePoset::chain(3);
  auto s = ideal_system(aug(c, family_powerset()));
  CHECK(s.size() == 3);
  CHECK(s.closed().size() == 3);  // the three principal ideals
  CHECK(s.closure_of(bit(1)) == (bit(0) | bit(1)));
  CHECK(!s.props().unbounded);
}

TEST_CASE("bottom distributivity") {
  // Pseudocomplemented lattices pass with the powerset family; the diamond
  // does not (the polar of an atom is a three-element antichain-topped set
  // whose cut escapes it).
  CHECK(bottom_distributivity(
      aug(FinitePoset::boolean_algebra(2), family_powerset())));
  CHECK(bottom_distributivity(
      aug(FinitePoset::pentagon_n5(), family_powerset())));
  CHECK(!bottom_distributivity(
      aug(FinitePoset::diamond_m3(), family_powerset())));
  // With no family beyond singletons every polar is a down-set, hence an
  // ideal.
  CHECK(bottom_distributivity(aug(FinitePoset::diamond_m3(), family_empty())));
}

TEST_CASE("truncation strips the least ideal") {
  auto b = FinitePoset::boolean_algebra(2);
  AugmentedPoset ap = aug(b, family_powerset());
  AugmentedPoset tr = truncate(ap);
  CHECK(tr.poset.size() == 3);
  CHECK(tr.family.kind == SubsetFamily::PowersetNonempty);
  CHECK_THROWS(tr.poset.index_of("0"));

  // Truncated cuts agree with cuts computed upstairs, minus the bottom.
  for (Mask m = 1; m < (Mask{1} << tr.poset.size()); ++m) {
    Mask up = 0;
    for_bits(m, [&](int i) { up |= bit(b.index_of(tr.poset.label(i))); });
    Mask expect = cut_delta(b, up) & ~bit(b.index_of("0"));
    Mask got = 0;
    for_bits(cut_delta(tr.poset, m),
             [&](int i) { got |= bit(b.index_of(tr.poset.label(i))); });
    CHECK(got == expect);
  }

  // Unbounded posets truncate to themselves.
  auto a2 = FinitePoset::antichain(2);
  AugmentedPoset ap2 = aug(a2, family_singletons(a2));
  CHECK(truncate(ap2).poset.size() == 2);
}

TEST_CASE("explicit family truncation drops sets that vanish") {
  auto c = FinitePoset::chain(3);
  AugmentedPoset ap =
      aug(c, SubsetFamily::explicit_family({0, bit(0), bit(0) | bit(2)}));
  // Least ideal: {0} via the singleton member.
  CHECK(ideal_bottom(ap) == bit(0));
  AugmentedPoset tr = truncate(ap);
  REQUIRE(tr.family.kind == SubsetFamily::Explicit);
  // {0} vanishes, {} vanishes, {0,2} loses its bottom point.
  CHECK(tr.family.members == std::vector<Mask>{bit(1)});
}

TEST_CASE("dotted family adds the singletons") {
  auto c = FinitePoset::chain(2);
  AugmentedPoset ap = aug(c, family_empty());
  CHECK(dotted_family(ap) == std::vector<Mask>{bit(0), bit(1)});
}

TEST_CASE("builtin family lookup") {
  auto c = FinitePoset::chain(3);
  CHECK(builtin_family("@powerset", c).kind == SubsetFamily::Powerset);
  CHECK(builtin_family("chains", c).members.size() == 7);  // nonempty chains
  CHECK(builtin_family("@singletons", c).members.size() == 3);
  CHECK(builtin_family("@empty", c).members.empty());
  CHECK(builtin_family("@finite", c).members.size() == 8);
  CHECK(builtin_family("@downsets", c).members.size() == 4);
  CHECK_THROWS_AS(builtin_family("@nope", c), RelqError);
}
