#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "relq/tensor.hpp"

#include <algorithm>
#include <set>

using namespace relq;

namespace {

AugmentedPoset pow(FinitePoset p) { return {std::move(p), family_powerset()}; }

Rel rel_of(const TensorBase& tb, std::vector<std::pair<int, int>> pairs) {
  Rel r = rel_empty(tb.nl(), tb.nr());
  for (auto [x, y] : pairs) rel_add(r, x, y);
  return r;
}

}  // namespace

TEST_CASE("truncated three-chain square has exactly six tensors") {
  TensorBase tb = TensorBase::truncated(pow(FinitePoset::chain(3)),
                                        pow(FinitePoset::chain(3)));
  // carrier {1,2} -> indices {0,1}
  REQUIRE(tb.nl() == 2);
  std::vector<Rel> expect = {
      rel_of(tb, {}),
      rel_of(tb, {{0, 0}}),
      rel_of(tb, {{0, 0}, {0, 1}}),
      rel_of(tb, {{0, 0}, {1, 0}}),
      rel_of(tb, {{0, 0}, {0, 1}, {1, 0}}),
      rel_of(tb, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
  };
  std::vector<Rel> got = tb.enumerate_tensors();
  CHECK(std::set<Rel>(got.begin(), got.end()) ==
        std::set<Rel>(expect.begin(), expect.end()));
  CHECK(tb.enumerate_tensors_filter() == got);
  for (const Rel& r : got) {
    CHECK(tb.is_tensor(r));
    CHECK(tb.is_tensor_rect(r));
  }
  // {(2,2)} alone is not even a down-set; its closure is the full square
  Rel bad = rel_of(tb, {{1, 1}});
  CHECK_FALSE(tb.is_downset(bad));
  CHECK_FALSE(tb.is_tensor(bad));
  CHECK(tb.tensor_closure(bad) == expect[5]);
}

TEST_CASE("pure truncated tensors are principal down-sets") {
  TensorBase tb = TensorBase::truncated(pow(FinitePoset::boolean_algebra(2)),
                                        pow(FinitePoset::pentagon_n5()));
  for (int x = 0; x < tb.nl(); ++x)
    for (int y = 0; y < tb.nr(); ++y) {
      Rel expect = rel_empty(tb.nl(), tb.nr());
      for_bits(tb.left().poset.below(x),
               [&](int x2) { expect.rows[x2] = tb.right().poset.below(y); });
      CHECK(tb.pure_tensor(x, y) == expect);
    }
  CHECK(tb.bottom_tensor() == rel_empty(tb.nl(), tb.nr()));
}

TEST_CASE("square of four-element boolean algebra matches relations on two points") {
  TensorBase tb = TensorBase::truncated(pow(FinitePoset::boolean_algebra(2)),
                                        pow(FinitePoset::boolean_algebra(2)));
  std::vector<Rel> got = tb.enumerate_tensors();
  CHECK(got.size() == 16);
  CHECK(tb.enumerate_tensors_filter() == got);
  FinitePoset fam = tensor_family_poset(got);
  CHECK(fam.props().complete_lattice);
  CHECK(fam.props().boolean);
}

TEST_CASE("bottom of a full tensor product by family emptiness") {
  FinitePoset c3 = FinitePoset::chain(3);
  AugmentedPoset with_empty = pow(c3);
  AugmentedPoset no_empty = {c3, family_singletons(c3)};

  // neither family contains the empty set: bottom tensor is empty
  TensorBase nn(no_empty, no_empty);
  CHECK(nn.bottom_tensor() == rel_empty(3, 3));

  // empty set on the left only: cut of the empty set times the whole carrier
  TensorBase en(with_empty, no_empty);
  Rel left_strip = rel_empty(3, 3);
  left_strip.rows[0] = full_mask(3);
  CHECK(en.bottom_tensor() == left_strip);

  // and symmetrically on the right
  TensorBase ne(no_empty, with_empty);
  Rel bottom_strip = rel_empty(3, 3);
  for (int x = 0; x < 3; ++x) bottom_strip.rows[x] = bit(0);
  CHECK(ne.bottom_tensor() == bottom_strip);

  // both: the union of the two strips
  TensorBase ee(with_empty, with_empty);
  CHECK(ee.bottom_tensor() == rel_union(left_strip, bottom_strip));
}

TEST_CASE("down-set enumeration agrees with direct counts") {
  AugmentedPoset c2 = pow(FinitePoset::chain(2));
  TensorBase tb(c2, c2);
  CHECK(tb.enumerate_downsets().size() == 6);  // down-sets of the 2x2 grid

  AugmentedPoset a2 = pow(FinitePoset::antichain(2));
  TensorBase ta(a2, a2);
  CHECK(ta.enumerate_downsets().size() == 16);
  for (const Rel& r : tb.enumerate_downsets()) CHECK(tb.is_downset(r));
}

TEST_CASE("enumeration guard throws") {
  AugmentedPoset b3 = pow(FinitePoset::boolean_algebra(3));
  TensorBase tb = TensorBase::truncated(b3, b3);
  CHECK_THROWS_AS((void)tb.enumerate_tensors(7), GuardExceeded);
}

TEST_CASE("truncation strip and extend are mutually inverse") {
  AugmentedPoset b4 = pow(FinitePoset::boolean_algebra(2));
  Truncation ta = make_truncation(b4), tb = make_truncation(b4);
  TensorBase full(b4, b4);
  TensorBase trunc(ta.truncated, tb.truncated);

  std::vector<Rel> fulls = full.enumerate_tensors();
  std::vector<Rel> truncs = trunc.enumerate_tensors();
  CHECK(fulls.size() == truncs.size());

  std::set<Rel> seen;
  for (const Rel& t : truncs) {
    Rel up = truncation_extend(full, trunc, ta, tb, t);
    CHECK(full.is_tensor(up));
    seen.insert(up);
    CHECK(truncation_strip(full, trunc, ta, tb, up) == t);
  }
  CHECK(seen == std::set<Rel>(fulls.begin(), fulls.end()));
  for (const Rel& t : fulls)
    CHECK(truncation_extend(full, trunc, ta, tb,
                            truncation_strip(full, trunc, ta, tb, t)) == t);
}

TEST_CASE("tensors of a complete lattice square encode antitone residuated maps") {
  AugmentedPoset n5 = pow(FinitePoset::pentagon_n5());
  Truncation ta = make_truncation(n5), tb = make_truncation(n5);
  TensorBase trunc(ta.truncated, tb.truncated);
  const FinitePoset& p = n5.poset;
  for (const Rel& t : trunc.enumerate_tensors()) {
    std::vector<int> f = tensor_to_map(ta, tb, t);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) CHECK(p.leq(f[y], f[x]));  // antitone
    CHECK(map_to_tensor(ta, tb, f) == t);
  }
}

TEST_CASE("space tensors of discrete spaces are all relations") {
  SpaceTensorBase sb(ClosureSpace::discrete(2), ClosureSpace::discrete(2));
  CHECK(sb.enumerate_tensors().size() == 16);
  for (const Rel& r : sb.enumerate_tensors()) CHECK(sb.is_tensor(r));
}

TEST_CASE("space tensor closure alternates slice closures") {
  // ground {p,q,r}; closed sets generated by {p,q} and {q,r}
  ClosureSpace s = ClosureSpace::from_generators(
      3, {bit(0) | bit(1), bit(1) | bit(2)}, {"p", "q", "r"});
  SpaceTensorBase sb(s, s);
  Rel single = rel_empty(3, 3);
  rel_add(single, 0, 2);
  Rel t = sb.tensor_closure(single);
  CHECK(sb.is_tensor(t));
  CHECK(rel_subset(single, t));
  CHECK(rel_subset(sb.bottom_tensor(), t));
  for (const Rel& r : sb.enumerate_tensors())
    if (rel_subset(single, r)) CHECK(rel_subset(t, r));  // least such tensor
}

TEST_CASE("h is a bijection onto the tensors of the closed-set lattices") {
  ClosureSpace s = ClosureSpace::from_generators(
      3, {bit(0) | bit(1), bit(1) | bit(2)}, {"p", "q", "r"});
  SpaceTensorBase sb(s, s);
  TensorBase cb = closed_lattice_base(sb);

  std::vector<Rel> space = sb.enumerate_tensors();
  std::vector<Rel> lattice = cb.enumerate_tensors();
  std::set<Rel> images;
  for (const Rel& t : space) {
    Rel h = space_h_iso(sb, cb, t);
    CHECK(cb.is_tensor(h));
    images.insert(h);
    CHECK(space_h_inv(sb, cb, h) == t);
    // h is an order isomorphism onto its image
    for (const Rel& u : space)
      CHECK(rel_subset(t, u) == rel_subset(h, space_h_iso(sb, cb, u)));
  }
  CHECK(images == std::set<Rel>(lattice.begin(), lattice.end()));
}

TEST_CASE("separately continuous maps extend along pure tensors") {
  ClosureSpace s = ClosureSpace::discrete(2);
  SpaceTensorBase sb(s, s);
  FinitePoset c = FinitePoset::boolean_algebra(2);
  // f(x, y) = atom a if x == y, else atom b; every map into a discrete-ish
  // codomain from discrete spaces is separately continuous
  BimorphismTable f{{{c.index_of("a"), c.index_of("b")},
                     {c.index_of("b"), c.index_of("a")}}};
  check_separately_continuous(sb, c, f);
  CHECK(universal_extension(sb, c, f, sb.pure_tensor(0, 0)) ==
        c.index_of("a"));
  CHECK(universal_extension(sb, c, f, sb.pure_tensor(0, 1)) ==
        c.index_of("b"));
  Rel both = rel_union(sb.pure_tensor(0, 0), sb.pure_tensor(0, 1));
  CHECK(universal_extension(sb, c, f, both) == c.index_of("ab"));
  CHECK(universal_extension(sb, c, f, rel_empty(2, 2)) == c.index_of("0"));
}

TEST_CASE("rectangle and slice characterisations of tensors coincide") {
  std::vector<AugmentedPoset> bases = {
      pow(FinitePoset::chain(3)), pow(FinitePoset::boolean_algebra(2)),
      pow(FinitePoset::diamond_m3()),
      {FinitePoset::pentagon_n5(), family_downsets(FinitePoset::pentagon_n5())}};
  for (const auto& l : bases)
    for (const auto& r : bases) {
      TensorBase tb = TensorBase::truncated(l, r);
      for (const Rel& d : tb.enumerate_downsets(100000))
        CHECK(tb.is_tensor(d) == tb.is_tensor_rect(d));
    }
}
