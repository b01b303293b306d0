#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "relq/quantale.hpp"

#include <algorithm>

using namespace relq;

namespace {

AugmentedPoset pow(FinitePoset p) { return {std::move(p), family_powerset()}; }

FiniteQuantale tensor_quantale(const TensorBase& tb) {
  return FiniteQuantale(
      tb.enumerate_tensors(),
      [&](const Rel& a, const Rel& b) { return odot(tb, a, b); },
      [&](const Rel& a, const Rel& b) {
        return tb.tensor_closure(rel_union(a, b));
      });
}

FiniteQuantale downset_quantale(const TensorBase& tb, std::size_t guard = 100000) {
  return FiniteQuantale(tb.enumerate_downsets(guard), relation_product,
                        rel_union);
}

Rel rel_of(int nl, int nr, std::vector<std::pair<int, int>> pairs) {
  Rel r = rel_empty(nl, nr);
  for (auto [x, y] : pairs) rel_add(r, x, y);
  return r;
}

}  // namespace

TEST_CASE("multiplication table of the truncated three-chain square") {
  TensorBase tb = TensorBase::truncated(pow(FinitePoset::chain(3)),
                                        pow(FinitePoset::chain(3)));
  FiniteQuantale q = tensor_quantale(tb);
  REQUIRE(q.size() == 6);
  // elements on the carrier {1, 2} -> indices {0, 1}
  int r0 = q.index_of(rel_of(2, 2, {}));
  int r1 = q.index_of(rel_of(2, 2, {{0, 0}}));
  int r2 = q.index_of(rel_of(2, 2, {{0, 0}, {0, 1}}));
  int r3 = q.index_of(rel_of(2, 2, {{0, 0}, {1, 0}}));
  int r4 = q.index_of(rel_of(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
  int r5 = q.index_of(rel_of(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  int all[6] = {r0, r1, r2, r3, r4, r5};
  int expect[6][6] = {
      {r0, r0, r0, r0, r0, r0}, {r0, r1, r2, r1, r2, r2},
      {r0, r1, r2, r1, r2, r2}, {r0, r3, r5, r3, r5, r5},
      {r0, r3, r5, r3, r5, r5}, {r0, r3, r5, r3, r5, r5},
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(q.mult(all[i], all[j]) == expect[i][j]);

  LawReport rep = quantale_laws(q);
  CHECK(rep.complete);
  CHECK(rep.quantale);
  CHECK_FALSE(rep.unit.has_value());             // non-unital
  CHECK(q.mult(r1, r2) != q.mult(r2, r1));       // non-commutative
}

TEST_CASE("full three-chain square collapses under the closed product") {
  AugmentedPoset c3 = pow(FinitePoset::chain(3));
  TensorBase tb(c3, c3);
  std::vector<Rel> tensors = tb.enumerate_tensors();
  CHECK(tensors.size() == 6);
  Rel whole = rel_full(3, 3);
  for (const Rel& r : tensors)
    for (const Rel& s : tensors) CHECK(odot(tb, r, s) == whole);
  // hence the bottom does not annihilate and no quantale structure arises
  FiniteQuantale q = tensor_quantale(tb);
  CHECK_FALSE(quantale_laws(q).prequantale);
}

TEST_CASE("closed-form residuals satisfy the adjunctions") {
  for (FinitePoset base :
       {FinitePoset::chain(4), FinitePoset::pentagon_n5()}) {
    FinitePoset p = base.restrict(base.truncated_carrier());
    TensorBase tb(pow(p), pow(p));
    std::vector<Rel> down = tb.enumerate_downsets();
    for (const Rel& r : down)
      for (const Rel& t : down) {
        Rel fwd = residual_fwd(p, r, t);
        Rel bwd = residual_bwd(p, t, r);
        CHECK(tb.is_downset(fwd));
        CHECK(tb.is_downset(bwd));
        for (const Rel& s : down) {
          bool under = rel_subset(relation_product(r, s), t);
          CHECK(under == rel_subset(s, fwd));
          CHECK(rel_subset(relation_product(s, r), t) == rel_subset(s, bwd));
        }
      }
  }
}

TEST_CASE("generic residuals agree with the closed forms on a down-set quantale") {
  FinitePoset p = FinitePoset::chain(4).restrict(
      FinitePoset::chain(4).truncated_carrier());
  TensorBase tb(pow(p), pow(p));
  FiniteQuantale q = downset_quantale(tb);
  CHECK(q.size() == 20);
  LawReport rep = quantale_laws(q);
  CHECK(rep.complete);
  CHECK(rep.quantale);
  CHECK_FALSE(rep.unit.has_value());  // the chain is not discrete
  for (int x = 0; x < q.size(); ++x)
    for (int z = 0; z < q.size(); ++z) {
      CHECK(q.residual_fwd(x, z) ==
            q.index_of(residual_fwd(p, q.elem(x), q.elem(z))));
      CHECK(q.residual_bwd(x, z) ==
            q.index_of(residual_bwd(p, q.elem(z), q.elem(x))));
    }
}

TEST_CASE("down-set quantale over a discrete carrier is unital") {
  FinitePoset p = FinitePoset::antichain(2);
  TensorBase tb(pow(p), pow(p));
  FiniteQuantale q = downset_quantale(tb);
  CHECK(q.size() == 16);
  LawReport rep = quantale_laws(q);
  CHECK(rep.quantale);
  REQUIRE(rep.unit.has_value());
  CHECK(q.elem(*rep.unit) == rel_of(2, 2, {{0, 0}, {1, 1}}));
}

TEST_CASE("tensor closure is a nucleus on down-sets over a pseudocomplemented chain") {
  TensorBase tb = TensorBase::truncated(pow(FinitePoset::chain(4)),
                                        pow(FinitePoset::chain(4)));
  FiniteQuantale q = downset_quantale(tb);
  std::vector<int> j(q.size());
  for (int i = 0; i < q.size(); ++i)
    j[i] = q.index_of(tb.tensor_closure(q.elem(i)));
  NucleusReport rep = nucleus_laws(q, j);
  CHECK(rep.nucleus);
  CHECK(rep.prenucleus);
  // the quantic quotient is the tensor family with the closed product
  LawReport quot = quotient_laws(q, j);
  CHECK(quot.quantale);
  std::size_t fix = 0;
  for (int i = 0; i < q.size(); ++i) fix += j[i] == i;
  CHECK(fix == tb.enumerate_tensors().size());
  // the per-element reduction agrees with the tabulated laws
  for (int i = 0; i < q.size(); ++i) {
    CHECK(prenucleus_at(tb, q.elem(i), nullptr));
    CHECK(nucleus_at(tb, q.elem(i), nullptr));
  }
}

TEST_CASE("tensor closure fails the nucleus law over a non-pseudocomplemented lattice") {
  FinitePoset m3 = FinitePoset::diamond_m3();
  CHECK_FALSE(m3.props().pseudocomplemented);
  TensorBase tb = TensorBase::truncated(pow(m3), pow(m3));
  bool all_hold = true;
  std::string witness;
  for (const Rel& r : tb.enumerate_downsets())
    if (!nucleus_at(tb, r, &witness)) {
      all_hold = false;
      break;
    }
  CHECK_FALSE(all_hold);
  CHECK_FALSE(witness.empty());
}

TEST_CASE("galois composition on chains matches the step-function closed form") {
  FinitePoset c = FinitePoset::chain(4);
  std::vector<std::vector<int>> maps = enumerate_antitone_maps(c, c);
  CHECK(maps.size() == 35);  // weakly decreasing 4-tuples over a 4-chain
  const int top = 3;
  for (const auto& f : maps)
    for (const auto& g : maps) {
      std::vector<int> h = galois_compose(c, c, c, f, g);
      CHECK(is_galois_map(c, c, h));
      int r = 0, s = 0;
      for (int x = 0; x < c.size(); ++x)
        if (f[x] > 0) r = std::max(r, x);
      for (int y = 1; y < c.size(); ++y) s = std::max(s, g[y]);
      for (int x = 0; x < c.size(); ++x) {
        int expect = x == 0 ? top : (x <= r && f[0] > 0 ? s : 0);
        // when f is constantly bottom the generating relation is empty
        if (f[0] == 0) expect = x == 0 ? top : 0;
        CHECK(h[x] == expect);
      }
    }
}

TEST_CASE("galois maps of a boolean algebra biject with truncated tensors") {
  FinitePoset b4 = FinitePoset::boolean_algebra(2);
  std::size_t galois = 0;
  for (const auto& f : enumerate_antitone_maps(b4, b4))
    galois += is_galois_map(b4, b4, f);
  CHECK(galois == 16);

  AugmentedPoset ap = pow(b4);
  Truncation ta = make_truncation(ap), tb = make_truncation(ap);
  TensorBase trunc(ta.truncated, tb.truncated);
  for (const Rel& t : trunc.enumerate_tensors())
    CHECK(is_galois_map(b4, b4, tensor_to_map(ta, tb, t)));
}
