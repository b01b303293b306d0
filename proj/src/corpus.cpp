#include "relq/corpus.hpp"

#include <algorithm>
#include <set>

namespace relq {

namespace {

bool is_lattice(const std::vector<Mask>& below, int n) {
  // pairwise joins and meets must exist; bounds follow for n >= 1
  std::vector<Mask> above(n, 0);
  for (int i = 0; i < n; ++i)
    for_bits(below[i], [&](int j) { above[j] |= bit(i); });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Mask ub = above[i] & above[j];
      Mask lb = below[i] & below[j];
      // least upper bound: some u in ub below every member of ub
      bool join = false, meet = false;
      for_bits(ub, [&](int u) { join = join || subset(ub, above[u]); });
      for_bits(lb, [&](int m) { meet = meet || subset(lb, below[m]); });
      if (!join || !meet) return false;
    }
  return n > 0;
}

// Lexicographically least below-mask vector over all relabelings; elements
// may only trade places within equal (|below|, |above|) classes.
std::vector<Mask> canonical_form(const std::vector<Mask>& below, int n) {
  std::vector<Mask> above(n, 0);
  for (int i = 0; i < n; ++i)
    for_bits(below[i], [&](int j) { above[j] |= bit(i); });
  std::vector<std::pair<int, int>> inv(n);
  for (int i = 0; i < n; ++i)
    inv[i] = {popcount(below[i]), popcount(above[i])};

  std::vector<int> perm(n, -1);  // new index -> old index
  std::vector<bool> used(n, false);
  std::vector<Mask> best;
  std::vector<Mask> cur(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    std::vector<int> old_of_new(n, -1);
    for (int p = 0; p < pos; ++p) old_of_new[p] = perm[p];
    for (int old = 0; old < n; ++old) {
      if (used[old]) continue;
      // a canonical labeling lists elements in a linear extension, so the
      // strict down-set of the next element must already be placed
      bool ready = true;
      Mask translated = bit(pos);
      for_bits(below[old] & ~bit(old), [&](int b) {
        int np = -1;
        for (int p = 0; p < pos; ++p)
          if (perm[p] == b) np = p;
        if (np < 0)
          ready = false;
        else
          translated |= bit(np);
      });
      if (!ready) continue;
      perm[pos] = old;
      used[old] = true;
      Mask saved = cur[pos];
      cur[pos] = translated;
      // prune: prefix already worse than the best found
      bool viable = best.empty();
      if (!viable) {
        viable = true;
        for (int p = 0; p <= pos; ++p) {
          if (cur[p] < best[p]) break;
          if (cur[p] > best[p]) {
            viable = false;
            break;
          }
        }
      }
      if (viable) self(self, pos + 1);
      cur[pos] = saved;
      used[old] = false;
      perm[pos] = -1;
    }
  };
  (void)inv;
  rec(rec, 0);
  return best;
}

}  // namespace

std::vector<FinitePoset> lattices_of_size(int n) {
  if (n < 1 || n > 7) throw RelqError("lattice census is bounded by size 7");
  // Grow naturally labeled posets: element i enters above a down-set of the
  // poset on {0..i-1}.
  std::set<std::vector<Mask>> seen;
  std::vector<FinitePoset> out;
  std::vector<Mask> below;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (!is_lattice(below, n)) return;
      if (!seen.insert(canonical_form(below, n)).second) return;
      std::vector<std::string> labels(n);
      for (int k = 0; k < n; ++k) labels[k] = "e" + std::to_string(k);
      out.push_back(FinitePoset::from_below_masks(std::move(labels),
                                                  std::vector<Mask>(below)));
      return;
    }
    for (Mask d = 0; d < bit(i); ++d) {
      bool down = true;
      for_bits(d, [&](int j) {
        if (!subset(below[j], d | bit(i))) down = false;
      });
      if (!down) continue;
      below.push_back(d | bit(i));
      self(self, i + 1);
      below.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const FinitePoset& a, const FinitePoset& b) {
    std::vector<Mask> ba, bb;
    for (int i = 0; i < a.size(); ++i) ba.push_back(a.below(i));
    for (int i = 0; i < b.size(); ++i) bb.push_back(b.below(i));
    return ba < bb;
  });
  return out;
}

Corpus curated_corpus() {
  Corpus c;
  auto add = [&](std::string name, FinitePoset p) {
    c.posets.push_back({std::move(name), std::move(p), "curated"});
  };
  add("CHAIN2", FinitePoset::chain(2));
  add("CHAIN3", FinitePoset::chain(3));
  add("CHAIN4", FinitePoset::chain(4));
  add("CHAIN5", FinitePoset::chain(5));
  add("CHAIN6", FinitePoset::chain(6));
  add("ANTICHAIN2", FinitePoset::antichain(2));
  add("ANTICHAIN3", FinitePoset::antichain(3));
  add("B4", FinitePoset::boolean_algebra(2));
  add("B8", FinitePoset::boolean_algebra(3));
  add("M3", FinitePoset::diamond_m3());
  add("N5", FinitePoset::pentagon_n5());
  // the eight-element boolean algebra used by the idempotency example,
  // structurally B8 on atoms a, b, c
  add("EX91", FinitePoset::boolean_algebra(3));
  // wedge c < a, c < b without a top: distributive at the bottom over finite
  // subsets yet not pseudocomplemented (the polar of c has no greatest member)
  add("VEE", FinitePoset::from_covers({"c", "a", "b"}, {{"c", "a"}, {"c", "b"}}));

  auto add_space = [&](std::string name, ClosureSpace s) {
    c.spaces.push_back({std::move(name), std::move(s), "curated"});
  };
  add_space("DISC2", ClosureSpace::discrete(2));
  add_space("DISC3", ClosureSpace::discrete(3));
  // bounded space on {p, q, r} with overlapping generators
  add_space("PQR", ClosureSpace::from_generators(
                       3, {bit(0) | bit(1), bit(1) | bit(2)}, {"p", "q", "r"}));
  // not T0: two points with identical closures
  add_space("GLUED", ClosureSpace::from_generators(3, {bit(0) | bit(1), 0},
                                                   {"p", "q", "r"}));
  // unbounded, T0, not discrete
  add_space("SIERP",
            ClosureSpace::from_generators(2, {Mask{0}, bit(0)}, {"p", "q"}));
  add_space("PI_B4", principal_ideal_space(FinitePoset::boolean_algebra(2)));
  add_space("PI_CHAIN3", principal_ideal_space(FinitePoset::chain(3)));
  add_space("PI_M3", principal_ideal_space(FinitePoset::diamond_m3()));
  add_space("PI_N5", principal_ideal_space(FinitePoset::pentagon_n5()));
  add_space("PI_CHAIN4", principal_ideal_space(FinitePoset::chain(4)));
  return c;
}

Corpus generate_corpus(int max_size) {
  if (max_size > 7) throw RelqError("lattice census is bounded by size 7");
  Corpus c = curated_corpus();
  for (int n = 1; n <= max_size; ++n) {
    int k = 0;
    for (FinitePoset& p : lattices_of_size(n))
      c.posets.push_back({"L" + std::to_string(n) + "_" + std::to_string(k++),
                          std::move(p),
                          "generated(" + std::to_string(n) + ")"});
  }
  return c;
}

}  // namespace relq
