#include "relq/quantale.hpp"

#include <algorithm>

namespace relq {

Rel relation_product(const Rel& r, const Rel& s) {
  Rel out = rel_empty(r.nl, s.nr);
  for (int x = 0; x < r.nl; ++x)
    for_bits(r.rows[x], [&](int y) { out.rows[x] |= s.rows[y]; });
  return out;
}

Rel principal_downset(const FinitePoset& a, const FinitePoset& b, int x,
                      int y) {
  Rel out = rel_empty(a.size(), b.size());
  for_bits(a.below(x), [&](int x2) { out.rows[x2] = b.below(y); });
  return out;
}

Rel residual_fwd(const FinitePoset& b, const Rel& r, const Rel& t) {
  std::vector<Mask> cols = rel_columns(r);  // cols[y] = r applied backwards
  Rel out = rel_empty(b.size(), t.nr);
  for (int y = 0; y < b.size(); ++y) {
    Mask pre = 0;  // r(down-set of y)
    for_bits(b.below(y), [&](int y2) { pre |= cols[y2]; });
    Mask row = full_mask(t.nr);
    for_bits(pre, [&](int x) { row &= t.rows[x]; });
    out.rows[y] = row;
  }
  return out;
}

Rel residual_bwd(const FinitePoset& b, const Rel& t, const Rel& s) {
  Rel out = rel_empty(t.nl, b.size());
  for (int x = 0; x < t.nl; ++x)
    for (int y = 0; y < b.size(); ++y) {
      Mask img = 0;  // (down-set of y) composed with s
      for_bits(b.below(y), [&](int y2) { img |= s.rows[y2]; });
      if (subset(img, t.rows[x])) out.rows[x] |= bit(y);
    }
  return out;
}

Rel odot(const TensorBase& out_base, const Rel& r, const Rel& s) {
  return out_base.tensor_closure(relation_product(r, s));
}

FiniteQuantale::FiniteQuantale(std::vector<Rel> elems, const BinOp& mult,
                               const BinOp& join)
    : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), [](const Rel& a, const Rel& b) {
    int sa = rel_size(a), sb = rel_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const int n = size();
  if (n == 0) throw RelqError("quantale needs at least one element");
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  leq_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel_subset(elems_[i], elems_[j]))
        leq_[i][static_cast<std::size_t>(j) >> 6] |= std::uint64_t{1}
                                                     << (j & 63);
  mult_.assign(n, std::vector<std::uint16_t>(n));
  join_.assign(n, std::vector<std::uint16_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mult_[i][j] = static_cast<std::uint16_t>(index_of(mult(elems_[i], elems_[j])));
      join_[i][j] = static_cast<std::uint16_t>(index_of(join(elems_[i], elems_[j])));
    }
}

int FiniteQuantale::index_of(const Rel& r) const {
  auto cmp = [](const Rel& a, const Rel& b) {
    int sa = rel_size(a), sb = rel_size(b);
    return sa != sb ? sa < sb : a < b;
  };
  auto it = std::lower_bound(elems_.begin(), elems_.end(), r, cmp);
  if (it == elems_.end() || !(*it == r))
    throw RelqError("relation escapes the quantale's element family");
  return static_cast<int>(it - elems_.begin());
}

std::optional<int> FiniteQuantale::meet(int i, int j) const {
  int best = -1;
  for (int k = 0; k < size(); ++k)
    if (leq(k, i) && leq(k, j) && (best < 0 || leq(best, k))) best = k;
  if (best < 0) return std::nullopt;
  for (int k = 0; k < size(); ++k)
    if (leq(k, i) && leq(k, j) && !leq(k, best)) return std::nullopt;
  return best;
}

int FiniteQuantale::residual_fwd(int x, int z) const {
  int acc = bottom();
  for (int y = 0; y < size(); ++y)
    if (leq(mult(x, y), z)) acc = join(acc, y);
  return acc;
}

int FiniteQuantale::residual_bwd(int x, int z) const {
  int acc = bottom();
  for (int y = 0; y < size(); ++y)
    if (leq(mult(y, x), z)) acc = join(acc, y);
  return acc;
}

namespace {

std::string idx(const FiniteQuantale& q, int i) {
  return "R" + std::to_string(i) + "(" + std::to_string(rel_size(q.elem(i))) +
         " pairs)";
}

}  // namespace

LawReport quantale_laws(const FiniteQuantale& q) {
  LawReport rep;
  const int n = q.size();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (rep.witness.empty()) rep.witness = std::move(msg);
  };
  for (int i = 0; i < n && rep.complete; ++i)
    for (int j = 0; j < n; ++j)
      if (!q.meet(i, j)) {
        fail(rep.complete, idx(q, i) + " and " + idx(q, j) + " lack a meet");
        break;
      }
  // distribution over the empty join: bottom annihilates
  for (int i = 0; i < n; ++i) {
    if (q.mult(i, q.bottom()) != q.bottom())
      fail(rep.prequantale, idx(q, i) + " . 0 != 0");
    if (q.mult(q.bottom(), i) != q.bottom())
      fail(rep.prequantale, "0 . " + idx(q, i) + " != 0");
  }
  // distribution over binary joins; with the empty join this gives all
  // finite (= all) joins by induction
  for (int a = 0; a < n && rep.prequantale; ++a)
    for (int b = 0; b < n && rep.prequantale; ++b)
      for (int c = 0; c < n; ++c) {
        if (q.mult(a, q.join(b, c)) != q.join(q.mult(a, b), q.mult(a, c))) {
          fail(rep.prequantale, idx(q, a) + " . (" + idx(q, b) + " v " +
                                    idx(q, c) + ") fails distribution");
          break;
        }
        if (q.mult(q.join(b, c), a) != q.join(q.mult(b, a), q.mult(c, a))) {
          fail(rep.prequantale, "(" + idx(q, b) + " v " + idx(q, c) + ") . " +
                                    idx(q, a) + " fails distribution");
          break;
        }
      }
  rep.quantale = rep.prequantale;
  for (int a = 0; a < n && rep.quantale; ++a)
    for (int b = 0; b < n && rep.quantale; ++b)
      for (int c = 0; c < n; ++c)
        if (q.mult(q.mult(a, b), c) != q.mult(a, q.mult(b, c))) {
          fail(rep.quantale, "associativity fails at " + idx(q, a) + ", " +
                                 idx(q, b) + ", " + idx(q, c));
          break;
        }
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int i = 0; i < n && unit; ++i)
      unit = q.mult(e, i) == i && q.mult(i, e) == i;
    if (unit) {
      rep.unit = e;
      break;
    }
  }
  return rep;
}

NucleusReport nucleus_laws(const FiniteQuantale& q, const std::vector<int>& j) {
  NucleusReport rep;
  const int n = q.size();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (rep.witness.empty()) rep.witness = std::move(msg);
  };
  for (int a = 0; a < n; ++a) {
    if (!q.leq(a, j[a])) fail(rep.extensive, "j not extensive at " + idx(q, a));
    if (j[j[a]] != j[a]) fail(rep.idempotent, "j not idempotent at " + idx(q, a));
    for (int b = 0; b < n; ++b)
      if (q.leq(a, b) && !q.leq(j[a], j[b]))
        fail(rep.isotone, "j not isotone at " + idx(q, a) + " <= " + idx(q, b));
  }
  rep.prenucleus = rep.isotone && rep.extensive;
  for (int a = 0; a < n && rep.prenucleus; ++a)
    for (int b = 0; b < n; ++b)
      if (!q.leq(q.mult(j[a], b), j[q.mult(a, b)]) ||
          !q.leq(q.mult(a, j[b]), j[q.mult(a, b)])) {
        fail(rep.prenucleus, "prenucleus law fails at " + idx(q, a) + ", " +
                                 idx(q, b));
        break;
      }
  rep.nucleus = rep.isotone && rep.extensive && rep.idempotent;
  for (int a = 0; a < n && rep.nucleus; ++a)
    for (int b = 0; b < n; ++b)
      if (!q.leq(q.mult(j[a], j[b]), j[q.mult(a, b)])) {
        fail(rep.nucleus,
             "nucleus law fails at " + idx(q, a) + ", " + idx(q, b));
        break;
      }
  return rep;
}

LawReport quotient_laws(const FiniteQuantale& q, const std::vector<int>& j) {
  LawReport rep;
  const int n = q.size();
  std::vector<int> fix;
  for (int i = 0; i < n; ++i)
    if (j[i] == i) fix.push_back(i);
  if (fix.empty()) {
    rep.complete = rep.prequantale = rep.quantale = false;
    rep.witness = "no fixpoints";
    return rep;
  }
  // meet-closedness in q
  for (int a : fix)
    for (int b : fix) {
      auto m = q.meet(a, b);
      if (!m || j[*m] != *m) {
        rep.complete = false;
        rep.witness = "fixpoints not meet-closed at " + idx(q, a) + ", " +
                      idx(q, b);
        return rep;
      }
    }
  // induced multiplication: least fixpoint above the product
  auto induced = [&](int a, int b) {
    int best = -1;
    for (int s : fix)
      if (q.leq(q.mult(a, b), s) && (best < 0 || q.leq(s, best))) best = s;
    return best;  // exists: top of q is a fixpoint iff j[top] == top... or -1
  };
  auto sub_join = [&](int a, int b) {
    int best = -1;
    for (int s : fix)
      if (q.leq(a, s) && q.leq(b, s) && (best < 0 || q.leq(s, best))) best = s;
    return best;
  };
  std::vector<Rel> elems;
  for (int i : fix) elems.push_back(q.elem(i));
  try {
    FiniteQuantale sub(
        elems,
        [&](const Rel& a, const Rel& b) {
          int r = induced(q.index_of(a), q.index_of(b));
          if (r < 0) throw RelqError("no least fixpoint above a product");
          return q.elem(r);
        },
        [&](const Rel& a, const Rel& b) {
          int r = sub_join(q.index_of(a), q.index_of(b));
          if (r < 0) throw RelqError("no least fixpoint joining a pair");
          return q.elem(r);
        });
    LawReport inner = quantale_laws(sub);
    inner.complete = inner.complete && rep.complete;
    return inner;
  } catch (const RelqError& e) {
    rep.complete = rep.prequantale = rep.quantale = false;
    rep.witness = e.what();
    return rep;
  }
}

namespace {

bool preclosure_at(const TensorBase& tb, const Rel& r, bool close,
                   std::string* witness) {
  const FinitePoset& lp = tb.left().poset;
  const FinitePoset& rp = tb.right().poset;
  auto t = [&](const Rel& x) {
    return close ? tb.tensor_closure(x) : tb.t_step(x);
  };
  Rel tr = t(r);
  for (int b = 0; b < rp.size(); ++b)
    for (int c = 0; c < rp.size(); ++c) {
      Rel p = principal_downset(rp, rp, b, c);
      if (!rel_subset(relation_product(tr, p), t(relation_product(r, p)))) {
        if (witness)
          *witness = "right multiplication by the principal down-set of (" +
                     rp.label(b) + ", " + rp.label(c) + ") escapes";
        return false;
      }
    }
  for (int b = 0; b < lp.size(); ++b)
    for (int c = 0; c < lp.size(); ++c) {
      Rel p = principal_downset(lp, lp, b, c);
      if (!rel_subset(relation_product(p, tr), t(relation_product(p, r)))) {
        if (witness)
          *witness = "left multiplication by the principal down-set of (" +
                     lp.label(b) + ", " + lp.label(c) + ") escapes";
        return false;
      }
    }
  return true;
}

}  // namespace

bool prenucleus_at(const TensorBase& tb, const Rel& r, std::string* witness) {
  return preclosure_at(tb, r, false, witness);
}

bool nucleus_at(const TensorBase& tb, const Rel& r, std::string* witness) {
  return preclosure_at(tb, r, true, witness);
}

bool is_antitone(const FinitePoset& a, const FinitePoset& b,
                 const std::vector<int>& f) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !b.leq(f[y], f[x])) return false;
  return true;
}

bool is_galois_map(const FinitePoset& a, const FinitePoset& b,
                   const std::vector<int>& f) {
  // f(join X) == meet f[X] for every subset X
  if (a.size() > 20) throw RelqError("carrier too large for subset scan");
  for (Mask xs = 0; xs < bit(a.size()); ++xs) {
    auto jx = join_of(a, xs);
    Mask img = 0;
    for_bits(xs, [&](int x) { img |= bit(f[x]); });
    auto mf = meet_of(b, img);
    if (!jx || !mf) return false;
    if (f[*jx] != *mf) return false;
  }
  return true;
}

std::vector<std::vector<int>> enumerate_antitone_maps(const FinitePoset& a,
                                                      const FinitePoset& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(a.size(), 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == a.size()) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < b.size(); ++v) {
      f[x] = v;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (a.leq(y, x) && !b.leq(v, f[y])) ok = false;
        if (a.leq(x, y) && !b.leq(f[y], v)) ok = false;
      }
      if (ok) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rel galois_compose_relation(const FinitePoset& b, const FinitePoset& c,
                            const std::vector<int>& f,
                            const std::vector<int>& g) {
  Rel out = rel_empty(static_cast<int>(f.size()), c.size());
  for (int x = 0; x < out.nl; ++x)
    for_bits(b.truncated_carrier() & b.below(f[x]),
             [&](int y) { out.rows[x] |= c.below(g[y]); });
  return out;
}

std::vector<int> galois_compose(const FinitePoset& a, const FinitePoset& b,
                                const FinitePoset& c, const std::vector<int>& f,
                                const std::vector<int>& g) {
  if (!a.props().complete_lattice || !b.props().complete_lattice ||
      !c.props().complete_lattice)
    throw RelqError("galois_compose requires complete lattices");
  Rel t = galois_compose_relation(b, c, f, g);
  TensorBase base({a, family_powerset()}, {c, family_powerset()});
  Rel e = base.tensor_closure(t);
  std::vector<int> out(a.size());
  for (int x = 0; x < a.size(); ++x) {
    auto j = join_of(c, e.rows[x]);
    if (!j) throw RelqError("composite value join missing");
    out[x] = *j;
  }
  return out;
}

}  // namespace relq
