#include "relq/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace relq {

Rel rel_empty(int nl, int nr) { return {nl, nr, std::vector<Mask>(nl, 0)}; }

Rel rel_full(int nl, int nr) {
  return {nl, nr, std::vector<Mask>(nl, full_mask(nr))};
}

Rel rel_union(const Rel& a, const Rel& b) {
  Rel out = a;
  for (int x = 0; x < a.nl; ++x) out.rows[x] |= b.rows[x];
  return out;
}

Rel rel_intersect(const Rel& a, const Rel& b) {
  Rel out = a;
  for (int x = 0; x < a.nl; ++x) out.rows[x] &= b.rows[x];
  return out;
}

bool rel_subset(const Rel& a, const Rel& b) {
  for (int x = 0; x < a.nl; ++x)
    if (!subset(a.rows[x], b.rows[x])) return false;
  return true;
}

int rel_size(const Rel& r) {
  int n = 0;
  for (Mask m : r.rows) n += popcount(m);
  return n;
}

Rel rel_transpose(const Rel& r) {
  Rel out = rel_empty(r.nr, r.nl);
  for (int x = 0; x < r.nl; ++x)
    for_bits(r.rows[x], [&](int y) { out.rows[y] |= bit(x); });
  return out;
}

std::vector<Mask> rel_columns(const Rel& r) {
  std::vector<Mask> cols(r.nr, 0);
  for (int x = 0; x < r.nl; ++x)
    for_bits(r.rows[x], [&](int y) { cols[y] |= bit(x); });
  return cols;
}

std::vector<std::pair<int, int>> rel_pairs(const Rel& r) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < r.nl; ++x)
    for_bits(r.rows[x], [&](int y) { out.emplace_back(x, y); });
  return out;
}

std::size_t tensor_guard() {
  if (const char* env = std::getenv("RELQ_MAX_TENSORS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 4096;
}

Truncation make_truncation(const AugmentedPoset& ap) {
  Truncation t{ap, truncate(ap), 0, {}, {}};
  const Mask bot = ideal_bottom(ap);
  t.kept = ap.poset.carrier() & ~bot;
  t.new_of_old.assign(ap.poset.size(), -1);
  for_bits(t.kept, [&](int i) {
    t.new_of_old[i] = static_cast<int>(t.old_of_new.size());
    t.old_of_new.push_back(i);
  });
  return t;
}

TensorBase::TensorBase(AugmentedPoset left, AugmentedPoset right)
    : l_(std::move(left)), r_(std::move(right)) {
  dotted_l_ = dotted_family(l_);
  dotted_r_ = dotted_family(r_);
  delta_l_.reserve(dotted_l_.size());
  for (Mask m : dotted_l_) delta_l_.push_back(cut_delta(l_.poset, m));
  delta_r_.reserve(dotted_r_.size());
  for (Mask m : dotted_r_) delta_r_.push_back(cut_delta(r_.poset, m));
}

TensorBase TensorBase::truncated(const AugmentedPoset& l,
                                 const AugmentedPoset& r) {
  return TensorBase(truncate(l), truncate(r));
}

bool TensorBase::is_downset(const Rel& r) const {
  for (int x = 0; x < nl(); ++x) {
    if (down_closure(r_.poset, r.rows[x]) != r.rows[x]) return false;
    for (int x2 = 0; x2 < nl(); ++x2)
      if (l_.poset.leq(x2, x) && !subset(r.rows[x], r.rows[x2])) return false;
  }
  return true;
}

Rel TensorBase::down_close(const Rel& r) const {
  Rel out = rel_empty(nl(), nr());
  for (int x = 0; x < nl(); ++x) {
    Mask dn = down_closure(r_.poset, r.rows[x]);
    for_bits(l_.poset.below(x), [&](int x2) { out.rows[x2] |= dn; });
  }
  return out;
}

Mask TensorBase::step_left(Mask c) const {
  Mask out = 0;
  for (std::size_t i = 0; i < dotted_l_.size(); ++i)
    if (subset(dotted_l_[i], c)) out |= delta_l_[i];
  return out;
}

Mask TensorBase::step_right(Mask c) const {
  Mask out = 0;
  for (std::size_t i = 0; i < dotted_r_.size(); ++i)
    if (subset(dotted_r_[i], c)) out |= delta_r_[i];
  return out;
}

Mask TensorBase::ideal_left(Mask c) const { return ideal_closure(l_, c); }
Mask TensorBase::ideal_right(Mask c) const { return ideal_closure(r_, c); }

bool TensorBase::is_tensor(const Rel& r) const {
  for (int x = 0; x < nl(); ++x)
    if (!is_ideal(r_, r.rows[x])) return false;
  for (Mask col : rel_columns(r))
    if (!is_ideal(l_, col)) return false;
  return true;
}

Rel TensorBase::t_step(const Rel& r) const {
  Rel out = rel_empty(nl(), nr());
  for (std::size_t i = 0; i < dotted_l_.size(); ++i) {
    // Common row of X: the v with X x {v} inside r; empty X admits all v.
    Mask common = full_mask(nr());
    for_bits(dotted_l_[i], [&](int x) { common &= r.rows[x]; });
    Mask d = step_right(common);
    if (d == 0) continue;
    for_bits(delta_l_[i], [&](int x) { out.rows[x] |= d; });
  }
  return out;
}

Rel TensorBase::tensor_closure(const Rel& r) const {
  Rel cur = r;
  for (;;) {
    Rel next = t_step(cur);
    // t is extensive only on what it can see; keep the input pairs so that
    // closure starts from r itself.
    next = rel_union(next, r);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Rel TensorBase::pure_tensor(int x, int y) const {
  Rel r = rel_empty(nl(), nr());
  rel_add(r, x, y);
  return tensor_closure(r);
}

Rel TensorBase::bottom_tensor() const {
  return tensor_closure(rel_empty(nl(), nr()));
}

std::vector<Rel> TensorBase::enumerate_tensors(std::size_t guard) const {
  std::set<Rel> seen;
  std::vector<Rel> work;
  auto push = [&](Rel r) {
    if (seen.insert(r).second) {
      if (seen.size() > guard) throw GuardExceeded("tensor enumeration", guard);
      work.push_back(std::move(r));
    }
  };
  push(bottom_tensor());
  for (int x = 0; x < nl(); ++x)
    for (int y = 0; y < nr(); ++y) push(pure_tensor(x, y));
  // Close under binary joins; pure tensors are join-dense, so this reaches
  // every tensor.
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      push(tensor_closure(rel_union(work[i], work[j])));
  std::vector<Rel> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) {
    int sa = rel_size(a), sb = rel_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::vector<Rel> TensorBase::enumerate_downsets(std::size_t guard) const {
  const int m = nl() * nr();
  // Strictly-below sets per product element, in a linear extension.
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  auto depth = [&](int e) {
    return popcount(l_.poset.below(e / nr())) + popcount(r_.poset.below(e % nr()));
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth(a) < depth(b); });

  std::vector<Rel> below(m, rel_empty(nl(), nr()));
  for (int e = 0; e < m; ++e) {
    int x = e / nr(), y = e % nr();
    for_bits(l_.poset.below(x),
             [&](int x2) { below[e].rows[x2] = r_.poset.below(y); });
    below[e].rows[x] &= ~bit(y);
  }

  std::vector<Rel> out;
  Rel cur = rel_empty(nl(), nr());
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == m) {
      if (out.size() >= guard) throw GuardExceeded("down-set enumeration", guard);
      out.push_back(cur);
      return;
    }
    self(self, idx + 1);
    int e = order[idx], x = e / nr(), y = e % nr();
    if (rel_subset(below[e], cur)) {
      cur.rows[x] |= bit(y);
      self(self, idx + 1);
      cur.rows[x] &= ~bit(y);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) {
    int sa = rel_size(a), sb = rel_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::vector<Rel> TensorBase::enumerate_tensors_filter(std::size_t guard) const {
  std::vector<Rel> out;
  for (const Rel& r : enumerate_downsets(guard))
    if (is_tensor(r)) out.push_back(r);
  return out;
}

FinitePoset tensor_family_poset(const std::vector<Rel>& tensors) {
  const int n = static_cast<int>(tensors.size());
  if (n > kMaxCarrier)
    throw RelqError("tensor family too large for a poset carrier");
  std::vector<std::string> labels(n);
  std::vector<Mask> below(n, 0);
  for (int i = 0; i < n; ++i) {
    labels[i] = "R" + std::to_string(i);
    for (int j = 0; j < n; ++j)
      if (rel_subset(tensors[j], tensors[i])) below[i] |= bit(j);
  }
  return FinitePoset::from_below_masks(std::move(labels), std::move(below));
}

namespace {

Rel map_pairs(const Rel& t, int nl2, int nr2, const std::vector<int>& fx,
              const std::vector<int>& fy) {
  Rel out = rel_empty(nl2, nr2);
  for (auto [x, y] : rel_pairs(t)) {
    if (fx[x] < 0 || fy[y] < 0) continue;
    rel_add(out, fx[x], fy[y]);
  }
  return out;
}

}  // namespace

Rel truncation_strip(const TensorBase& full_base, const TensorBase& trunc_base,
                     const Truncation& ta, const Truncation& tb, const Rel& t) {
  if (!full_base.is_tensor(t))
    throw RelqError("truncation_strip: input is not a tensor of the full product");
  Rel out = map_pairs(t, trunc_base.nl(), trunc_base.nr(), ta.new_of_old,
                      tb.new_of_old);
  if (!trunc_base.is_tensor(out))
    throw RelqError("truncation_strip: relativization is not a truncated tensor");
  return out;
}

Rel truncation_extend(const TensorBase& full_base, const TensorBase& trunc_base,
                      const Truncation& ta, const Truncation& tb,
                      const Rel& t) {
  if (!trunc_base.is_tensor(t))
    throw RelqError("truncation_extend: input is not a truncated tensor");
  std::vector<int> ax(trunc_base.nl()), by(trunc_base.nr());
  for (int i = 0; i < trunc_base.nl(); ++i) ax[i] = ta.old_of_new[i];
  for (int j = 0; j < trunc_base.nr(); ++j) by[j] = tb.old_of_new[j];
  Rel out = rel_union(map_pairs(t, full_base.nl(), full_base.nr(), ax, by),
                      full_base.bottom_tensor());
  if (!full_base.is_tensor(out))
    throw RelqError("truncation_extend: extension is not a tensor of the full product");
  return out;
}

std::vector<int> tensor_to_map(const Truncation& ta, const Truncation& tb,
                               const Rel& t) {
  const FinitePoset& a = ta.full.poset;
  const FinitePoset& b = tb.full.poset;
  std::vector<int> f(a.size(), -1);
  auto top_b = b.props().top;
  if (!top_b) throw RelqError("tensor_to_map requires a complete codomain");
  const Mask bot_b = ideal_bottom(tb.full);
  for (int x = 0; x < a.size(); ++x) {
    if (ta.new_of_old[x] < 0) {
      f[x] = *top_b;  // bottom arguments go to the top
      continue;
    }
    Mask slice = bot_b;  // x T union the bottom of B, in full B indices
    for_bits(t.rows[ta.new_of_old[x]],
             [&](int y) { slice |= bit(tb.old_of_new[y]); });
    Mask maxima = maximals(b, slice);
    if (popcount(maxima) != 1)
      throw RelqError("slice of '" + a.label(x) + "' lacks a maximum");
    f[x] = lowest_bit(maxima);
  }
  return f;
}

Rel map_to_tensor(const Truncation& ta, const Truncation& tb,
                  const std::vector<int>& f) {
  const FinitePoset& b = tb.full.poset;
  Rel out = rel_empty(popcount(ta.kept), popcount(tb.kept));
  for (std::size_t i = 0; i < ta.old_of_new.size(); ++i) {
    Mask vals = b.below(f[ta.old_of_new[i]]) & tb.kept;
    for_bits(vals, [&](int y) { out.rows[i] |= bit(tb.new_of_old[y]); });
  }
  return out;
}

SpaceTensorBase::SpaceTensorBase(ClosureSpace a, ClosureSpace b)
    : a_(std::move(a)), b_(std::move(b)) {}

bool SpaceTensorBase::is_tensor(const Rel& r) const {
  for (int x = 0; x < a_.size(); ++x)
    if (!b_.is_closed(r.rows[x])) return false;
  for (Mask col : rel_columns(r))
    if (!a_.is_closed(col)) return false;
  return true;
}

Rel SpaceTensorBase::tensor_closure(const Rel& r) const {
  Rel cur = r;
  for (;;) {
    Rel next = cur;
    for (int x = 0; x < a_.size(); ++x)
      next.rows[x] = b_.closure_of(next.rows[x]);
    std::vector<Mask> cols = rel_columns(next);
    for (int y = 0; y < b_.size(); ++y) {
      Mask cl = a_.closure_of(cols[y]);
      for_bits(cl, [&](int x) { next.rows[x] |= bit(y); });
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Rel SpaceTensorBase::pure_tensor(int x, int y) const {
  Rel r = rel_empty(a_.size(), b_.size());
  rel_add(r, x, y);
  return tensor_closure(r);
}

Rel SpaceTensorBase::bottom_tensor() const {
  return tensor_closure(rel_empty(a_.size(), b_.size()));
}

std::vector<Rel> SpaceTensorBase::enumerate_tensors(std::size_t guard) const {
  std::set<Rel> seen;
  std::vector<Rel> work;
  auto push = [&](Rel r) {
    if (seen.insert(r).second) {
      if (seen.size() > guard)
        throw GuardExceeded("space tensor enumeration", guard);
      work.push_back(std::move(r));
    }
  };
  push(bottom_tensor());
  for (int x = 0; x < a_.size(); ++x)
    for (int y = 0; y < b_.size(); ++y) push(pure_tensor(x, y));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      push(tensor_closure(rel_union(work[i], work[j])));
  std::vector<Rel> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) {
    int sa = rel_size(a), sb = rel_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

TensorBase closed_lattice_base(const SpaceTensorBase& sb) {
  FinitePoset la = closed_set_lattice(sb.left());
  FinitePoset lb = closed_set_lattice(sb.right());
  return TensorBase({std::move(la), family_powerset()},
                    {std::move(lb), family_powerset()});
}

Rel space_h_iso(const SpaceTensorBase& sb, const TensorBase& cb, const Rel& t) {
  const auto& ca = sb.left().closed();
  const auto& cbs = sb.right().closed();
  Rel out = rel_empty(cb.nl(), cb.nr());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < cbs.size(); ++j) {
      bool inside = true;
      for_bits(ca[i], [&](int x) {
        if (!subset(cbs[j], t.rows[x])) inside = false;
      });
      if (inside) rel_add(out, static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Rel space_h_inv(const SpaceTensorBase& sb, const TensorBase& cb,
                const Rel& ht) {
  Rel out = rel_empty(sb.left().size(), sb.right().size());
  for (int x = 0; x < sb.left().size(); ++x)
    for (int y = 0; y < sb.right().size(); ++y)
      if (rel_subset(space_h_iso(sb, cb, sb.pure_tensor(x, y)), ht))
        rel_add(out, x, y);
  return out;
}

Rel space_c_iso(const SpaceTensorBase& sb, const TensorBase& cb,
                const Truncation& ta, const Truncation& tb, const Rel& t) {
  Rel h = space_h_iso(sb, cb, t);
  return map_pairs(h, static_cast<int>(ta.old_of_new.size()),
                   static_cast<int>(tb.old_of_new.size()), ta.new_of_old,
                   tb.new_of_old);
}

void check_separately_continuous(const SpaceTensorBase& sb,
                                 const FinitePoset& c,
                                 const BimorphismTable& f) {
  for (int x = 0; x < sb.left().size(); ++x)
    for (int cz = 0; cz < c.size(); ++cz) {
      Mask pre = 0;
      for (int y = 0; y < sb.right().size(); ++y)
        if (c.leq(f.value[x][y], cz)) pre |= bit(y);
      if (!sb.right().is_closed(pre))
        throw RelqError("slice at left point '" + sb.left().label(x) +
                        "' is not continuous");
    }
  for (int y = 0; y < sb.right().size(); ++y)
    for (int cz = 0; cz < c.size(); ++cz) {
      Mask pre = 0;
      for (int x = 0; x < sb.left().size(); ++x)
        if (c.leq(f.value[x][y], cz)) pre |= bit(x);
      if (!sb.left().is_closed(pre))
        throw RelqError("slice at right point '" + sb.right().label(y) +
                        "' is not continuous");
    }
}

int universal_extension(const SpaceTensorBase&, const FinitePoset& c,
                        const BimorphismTable& f, const Rel& t) {
  Mask values = 0;
  for (auto [x, y] : rel_pairs(t)) values |= bit(f.value[x][y]);
  auto j = join_of(c, values);
  if (!j) throw RelqError("universal_extension: join does not exist");
  return *j;
}

}  // namespace relq
