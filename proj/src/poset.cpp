#include "relq/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relq {

FinitePoset FinitePoset::from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  int n = static_cast<int>(labels.size());
  if (n > kMaxCarrier) throw RelqError("poset too large (max 64 elements)");
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) {
    if (!idx.emplace(labels[i], i).second)
      throw RelqError("duplicate label '" + labels[i] + "'");
  }
  std::vector<Mask> below(n);
  for (int i = 0; i < n; ++i) below[i] = bit(i);
  for (auto& [lo, hi] : covers) {
    auto it_lo = idx.find(lo), it_hi = idx.find(hi);
    if (it_lo == idx.end()) throw RelqError("unknown label '" + lo + "'");
    if (it_hi == idx.end()) throw RelqError("unknown label '" + hi + "'");
    below[it_hi->second] |= bit(it_lo->second);
  }
  // Reflexive-transitive closure.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask acc = below[i];
      for_bits(below[i], [&](int j) { acc |= below[j]; });
      if (acc != below[i]) { below[i] = acc; changed = true; }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has(below[i], j) && has(below[j], i))
        throw RelqError("cycle detected: '" + labels[i] + "' and '" +
                        labels[j] + "' each below the other");
  return from_below_masks(labels, std::move(below));
}

FinitePoset FinitePoset::from_below_masks(std::vector<std::string> labels,
                                          std::vector<Mask> below) {
  int n = static_cast<int>(labels.size());
  if (n > kMaxCarrier) throw RelqError("poset too large (max 64 elements)");
  for (int i = 0; i < n; ++i) {
    if (!has(below[i], i)) throw RelqError("order not reflexive");
    if (below[i] & ~full_mask(n)) throw RelqError("index out of range");
  }
  for (int i = 0; i < n; ++i)
    for_bits(below[i], [&](int j) {
      if (i != j && has(below[j], i)) throw RelqError("order not antisymmetric");
      if (!subset(below[j], below[i])) throw RelqError("order not transitive");
    });
  FinitePoset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  p.finalize();
  return p;
}

FinitePoset FinitePoset::from_inclusion(const std::vector<Mask>& sets,
                                        const std::vector<std::string>& labels) {
  int n = static_cast<int>(sets.size());
  std::vector<Mask> below(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (subset(sets[j], sets[i])) below[i] |= bit(j);
  return from_below_masks(labels, std::move(below));
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> labels(n);
  std::vector<Mask> below(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    below[i] = full_mask(i + 1);
  }
  return from_below_masks(std::move(labels), std::move(below));
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> labels(n);
  std::vector<Mask> below(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::string(1, static_cast<char>('a' + i));
    below[i] = bit(i);
  }
  return from_below_masks(std::move(labels), std::move(below));
}

FinitePoset FinitePoset::boolean_algebra(int atoms) {
  int n = 1 << atoms;
  std::vector<std::string> labels(n);
  std::vector<Mask> below(n);
  for (int s = 0; s < n; ++s) {
    std::string lab;
    for (int a = 0; a < atoms; ++a)
      if ((s >> a) & 1) lab += static_cast<char>('a' + a);
    labels[s] = s == 0 ? "0" : lab;
    for (int t = 0; t < n; ++t)
      if ((t & ~s) == 0) below[s] |= bit(t);
  }
  return from_below_masks(std::move(labels), std::move(below));
}

FinitePoset FinitePoset::diamond_m3() {
  return from_covers({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"},
                      {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FinitePoset FinitePoset::pentagon_n5() {
  return from_covers({"0", "a", "c", "b", "1"},
                     {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

int FinitePoset::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw RelqError("unknown element '" + label + "'");
}

FinitePoset FinitePoset::restrict(Mask keep) const {
  std::vector<int> old_of;
  std::vector<int> new_of(n_, -1);
  for_bits(keep, [&](int i) {
    new_of[i] = static_cast<int>(old_of.size());
    old_of.push_back(i);
  });
  int m = static_cast<int>(old_of.size());
  std::vector<std::string> labels(m);
  std::vector<Mask> below(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = labels_[old_of[i]];
    for_bits(below_[old_of[i]] & keep,
             [&](int j) { below[i] |= bit(new_of[j]); });
  }
  return from_below_masks(std::move(labels), std::move(below));
}

void FinitePoset::finalize() {
  above_.assign(n_, 0);
  for (int i = 0; i < n_; ++i)
    for_bits(below_[i], [&](int j) { above_[j] |= bit(i); });

  PosetProps& pr = props_;
  for (int i = 0; i < n_; ++i) {
    if (below_[i] == carrier()) pr.top = i;
    if (above_[i] == carrier()) pr.bottom = i;
  }
  Mask trunc = carrier() & ~(pr.bottom ? bit(*pr.bottom) : Mask{0});
  pr.atoms = minimals(*this, trunc);

  // Finite reduction: bottom + top + all binary joins and meets.
  pr.complete_lattice = pr.bottom && pr.top;
  if (pr.complete_lattice)
    for (int x = 0; x < n_ && pr.complete_lattice; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (!join_of(*this, bit(x) | bit(y)) ||
            !meet_of(*this, bit(x) | bit(y))) {
          pr.complete_lattice = false;
          break;
        }

  pr.pseudocomplemented = true;
  for (int x = 0; x < n_; ++x)
    if (!pseudocomplement(*this, x)) { pr.pseudocomplemented = false; break; }

  pr.atomic = true;
  pr.atomistic = true;
  for_bits(trunc, [&](int x) {
    Mask at = pr.atoms & below_[x];
    if (!at) pr.atomic = false;
    auto j = join_of(*this, at);
    if (!j || *j != x) pr.atomistic = false;
  });

  if (pr.complete_lattice) {
    auto jn = [&](int x, int y) { return *join_of(*this, bit(x) | bit(y)); };
    auto mt = [&](int x, int y) { return *meet_of(*this, bit(x) | bit(y)); };
    pr.complemented = true;
    for (int x = 0; x < n_; ++x) {
      bool found = false;
      for (int y = 0; y < n_ && !found; ++y)
        found = mt(x, y) == *pr.bottom && jn(x, y) == *pr.top;
      if (!found) { pr.complemented = false; break; }
    }
    pr.distributive = true;
    for (int x = 0; x < n_ && pr.distributive; ++x)
      for (int y = 0; y < n_ && pr.distributive; ++y)
        for (int z = 0; z < n_; ++z)
          if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z))) {
            pr.distributive = false;
            break;
          }
    pr.boolean = pr.complemented && pr.distributive;
  }
}

Mask down_closure(const FinitePoset& p, Mask ys) {
  Mask r = 0;
  for_bits(ys, [&](int y) { r |= p.below(y); });
  return r;
}

Mask up_closure(const FinitePoset& p, Mask ys) {
  Mask r = 0;
  for_bits(ys, [&](int y) { r |= p.above(y); });
  return r;
}

Mask cut_delta(const FinitePoset& p, Mask xs) {
  Mask ub = p.carrier();
  for_bits(xs, [&](int x) { ub &= p.above(x); });
  Mask r = p.carrier();
  bool any = false;
  for_bits(ub, [&](int y) { r &= p.below(y); any = true; });
  return any ? r : p.carrier();
}

std::optional<int> join_of(const FinitePoset& p, Mask xs) {
  Mask ub = p.carrier();
  for_bits(xs, [&](int x) { ub &= p.above(x); });
  // least upper bound = an upper bound below all upper bounds
  std::optional<int> res;
  for_bits(ub, [&](int y) {
    if (subset(ub, p.above(y))) res = y;
  });
  return res;
}

std::optional<int> meet_of(const FinitePoset& p, Mask xs) {
  Mask lb = p.carrier();
  for_bits(xs, [&](int x) { lb &= p.below(x); });
  std::optional<int> res;
  for_bits(lb, [&](int y) {
    if (subset(lb, p.below(y))) res = y;
  });
  return res;
}

Mask minimals(const FinitePoset& p, Mask xs) {
  Mask r = 0;
  for_bits(xs, [&](int x) {
    if ((p.below(x) & xs) == bit(x)) r |= bit(x);
  });
  return r;
}

Mask maximals(const FinitePoset& p, Mask xs) {
  Mask r = 0;
  for_bits(xs, [&](int x) {
    if ((p.above(x) & xs) == bit(x)) r |= bit(x);
  });
  return r;
}

Mask polar(const FinitePoset& p, int x) {
  Mask empty_cut = cut_delta(p, 0);
  Mask r = 0;
  for (int y = 0; y < p.size(); ++y)
    if ((p.below(x) & p.below(y)) == empty_cut) r |= bit(y);
  return r;
}

std::optional<int> pseudocomplement(const FinitePoset& p, int x) {
  Mask pol = polar(p, x);
  std::optional<int> res;
  for_bits(pol, [&](int y) {
    if (subset(pol, p.below(y))) res = y;
  });
  return res;
}

FinitePoset poset_product(const FinitePoset& a, const FinitePoset& b) {
  int n = a.size() * b.size();
  if (n > kMaxCarrier) throw RelqError("product poset too large");
  std::vector<std::string> labels(n);
  std::vector<Mask> below(n);
  auto idx = [&](int x, int y) { return x * b.size() + y; };
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      int i = idx(x, y);
      labels[i] = "(" + a.label(x) + "," + b.label(y) + ")";
      for_bits(a.below(x), [&](int x2) {
        for_bits(b.below(y), [&](int y2) { below[i] |= bit(idx(x2, y2)); });
      });
    }
  return FinitePoset::from_below_masks(std::move(labels), std::move(below));
}

FinitePoset dual(const FinitePoset& p) {
  std::vector<Mask> below(p.size());
  for (int i = 0; i < p.size(); ++i) below[i] = p.above(i);
  return FinitePoset::from_below_masks(p.labels(), std::move(below));
}

std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int y = 0; y < p.size(); ++y) {
    Mask strict = p.below(y) & ~bit(y);
    for_bits(maximals(p, strict), [&](int x) { covers.emplace_back(x, y); });
  }
  return covers;
}

namespace {
bool extend_iso(const FinitePoset& a, const FinitePoset& b,
                std::vector<int>& map, Mask used, int i) {
  if (i == a.size()) return true;
  for (int j = 0; j < b.size(); ++j) {
    if (has(used, j)) continue;
    if (popcount(a.below(i)) != popcount(b.below(j)) ||
        popcount(a.above(i)) != popcount(b.above(j)))
      continue;
    bool ok = true;
    for (int k = 0; k < i && ok; ++k) {
      if (a.leq(k, i) != b.leq(map[k], j)) ok = false;
      if (a.leq(i, k) != b.leq(j, map[k])) ok = false;
    }
    if (!ok) continue;
    map[i] = j;
    if (extend_iso(a, b, map, used | bit(j), i + 1)) return true;
  }
  return false;
}
}  // namespace

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size(), -1);
  return extend_iso(a, b, map, 0, 0);
}

std::string subset_to_string(const FinitePoset& p, Mask m) {
  std::string s = "{";
  bool first = true;
  for_bits(m, [&](int i) {
    if (!first) s += " ";
    s += p.label(i);
    first = false;
  });
  return s + "}";
}

}  // namespace relq
