#include "relq/closure_space.hpp"

#include <algorithm>
#include <set>

namespace relq {

ClosureSpace ClosureSpace::from_generators(int n, std::vector<Mask> sets,
                                           std::vector<std::string> labels) {
  if (n > kMaxCarrier) throw RelqError("ground set too large (max 64 points)");
  Mask ground = full_mask(n);
  for (Mask s : sets)
    if (s & ~ground) throw RelqError("generator contains out-of-range point");
  std::set<Mask> fam(sets.begin(), sets.end());
  fam.insert(ground);
  // Close under pairwise intersection to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> members(fam.begin(), fam.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        changed |= fam.insert(members[i] & members[j]).second;
  }
  ClosureSpace a;
  a.n_ = n;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n) throw RelqError("label count mismatch");
  a.labels_ = std::move(labels);
  a.closed_.assign(fam.begin(), fam.end());
  std::sort(a.closed_.begin(), a.closed_.end(), [](Mask x, Mask y) {
    return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : x < y;
  });
  a.finalize();
  return a;
}

ClosureSpace ClosureSpace::discrete(int n) {
  // Every subset must be closed; co-singletons generate them by intersection.
  if (n > 16) throw RelqError("discrete space too large to enumerate");
  std::vector<Mask> sets;
  for (int i = 0; i < n; ++i) sets.push_back(full_mask(n) & ~bit(i));
  if (n > 0) sets.push_back(0);
  return from_generators(n, std::move(sets));
}

bool ClosureSpace::is_closed(Mask m) const {
  return std::find(closed_.begin(), closed_.end(), m) != closed_.end();
}

Mask ClosureSpace::closure_of(Mask ys) const {
  Mask r = ground();
  for (Mask c : closed_)
    if (subset(ys, c)) r &= c;
  return r;
}

Mask ClosureSpace::polar_of(int x) const {
  Mask bot = bottom(), cx = point_closure(x), r = 0;
  for (int y = 0; y < n_; ++y)
    if ((cx & point_closure(y)) == bot) r |= bit(y);
  return r;
}

void ClosureSpace::finalize() {
  Mask bot = closure_of(0);
  props_.unbounded = bot == 0;
  props_.uniquely_bounded = popcount(bot) == 1;
  props_.t0 = true;
  for (int x = 0; x < n_ && props_.t0; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (point_closure(x) == point_closure(y)) { props_.t0 = false; break; }
  props_.polarized = true;
  for (int x = 0; x < n_; ++x)
    if (!is_closed(polar_of(x))) { props_.polarized = false; break; }
}

std::vector<Mask> ClosureSpace::specialization_preorder() const {
  std::vector<Mask> below(n_);
  for (int y = 0; y < n_; ++y) below[y] = point_closure(y);
  return below;
}

FinitePoset ClosureSpace::specialization_poset() const {
  if (!props_.t0) throw RelqError("specialization order of a non-T0 space is not a poset");
  return FinitePoset::from_below_masks(labels_, specialization_preorder());
}

FinitePoset closed_set_lattice(const ClosureSpace& a) {
  if (static_cast<int>(a.closed().size()) > kMaxCarrier)
    throw RelqError("closed-set family too large for a poset carrier");
  std::vector<std::string> labels;
  labels.reserve(a.closed().size());
  for (Mask c : a.closed()) {
    std::string s = "{";
    bool first = true;
    for_bits(c, [&](int i) {
      if (!first) s += " ";
      s += a.label(i);
      first = false;
    });
    labels.push_back(s + "}");
  }
  return FinitePoset::from_inclusion(a.closed(), labels);
}

ClosureSpace unbounded_coreflection(const ClosureSpace& a) {
  Mask bot = a.bottom();
  std::vector<int> new_of(a.size(), -1);
  std::vector<std::string> labels;
  for_bits(a.ground() & ~bot, [&](int i) {
    new_of[i] = static_cast<int>(labels.size());
    labels.push_back(a.label(i));
  });
  std::vector<Mask> sets;
  for (Mask c : a.closed()) {
    Mask m = 0;
    for_bits(c & ~bot, [&](int i) { m |= bit(new_of[i]); });
    sets.push_back(m);
  }
  const int n = static_cast<int>(labels.size());
  return ClosureSpace::from_generators(n, std::move(sets), std::move(labels));
}

ClosureSpace principal_ideal_space(const FinitePoset& p) {
  if (!p.props().complete_lattice)
    throw RelqError("principal_ideal_space requires a complete lattice");
  std::vector<Mask> sets;
  for (int b = 0; b < p.size(); ++b) sets.push_back(p.below(b));
  return ClosureSpace::from_generators(p.size(), std::move(sets), p.labels());
}

}  // namespace relq
