#include "relq/completion.hpp"

#include <algorithm>

namespace relq {

namespace {

constexpr int kMaterializeLimit = 20;

void check_materialize(int n) {
  if (n > kMaterializeLimit) {
    throw RelqError("cannot materialize a powerset family over " +
                    std::to_string(n) + " elements");
  }
}

}  // namespace

SubsetFamily SubsetFamily::explicit_family(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {Explicit, std::move(sets)};
}

bool SubsetFamily::contains_empty() const {
  switch (kind) {
    case Powerset:
      return true;
    case PowersetNonempty:
      return false;
    case Explicit:
      return !members.empty() && members.front() == 0;
  }
  return false;
}

std::vector<Mask> SubsetFamily::materialize(int n) const {
  if (kind == Explicit) return members;
  check_materialize(n);
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (kind == PowersetNonempty && m == 0) continue;
    out.push_back(m);
  }
  return out;
}

std::vector<Mask> dotted_family(const AugmentedPoset& ap) {
  std::vector<Mask> sets = ap.family.materialize(ap.poset.size());
  for (int x = 0; x < ap.poset.size(); ++x) sets.push_back(bit(x));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

Mask ideal_step(const AugmentedPoset& ap, Mask xs) {
  const FinitePoset& p = ap.poset;
  // Powerset-like families admit a closed form: every subset of xs is a
  // member, and their cuts are all contained in the cut of xs itself.
  if (ap.family.kind == SubsetFamily::Powerset) return cut_delta(p, xs);
  if (ap.family.kind == SubsetFamily::PowersetNonempty) {
    return xs == 0 ? 0 : cut_delta(p, xs);
  }
  Mask out = down_closure(p, xs);  // singleton cuts are principal ideals
  for (Mask y : ap.family.members) {
    if (subset(y, xs)) out |= cut_delta(p, y);
  }
  return out;
}

Mask ideal_closure(const AugmentedPoset& ap, Mask xs) {
  Mask cur = xs;
  for (;;) {
    Mask next = ideal_step(ap, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

bool is_ideal(const AugmentedPoset& ap, Mask xs) {
  return ideal_step(ap, xs) == xs;
}

Mask ideal_bottom(const AugmentedPoset& ap) { return ideal_closure(ap, 0); }

ClosureSpace ideal_system(const AugmentedPoset& ap) {
  const int n = ap.poset.size();
  check_materialize(n);
  std::vector<Mask> closed;
  std::vector<std::string> labels(ap.poset.labels());
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (is_ideal(ap, m)) closed.push_back(m);
  }
  return ClosureSpace::from_generators(n, closed, labels);
}

bool bottom_distributivity(const AugmentedPoset& ap) {
  const FinitePoset& p = ap.poset;
  const Mask bot = ideal_bottom(ap);
  const Mask trunc = p.carrier() & ~bot;

  // Route 1: every polar relative to the least ideal is itself an ideal.
  bool by_polars = true;
  for (int x = 0; x < p.size() && by_polars; ++x) {
    Mask pol = 0;
    for (int y = 0; y < p.size(); ++y) {
      if (subset(p.below(x) & p.below(y), bot)) pol |= bit(y);
    }
    by_polars = is_ideal(ap, pol);
  }

  // Route 2: witness form.  For every member Y and every a in the cut of Y
  // away from the bottom, the principal ideal of a must meet the down-set
  // of Y outside the bottom.
  bool by_witness = true;
  for (Mask y : ap.family.materialize(p.size())) {
    Mask cut = cut_delta(p, y) & trunc;
    Mask dn = down_closure(p, y) & trunc;
    for_bits(cut, [&](int a) {
      if ((p.below(a) & dn) == 0) by_witness = false;
    });
    if (!by_witness) break;
  }

  if (by_polars != by_witness) {
    throw RelqError("bottom-distributivity routes disagree on " +
                    subset_to_string(p, p.carrier()));
  }
  return by_polars;
}

AugmentedPoset truncate(const AugmentedPoset& ap) {
  const FinitePoset& p = ap.poset;
  const Mask bot = ideal_bottom(ap);
  if (bot == 0) return ap;
  const Mask keep = p.carrier() & ~bot;
  FinitePoset q = p.restrict(keep);

  auto remap = [&](Mask old) {
    Mask out = 0;
    for_bits(old & keep, [&](int i) { out |= bit(popcount(keep & (bit(i) - 1))); });
    return out;
  };

  SubsetFamily fam;
  switch (ap.family.kind) {
    case SubsetFamily::Powerset:
    case SubsetFamily::PowersetNonempty:
      fam = SubsetFamily::powerset_nonempty();
      break;
    case SubsetFamily::Explicit: {
      std::vector<Mask> sets;
      for (Mask x : ap.family.members) {
        Mask xd = x & keep;
        if (xd != 0) sets.push_back(remap(xd));
      }
      fam = SubsetFamily::explicit_family(std::move(sets));
      break;
    }
  }
  return {std::move(q), std::move(fam)};
}

SubsetFamily family_powerset() { return SubsetFamily::powerset(); }

SubsetFamily family_finite(const FinitePoset& p) {
  return SubsetFamily::explicit_family(
      SubsetFamily::powerset().materialize(p.size()));
}

SubsetFamily family_downsets(const FinitePoset& p) {
  check_materialize(p.size());
  std::vector<Mask> sets;
  for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
    if (down_closure(p, m) == m) sets.push_back(m);
  }
  return SubsetFamily::explicit_family(std::move(sets));
}

SubsetFamily family_directed(const FinitePoset& p) {
  check_materialize(p.size());
  std::vector<Mask> sets;
  for (Mask m = 1; m < (Mask{1} << p.size()); ++m) {
    bool directed = true;
    for_bits(m, [&](int a) {
      for_bits(m, [&](int b) {
        if ((p.above(a) & p.above(b) & m) == 0) directed = false;
      });
    });
    if (directed) sets.push_back(m);
  }
  return SubsetFamily::explicit_family(std::move(sets));
}

SubsetFamily family_chains(const FinitePoset& p) {
  check_materialize(p.size());
  std::vector<Mask> sets;
  for (Mask m = 1; m < (Mask{1} << p.size()); ++m) {
    bool chain = true;
    for_bits(m, [&](int a) {
      for_bits(m, [&](int b) {
        if (!p.leq(a, b) && !p.leq(b, a)) chain = false;
      });
    });
    if (chain) sets.push_back(m);
  }
  return SubsetFamily::explicit_family(std::move(sets));
}

SubsetFamily family_singletons(const FinitePoset& p) {
  std::vector<Mask> sets;
  for (int x = 0; x < p.size(); ++x) sets.push_back(bit(x));
  return SubsetFamily::explicit_family(std::move(sets));
}

SubsetFamily family_empty() { return SubsetFamily::explicit_family({}); }

SubsetFamily builtin_family(const std::string& name, const FinitePoset& p) {
  std::string key = name;
  if (!key.empty() && key[0] == '@') key = key.substr(1);
  if (key == "powerset") return family_powerset();
  if (key == "finite") return family_finite(p);
  if (key == "downsets") return family_downsets(p);
  if (key == "directed") return family_directed(p);
  if (key == "chains") return family_chains(p);
  if (key == "singletons") return family_singletons(p);
  if (key == "empty") return family_empty();
  throw RelqError("unknown family name: " + name);
}

}  // namespace relq
