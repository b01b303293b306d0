#pragma once

#include <string>
#include <vector>

#include "relq/closure_space.hpp"
#include "relq/poset.hpp"

namespace relq {

/// A collection of subsets of a poset carrier.  The two powerset kinds avoid
/// materializing 2^n members on larger carriers.
struct SubsetFamily {
  enum Kind { Explicit, Powerset, PowersetNonempty };
  Kind kind = Explicit;
  std::vector<Mask> members;  // normalized: deduplicated, sorted (Explicit only)

  static SubsetFamily explicit_family(std::vector<Mask> sets);
  static SubsetFamily powerset() { return {Powerset, {}}; }
  static SubsetFamily powerset_nonempty() { return {PowersetNonempty, {}}; }

  bool contains_empty() const;
  // Materializes the members; throws for powerset kinds over large carriers.
  std::vector<Mask> materialize(int n) const;
};

struct AugmentedPoset {
  FinitePoset poset;
  SubsetFamily family;
};

// The family plus all singletons, deduplicated.
std::vector<Mask> dotted_family(const AugmentedPoset& ap);

// One application of the ideal preclosure step: union of the cuts of all
// dotted-family members inside xs.
Mask ideal_step(const AugmentedPoset& ap, Mask xs);
// Least ideal containing xs (fixpoint of ideal_step).
Mask ideal_closure(const AugmentedPoset& ap, Mask xs);
bool is_ideal(const AugmentedPoset& ap, Mask xs);
// Least ideal of the augmented poset; empty or a singleton.
Mask ideal_bottom(const AugmentedPoset& ap);

// The closure space whose closed sets are exactly the ideals.
ClosureSpace ideal_system(const AugmentedPoset& ap);

// Distributivity at the bottom: every polar is an ideal.  Computed by two
// routes (polar-ideal scan and the witness form) which must agree.
bool bottom_distributivity(const AugmentedPoset& ap);

// Bottom-stripped poset with the truncated family.
AugmentedPoset truncate(const AugmentedPoset& ap);

// Named family constructors over a concrete poset.
SubsetFamily family_powerset();
SubsetFamily family_finite(const FinitePoset& p);      // all subsets, explicit
SubsetFamily family_downsets(const FinitePoset& p);
SubsetFamily family_directed(const FinitePoset& p);    // nonempty directed
SubsetFamily family_chains(const FinitePoset& p);      // nonempty chains
SubsetFamily family_singletons(const FinitePoset& p);
SubsetFamily family_empty();
// Resolves "@powerset", "@finite", ... ; throws on unknown names.
SubsetFamily builtin_family(const std::string& name, const FinitePoset& p);

}  // namespace relq
