#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relq/common.hpp"

namespace relq {

/// Structural flags of a finite poset, computed once at construction.
struct PosetProps {
  bool complete_lattice = false;
  bool pseudocomplemented = false;
  bool atomic = false;      // every non-bottom element lies above an atom
  bool atomistic = false;   // every element is the join of the atoms below it
  bool distributive = false;
  bool complemented = false;
  bool boolean = false;     // complemented and distributive (lattices only)
  Mask atoms = 0;           // minimal elements of the bottom-stripped carrier
  std::optional<int> bottom;
  std::optional<int> top;
};

/// A finite partially ordered set over indices 0..size-1.  Labels are
/// presentation-only; all structure lives in the order masks.  Immutable
/// after construction.
class FinitePoset {
 public:
  static FinitePoset from_covers(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::string, std::string>>& covers);
  // leq given as below-masks: below[i] = {x : x <= i}.  Validates the axioms.
  static FinitePoset from_below_masks(std::vector<std::string> labels,
                                      std::vector<Mask> below);
  // Poset of a set family ordered by inclusion.
  static FinitePoset from_inclusion(const std::vector<Mask>& sets,
                                    const std::vector<std::string>& labels);

  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);
  // Powerset of `atoms` atoms ordered by inclusion (B4 = 2 atoms, B8 = 3).
  static FinitePoset boolean_algebra(int atoms);
  static FinitePoset diamond_m3();
  static FinitePoset pentagon_n5();

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // throws on unknown labels

  bool leq(int x, int y) const { return has(below_[y], x); }
  Mask below(int i) const { return below_[i]; }  // principal ideal of i
  Mask above(int i) const { return above_[i]; }  // principal filter of i
  Mask carrier() const { return full_mask(n_); }

  const PosetProps& props() const { return props_; }
  // Bottom element's singleton mask, or 0 when there is no least element.
  Mask bottom_mask() const {
    return props_.bottom ? bit(*props_.bottom) : Mask{0};
  }
  // Carrier minus the least element (the truncation of the carrier).
  Mask truncated_carrier() const { return carrier() & ~bottom_mask(); }

  // Induced subposet on the elements of `keep`; kept elements are reindexed
  // in ascending order of their old index.
  FinitePoset restrict(Mask keep) const;

 private:
  FinitePoset() = default;
  void finalize();  // fills above_ and props_

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  PosetProps props_;
};

// {x : x <= y for some y in ys}
Mask down_closure(const FinitePoset& p, Mask ys);
Mask up_closure(const FinitePoset& p, Mask ys);

// Cut operator: intersection of all principal ideals containing xs; the whole
// carrier when no principal ideal contains xs (empty intersection).
Mask cut_delta(const FinitePoset& p, Mask xs);

std::optional<int> join_of(const FinitePoset& p, Mask xs);
std::optional<int> meet_of(const FinitePoset& p, Mask xs);
inline std::pair<std::optional<int>, std::optional<int>> join_meet(
    const FinitePoset& p, Mask xs) {
  return {join_of(p, xs), meet_of(p, xs)};
}

Mask minimals(const FinitePoset& p, Mask xs);
Mask maximals(const FinitePoset& p, Mask xs);

// Polar of x: {y : the down-sets of x and y meet only in the empty cut}.
Mask polar(const FinitePoset& p, int x);
std::optional<int> pseudocomplement(const FinitePoset& p, int x);

FinitePoset poset_product(const FinitePoset& a, const FinitePoset& b);
FinitePoset dual(const FinitePoset& p);

// Cover relation (transitive reduction), pairs (lower, upper).
std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& p);

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b);

std::string subset_to_string(const FinitePoset& p, Mask m);

}  // namespace relq
