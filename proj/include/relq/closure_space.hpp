#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relq/poset.hpp"

namespace relq {

struct SpaceProps {
  bool unbounded = false;         // empty set is closed
  bool uniquely_bounded = false;  // closure of the empty set is a singleton
  bool t0 = false;                // distinct points have distinct closures
  bool polarized = false;         // every polar is closed
};

/// A finite closure space: a ground set with an intersection-closed family of
/// closed subsets that contains the ground set.  Immutable after construction.
class ClosureSpace {
 public:
  // Closes the generator family under pairwise intersections and adds the
  // ground set.
  static ClosureSpace from_generators(int n, std::vector<Mask> sets,
                                      std::vector<std::string> labels = {});
  static ClosureSpace discrete(int n);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  Mask ground() const { return full_mask(n_); }

  const std::vector<Mask>& closed() const { return closed_; }
  bool is_closed(Mask m) const;

  Mask closure_of(Mask ys) const;
  Mask bottom() const { return closure_of(0); }      // least closed set
  Mask point_closure(int x) const { return closure_of(bit(x)); }
  Mask truncated_ground() const { return ground() & ~bottom(); }

  Mask polar_of(int x) const;  // {y : point closures of x and y meet in bottom}
  const SpaceProps& props() const { return props_; }

  // Specialization preorder x <= y iff x lies in the closure of y, given as
  // below-style masks; a FinitePoset only when the space is T0.
  std::vector<Mask> specialization_preorder() const;
  FinitePoset specialization_poset() const;  // requires T0

 private:
  ClosureSpace() = default;
  void finalize();

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Mask> closed_;  // sorted by (popcount, value)
  SpaceProps props_;
};

FinitePoset closed_set_lattice(const ClosureSpace& a);
ClosureSpace unbounded_coreflection(const ClosureSpace& a);
// Requires p to be a complete lattice; closed sets are the principal ideals.
ClosureSpace principal_ideal_space(const FinitePoset& p);

}  // namespace relq
