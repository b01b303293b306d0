#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relq/closure_space.hpp"
#include "relq/completion.hpp"
#include "relq/poset.hpp"

namespace relq {

/// Relation between two indexed carriers, stored row-wise.
struct Rel {
  int nl = 0, nr = 0;
  std::vector<Mask> rows;  // rows[x] = {y : (x,y) in R}

  friend bool operator==(const Rel&, const Rel&) = default;
  friend auto operator<=>(const Rel&, const Rel&) = default;
};

Rel rel_empty(int nl, int nr);
Rel rel_full(int nl, int nr);
inline bool rel_has(const Rel& r, int x, int y) { return has(r.rows[x], y); }
inline void rel_add(Rel& r, int x, int y) { r.rows[x] |= bit(y); }
Rel rel_union(const Rel& a, const Rel& b);
Rel rel_intersect(const Rel& a, const Rel& b);
bool rel_subset(const Rel& a, const Rel& b);
int rel_size(const Rel& r);
Rel rel_transpose(const Rel& r);
std::vector<Mask> rel_columns(const Rel& r);  // columns[y] = {x : (x,y) in R}
std::vector<std::pair<int, int>> rel_pairs(const Rel& r);

// Default enumeration guard; RELQ_MAX_TENSORS overrides it.
std::size_t tensor_guard();

// How the least element of a poset came off during truncation.
struct Truncation {
  AugmentedPoset full;
  AugmentedPoset truncated;
  Mask kept = 0;                 // full-index mask of surviving elements
  std::vector<int> old_of_new;   // truncated index -> full index
  std::vector<int> new_of_old;   // full index -> truncated index, -1 if cut
};
Truncation make_truncation(const AugmentedPoset& ap);

/// A pair of augmented posets with the machinery for their tensor product.
/// Used both for full products (pass the posets as given) and truncated ones
/// (pass the truncations).  Relations live over the two carriers.
class TensorBase {
 public:
  TensorBase(AugmentedPoset left, AugmentedPoset right);
  // Truncates both sides first: the truncated tensor product.
  static TensorBase truncated(const AugmentedPoset& l, const AugmentedPoset& r);

  const AugmentedPoset& left() const { return l_; }
  const AugmentedPoset& right() const { return r_; }
  int nl() const { return l_.poset.size(); }
  int nr() const { return r_.poset.size(); }

  bool is_downset(const Rel& r) const;
  Rel down_close(const Rel& r) const;

  // Union of the cuts of all dotted-family members inside the given set.
  Mask step_left(Mask c) const;
  Mask step_right(Mask c) const;
  Mask ideal_left(Mask c) const;   // fixpoint of step_left
  Mask ideal_right(Mask c) const;

  // Slice form: every row a right-ideal, every column a left-ideal.
  bool is_tensor(const Rel& r) const;
  // Rectangle form: fixpoint of the one-step closure; agrees with the slice
  // form (cross-checked in tests and per-call in debug builds).
  bool is_tensor_rect(const Rel& r) const { return t_step(r) == r; }

  // One application of the rectangle step over the dotted families.
  Rel t_step(const Rel& r) const;
  // Least tensor containing r: iterate t_step to its fixpoint.
  Rel tensor_closure(const Rel& r) const;

  // Least tensor containing the pair (x,y).
  Rel pure_tensor(int x, int y) const;
  // Least tensor overall (the obligatory cross of the full form; empty in
  // truncated form).
  Rel bottom_tensor() const;

  // All tensors, generated as the join-closure of the pure tensors above the
  // bottom tensor, sorted by (size, rows).  Throws GuardExceeded.
  std::vector<Rel> enumerate_tensors(std::size_t guard = tensor_guard()) const;
  // All down-sets of the product order (the reference path for enumeration
  // cross-checks); same guard convention.
  std::vector<Rel> enumerate_downsets(std::size_t guard = tensor_guard()) const;
  // Reference enumeration: filter the down-sets through is_tensor.
  std::vector<Rel> enumerate_tensors_filter(
      std::size_t guard = tensor_guard()) const;

 private:
  AugmentedPoset l_, r_;
  std::vector<Mask> dotted_l_, dotted_r_;
  std::vector<Mask> delta_l_, delta_r_;  // truncated-side cuts per dotted member
};

// Inclusion order of a tensor family as a poset, labeled R0..Rk in a
// deterministic linear extension (R0 = bottom).
FinitePoset tensor_family_poset(const std::vector<Rel>& tensors);

// Relativization between the full product over (a,b) and the truncated one:
// Tics the obligatory cross off / on.  Validates tensor-hood on both ends.
Rel truncation_strip(const TensorBase& full_base, const TensorBase& trunc_base,
                     const Truncation& ta, const Truncation& tb, const Rel& t);
Rel truncation_extend(const TensorBase& full_base, const TensorBase& trunc_base,
                      const Truncation& ta, const Truncation& tb, const Rel& t);

// Antitone-map side of the correspondence for A_X (*) B with complete B.
// Maps are total tables over the FULL carriers (values = full B indices).
std::vector<int> tensor_to_map(const Truncation& ta, const Truncation& tb,
                               const Rel& t);
Rel map_to_tensor(const Truncation& ta, const Truncation& tb,
                  const std::vector<int>& f);

/// Tensor product of two closure spaces: relations whose slices are closed.
class SpaceTensorBase {
 public:
  SpaceTensorBase(ClosureSpace a, ClosureSpace b);
  const ClosureSpace& left() const { return a_; }
  const ClosureSpace& right() const { return b_; }

  bool is_tensor(const Rel& r) const;
  // Least space tensor containing r (alternating slice closure).
  Rel tensor_closure(const Rel& r) const;
  Rel pure_tensor(int x, int y) const;
  Rel bottom_tensor() const;  // the obligatory cross
  std::vector<Rel> enumerate_tensors(std::size_t guard = tensor_guard()) const;

 private:
  ClosureSpace a_, b_;
};

// The closed-set lattices of the two spaces as augmented posets (powerset
// family), i.e. the codomain base of the isomorphism below.
TensorBase closed_lattice_base(const SpaceTensorBase& sb);
// h : A (x) B -> CA (x) CB, T -> {(X,Y) closed : X x Y <= T}; the returned
// relation is indexed by the closed-set lattices.
Rel space_h_iso(const SpaceTensorBase& sb, const TensorBase& cb, const Rel& t);
// Explicit inverse: T = {(x,y) : h(x (x) y) <= script-T}.
Rel space_h_inv(const SpaceTensorBase& sb, const TensorBase& cb, const Rel& ht);
// Truncated variant C_AB (the full h followed by dropping bottom slices);
// lands in the truncated product of the closed-set lattices.
Rel space_c_iso(const SpaceTensorBase& sb, const TensorBase& cb,
                const Truncation& ta, const Truncation& tb, const Rel& t);

// Join-preserving extension of a separately continuous map f : A x B -> C
// (C a complete lattice): returns the table T -> join of f over T's pairs.
// Throws if f is not separately continuous, naming the violating slice.
struct BimorphismTable {
  std::vector<std::vector<int>> value;  // value[x][y] in C
};
void check_separately_continuous(const SpaceTensorBase& sb,
                                 const FinitePoset& c,
                                 const BimorphismTable& f);
int universal_extension(const SpaceTensorBase& sb, const FinitePoset& c,
                        const BimorphismTable& f, const Rel& t);

}  // namespace relq
