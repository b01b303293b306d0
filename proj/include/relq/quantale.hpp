#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relq/tensor.hpp"

namespace relq {

// Relation composition: r over A x B, s over B x C, result over A x C.
Rel relation_product(const Rel& r, const Rel& s);

Rel principal_downset(const FinitePoset& a, const FinitePoset& b, int x, int y);

// Closed-form residuals for down-set relations.  b is the middle poset:
// r over A x B, t over A x C gives r -> t over B x C; s over B x C gives
// t <- s over A x B.  They satisfy r.s <= t iff s <= (r -> t) iff
// r <= (t <- s) for down-sets.
Rel residual_fwd(const FinitePoset& b, const Rel& r, const Rel& t);
Rel residual_bwd(const FinitePoset& b, const Rel& t, const Rel& s);

// Tensor-closed relation product; out_base is the base of the target product.
Rel odot(const TensorBase& out_base, const Rel& r, const Rel& s);

// A finite complete join-semilattice of relations with a multiplication,
// tabulated for law checking.  Elements are stored in a fixed linear
// extension of inclusion (size, then lexicographic), so index 0 is bottom.
class FiniteQuantale {
 public:
  using BinOp = std::function<Rel(const Rel&, const Rel&)>;

  // Throws RelqError when a product or join escapes the element family.
  FiniteQuantale(std::vector<Rel> elems, const BinOp& mult, const BinOp& join);

  int size() const { return static_cast<int>(elems_.size()); }
  const Rel& elem(int i) const { return elems_[i]; }
  const std::vector<Rel>& elems() const { return elems_; }
  int index_of(const Rel& r) const;  // throws if absent

  bool leq(int i, int j) const {
    return (leq_[i][static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1;
  }
  int mult(int i, int j) const { return mult_[i][j]; }
  int join(int i, int j) const { return join_[i][j]; }
  std::optional<int> meet(int i, int j) const;

  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  // Generic residuals by exhaustion: x -> z is the join of all y with
  // x.y <= z, and dually.  These are true residuals exactly when the
  // multiplication distributes over joins.
  int residual_fwd(int x, int z) const;
  int residual_bwd(int x, int z) const;

 private:
  std::vector<Rel> elems_;
  std::vector<std::vector<std::uint16_t>> mult_, join_;
  std::vector<std::vector<std::uint64_t>> leq_;  // row i: bitset of {j : i <= j}
};

struct LawReport {
  bool complete = true;     // every pair has a join and a meet, with 0 and 1
  bool prequantale = true;  // mult distributes over binary and empty joins
  bool quantale = true;     // prequantale and associative
  std::optional<int> unit;
  std::string witness;  // first violation, if any
};

// Checks distribution over binary joins and over the empty join (bottom
// annihilates); for a finite lattice that is equivalent to distribution
// over arbitrary joins.
LawReport quantale_laws(const FiniteQuantale& q);

struct NucleusReport {
  bool isotone = true;
  bool extensive = true;
  bool idempotent = true;
  bool prenucleus = true;  // isotone, extensive, j(a).b v a.j(b) <= j(a.b)
  bool nucleus = true;     // closure with j(a).j(b) <= j(a.b)
  std::string witness;
};

NucleusReport nucleus_laws(const FiniteQuantale& q, const std::vector<int>& j);

// The fixpoint set of j as a quantale in its own right, with
// x *_S y = least fixpoint above x.y; reports failures of meet-closedness
// or of the induced laws.
LawReport quotient_laws(const FiniteQuantale& q, const std::vector<int>& j);

// Per-element preclosure checks on a down-set quantale that is too large to
// enumerate: both conditions quantify over every down-set S, decided by
// reduction to principal down-sets (products distribute over the unions
// that build an arbitrary S from principals).
//
// prenucleus_at: step(r).S <= step(r.S) and S.step(r) <= step(S.r);
// nucleus_at: the same with the idempotent tensor closure, which for a
// closure operation is equivalent to closure(r).closure(s) <= closure(r.s).
bool prenucleus_at(const TensorBase& tb, const Rel& r, std::string* witness);
bool nucleus_at(const TensorBase& tb, const Rel& r, std::string* witness);

// Antitone-map utilities; maps are index vectors.
bool is_antitone(const FinitePoset& a, const FinitePoset& b,
                 const std::vector<int>& f);
// f turns arbitrary joins into meets, i.e. f is part of a Galois connection.
bool is_galois_map(const FinitePoset& a, const FinitePoset& b,
                   const std::vector<int>& f);
std::vector<std::vector<int>> enumerate_antitone_maps(const FinitePoset& a,
                                                      const FinitePoset& b);

// Composition of antitone maps through the generated tensor:
// (g o f)(x) = join of {z : (x, z) in E}, E the tensor generated by
// {(x, z) : exists y > 0 with f(x) >= y, g(y) >= z}.  a, b, c must be
// complete lattices.
std::vector<int> galois_compose(const FinitePoset& a, const FinitePoset& b,
                                const FinitePoset& c, const std::vector<int>& f,
                                const std::vector<int>& g);
// The generating relation of the composite, over A x C: pairs (x, z) with
// f(x) >= y and g(y) >= z for some non-bottom y.
Rel galois_compose_relation(const FinitePoset& b, const FinitePoset& c,
                            const std::vector<int>& f,
                            const std::vector<int>& g);

}  // namespace relq
