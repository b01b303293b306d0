#pragma once

#include <string>
#include <vector>

#include "relq/closure_space.hpp"
#include "relq/poset.hpp"

namespace relq {

struct PosetMember {
  std::string name;
  FinitePoset poset;
  std::string provenance;  // "curated" or "generated(n)"
};

struct SpaceMember {
  std::string name;
  ClosureSpace space;
  std::string provenance;
};

struct Corpus {
  std::vector<PosetMember> posets;
  std::vector<SpaceMember> spaces;
};

// Fixed reference posets (chains, antichains, boolean algebras, the two
// minimal non-distributive lattices) and a handful of closure spaces.
Corpus curated_corpus();

// The curated corpus merged with every lattice of at most max_size elements,
// one representative per isomorphism class, in a deterministic order.
// max_size is capped at 7.
Corpus generate_corpus(int max_size);

// All lattices with exactly n elements up to isomorphism.
std::vector<FinitePoset> lattices_of_size(int n);

}  // namespace relq
