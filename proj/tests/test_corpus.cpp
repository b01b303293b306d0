#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "relq/corpus.hpp"

using namespace relq;

TEST_CASE("lattice census counts per size") {
  int expect[] = {0, 1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n)
    CHECK(lattices_of_size(n).size() == static_cast<std::size_t>(expect[n]));
  CHECK_THROWS_AS(lattices_of_size(8), RelqError);
}

TEST_CASE("every generated member is a complete lattice") {
  for (int n = 1; n <= 6; ++n)
    for (const FinitePoset& p : lattices_of_size(n)) {
      CHECK(p.props().complete_lattice);
      CHECK(p.size() == n);
    }
}

TEST_CASE("census of size five covers the two non-distributive lattices") {
  int non_distributive = 0;
  for (const FinitePoset& p : lattices_of_size(5))
    non_distributive += !p.props().distributive;
  CHECK(non_distributive == 2);  // exactly M3 and N5
}

TEST_CASE("generation is deterministic") {
  Corpus a = generate_corpus(6), b = generate_corpus(6);
  REQUIRE(a.posets.size() == b.posets.size());
  for (std::size_t i = 0; i < a.posets.size(); ++i) {
    CHECK(a.posets[i].name == b.posets[i].name);
    CHECK(a.posets[i].poset.size() == b.posets[i].poset.size());
    for (int x = 0; x < a.posets[i].poset.size(); ++x)
      CHECK(a.posets[i].poset.below(x) == b.posets[i].poset.below(x));
  }
}

TEST_CASE("curated corpus has the promised members") {
  Corpus c = curated_corpus();
  auto find = [&](const std::string& name) -> const FinitePoset* {
    for (const auto& m : c.posets)
      if (m.name == name) return &m.poset;
    return nullptr;
  };
  for (const char* name : {"CHAIN2", "CHAIN3", "CHAIN4", "B4", "B8", "M3",
                           "N5", "ANTICHAIN2", "ANTICHAIN3", "EX91"})
    CHECK(find(name) != nullptr);
  CHECK(find("EX91")->size() == 8);
  CHECK(find("EX91")->props().boolean);
  CHECK(find("EX91")->index_of("a") >= 0);
  CHECK(!c.spaces.empty());
}
