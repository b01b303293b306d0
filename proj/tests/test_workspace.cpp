#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "relq/workspace.hpp"

using namespace relq;

namespace {

const char* kSample = R"(# three-element chain and friends
poset C3
  elements 0 1 2
  covers 0<1 1<2
end

poset B4
  elements 0 a b 1
  covers 0<a 0<b a<1 b<1
end

space S
  points p q r
  closed {p q} {q r}
end

family F
  poset C3
  sets {} {1} {1 2}
end

family G
  poset B4
  builtin @powerset
end

relation R
  posets C3 C3
  pairs (2,1) (1,2)
end

map f
  posets B4 B4
  values 0:1 a:b b:a 1:0
end
)";

}  // namespace

TEST_CASE("parsing resolves every construct") {
  Workspace w = parse_workspace(kSample);
  CHECK(w.poset("C3").size() == 3);
  CHECK(w.poset("B4").props().boolean);
  CHECK(w.space("S").size() == 3);
  CHECK(w.family("F").family.members.size() == 3);
  CHECK(w.family("G").family.kind == SubsetFamily::Kind::Powerset);
  CHECK(w.map("f").values == std::vector<int>{3, 2, 1, 0});

  // (2,1) and (1,2) down-close by adding (1,1)
  const Rel& r = w.relation("R").rel;
  CHECK(rel_size(r) == 3);
  CHECK(rel_has(r, 1, 1));
  CHECK(rel_has(r, 2, 2) == false);
  CHECK(r.rows[0] == 0);  // nothing touches the bottom row
}

TEST_CASE("emit then parse is a fixed point") {
  Workspace w = parse_workspace(kSample);
  std::string once = emit_workspace(w);
  std::string twice = emit_workspace(parse_workspace(once));
  CHECK(once == twice);
  Workspace w2 = parse_workspace(twice);
  CHECK(w2.posets.size() == w.posets.size());
  CHECK(w2.relation("R").rel == w.relation("R").rel);
}

TEST_CASE("errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_workspace(text);
    } catch (const RelqError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("poset P\n  elements a\n  covers a<b\nend\n")
            .find("line") != std::string::npos);
  CHECK(message("bogus line\n").find("line 1") != std::string::npos);
  CHECK(message("poset P\n  elements a b\n  covers a<b\n")
            .find("unterminated") != std::string::npos);
  // cover cycles are rejected
  CHECK(message("poset P\n  elements a b\n  covers a<b b<a\nend\n") !=
        "no error");
  // family must reference a declared poset
  CHECK(message("family F\n  poset Q\n  builtin @powerset\nend\n")
            .find("unknown poset") != std::string::npos);
  // pairs may not touch the bottom
  CHECK(message("poset C\n  elements 0 1\n  covers 0<1\nend\n"
                "relation R\n  posets C C\n  pairs (1,0)\nend\n")
            .find("truncated") != std::string::npos);
}

TEST_CASE("duplicate pairs deduplicate") {
  Workspace w = parse_workspace(
      "poset C\n  elements 0 1\n  covers 0<1\nend\n"
      "relation R\n  posets C C\n  pairs (1,1) (1,1)\nend\n");
  CHECK(rel_size(w.relation("R").rel) == 1);
}

TEST_CASE("dot output lists covers only") {
  Workspace w = parse_workspace(kSample);
  std::string dot = dot_poset("B4", w.poset("B4"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);   // 0 -> a
  CHECK(dot.find("n0 -> n3") == std::string::npos);   // 0 -> 1 is not a cover
  std::string sdot = dot_space("S", w.space("S"));
  CHECK(sdot.find("{p q r}") != std::string::npos);
}
