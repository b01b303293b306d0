// One line per acceptance criterion.  Exits 0 when every criterion matches
// its documented expectation: 1-6 and 8-10 must pass outright; criterion 7
// is expected to fail, because the replayed involution composite on finite
// chains is provably not the constant-top map (the suite reports the
// corrected value), and we refuse to assert a falsified identity.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>

#include "relq/completion.hpp"
#include "relq/suites.hpp"

using namespace relq;
using clock_t_ = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

bool has_note(const SuiteReport& sr, const std::string& member,
              const std::string& needle) {
  for (const auto& m : sr.members)
    if (m.member == member)
      for (const auto& n : m.notes)
        if (n.find(needle) != std::string::npos) return true;
  return false;
}

void report(int criterion, bool pass, bool expect_pass, double dt,
            const std::string& detail) {
  bool as_expected = pass == expect_pass;
  if (!as_expected) ++failures;
  const char* verdict = pass            ? "PASS           "
                        : !expect_pass  ? "FAIL (expected)"
                                        : "FAIL           ";
  std::printf("CRITERION %2d %s [%5.1fs]  %s\n", criterion, verdict, dt,
              detail.c_str());
}

}  // namespace

int main() {
  Corpus curated = curated_corpus();

  {  // 1: replayed 6x6 multiplication table of the truncated 3-chain square
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("ex81", curated);
    double dt = seconds_since(t0);
    report(1, sr.ok() && dt < 1.0, true, dt,
           "36-cell table, laws, non-commutativity witness, no unit");
  }

  {  // 2: five-condition agreement across every lattice with <= 6 elements
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("thm82", generate_corpus(6));
    double dt = seconds_since(t0);
    bool witnessed = has_note(sr, "M3", "distribution witness");
    report(2, sr.ok() && witnessed && dt < 60.0, true, dt,
           std::to_string(sr.total()) +
               " members agree; diamond fails all five with witness");
  }

  {  // 3: atom-diagonal units and the relation-quantale isomorphism
    auto t0 = clock_t_::now();
    SuiteReport a = run_suite("prop91", curated);
    SuiteReport b = run_suite("thm91", curated);
    report(3, a.ok() && b.ok(), true, seconds_since(t0),
           "units on boolean squares, none on chain/diamond, table "
           "isomorphism to full relation quantales");
  }

  {  // 4: space-to-lattice isomorphism round trips
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("thm32", curated);
    double dt = seconds_since(t0);
    report(4, sr.ok() && sr.total() >= 5 && dt < 10.0, true, dt,
           std::to_string(sr.total()) + " space pairs, h and truncation "
           "bijective both ways");
  }

  {  // 5: residual formulas against brute force
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("lem41", curated);
    report(5, sr.ok(), true, seconds_since(t0),
           "residuals match exhaustive triples on the chain and B4 squares");
  }

  {  // 6: one-step inclusion, closure equation, associativity across a triple
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("lem82", curated);
    report(6, sr.ok(), true, seconds_since(t0),
           "step inclusion, closure equation and cross-base associativity");
  }

  {  // 7: antitone composition on chains -- the involution identity is false
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("ex11", curated);
    std::set<std::string> failing, expected_failing = {
        "CHAIN3-involutions", "CHAIN4-involutions", "CHAIN5-involutions",
        "CHAIN6-involutions"};
    for (const auto& m : sr.members)
      if (m.verdict == Verdict::Fail) failing.insert(m.member);
    // the closed-form half must hold and the involution half must fail with
    // the corrected composite reported
    bool shape = failing == expected_failing &&
                 sr.passed() == sr.total() - 4 &&
                 has_note(sr, "CHAIN4-involutions", "computed composite");
    if (!shape) ++failures;
    report(7, sr.ok(), false, seconds_since(t0),
           shape ? "closed form holds; involution composite is top,s,..,s,0 "
                   "rather than constant top (reported, not asserted)"
                 : "UNEXPECTED failure shape");
  }

  {  // 8: atom-disjointness replay plus the idempotency search
    auto t0 = clock_t_::now();
    SuiteReport a = run_suite("ex91", curated);
    SuiteReport b = idempotency_witness_search(1, 10000);
    double dt = seconds_since(t0);
    bool replayed = has_note(a, "EX91", "transcribed") &&
                    has_note(a, "EX91", "t(t(R))");
    report(8, a.ok() && b.ok() && replayed && dt < 120.0, true, dt,
           "fast path == oracle, printed values reported; idempotency "
           "search over 8 bases");
  }

  {  // 9: eight-condition agreement under directed and finite families
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("thm81", curated);
    int directed = 0, finite = 0;
    for (const auto& m : sr.members) {
      if (m.member.find("/@directed") != std::string::npos) ++directed;
      if (m.member.find("/@finite") != std::string::npos) ++finite;
    }
    // at least one member distributive at the bottom yet not
    // pseudocomplemented, per family
    int extra = 0;
    for (const auto& pm : curated.posets)
      if (pm.poset.size() <= 8 && !pm.poset.props().pseudocomplemented &&
          bottom_distributivity(
              {pm.poset, builtin_family("@directed", pm.poset)}))
        ++extra;
    report(9, sr.ok() && directed >= 10 && finite >= 10 && extra >= 1, true,
           seconds_since(t0),
           std::to_string(directed) + "+" + std::to_string(finite) +
               " members; " + std::to_string(extra) +
               " bottom-distributive non-pseudocomplemented");
  }

  {  // 10: generated-case law suites
    auto t0 = clock_t_::now();
    SuiteReport sr = run_suite("laws", curated);
    bool counts = true;
    for (const auto& m : sr.members) counts = counts && has_note(sr, m.member, "cases: 1000");
    report(10, sr.ok() && counts, true, seconds_since(t0),
           std::to_string(sr.total()) + " law suites, 1000 cases each");
  }

  if (failures) std::printf("ACCEPTANCE: %d criteria off expectation\n", failures);
  else std::printf("ACCEPTANCE: all criteria match expectations\n");
  return failures ? 1 : 0;
}
