#pragma once

#include <string>
#include <vector>

#include "relq/corpus.hpp"
#include "relq/quantale.hpp"
#include "relq/workspace.hpp"

namespace relq {

enum class Verdict { Pass, Fail, Skip };

struct MemberReport {
  std::string member;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;  // witness / replay lines
};

struct SuiteReport {
  std::string id;
  std::vector<MemberReport> members;

  int passed() const;
  int total() const;  // skipped members do not count towards the total
  bool ok() const { return passed() == total(); }
  std::string to_text() const;  // MEMBER lines plus the SUITE summary line
};

// Known ids: thm32 thm71 thm83 cor91 lem101 (closure spaces);
// prop71 cor71 thm81 thm82 lem82 prop91 thm91 (posets);
// prop21 prop51 ex11 ex81 ex91 (quantales, round trips, replays).
std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& id, const Corpus& corpus,
                      unsigned seed = 1);

// Intersection of every enumerated tensor containing r: the independent
// oracle for tensor_closure.
Rel brute_least_tensor(const TensorBase& tb, const Rel& r,
                       std::size_t guard = tensor_guard());

// Searches lower relations with t(R) != t(t(R)); exhaustive on small bases,
// seeded sampling elsewhere.
SuiteReport idempotency_witness_search(unsigned seed = 1, int samples = 10000);

// Exhaustive one-sided distribution checks of the preclosure against every
// down-set of the base, via reduction to principal down-sets grouped by
// rows; equivalent to checking prenucleus_at / nucleus_at on every R but
// a great deal faster.  Falls back from enumeration to nothing: callers
// handle GuardExceeded themselves.
bool prenucleus_global(const TensorBase& tb, std::size_t guard,
                       std::string* witness);
bool nucleus_global(const TensorBase& tb, std::size_t guard,
                    std::string* witness);

// Seeded deterministic down-set sample over the base's truncated square.
std::vector<Rel> sample_downsets(const TensorBase& tb, int count,
                                 unsigned seed);

// Remove pairs from a failing witness while the predicate keeps failing.
template <typename Pred>
Rel shrink_witness(Rel r, Pred&& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [x, y] : rel_pairs(r)) {
      Rel smaller = r;
      smaller.rows[x] &= ~bit(y);
      if (fails(smaller)) {
        r = smaller;
        changed = true;
      }
    }
  }
  return r;
}

// The canonical table text of a truncated square's multiplication, elements
// named R0..Rk smallest first (R0 is the empty relation).
std::string mult_table_text(const TensorBase& tb,
                            std::size_t guard = tensor_guard());

}  // namespace relq
