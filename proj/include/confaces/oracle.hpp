#ifndef CONFACES_ORACLE_HPP
#define CONFACES_ORACLE_HPP

#include <string>
#include <vector>

#include "confaces/decide.hpp"
#include "confaces/system.hpp"

namespace confaces {

// Exact trajectory under a switching word; seminorms are non-increasing.
struct TrajectoryTrace {
  std::vector<RatVec> states;      // x(0..T)
  std::vector<Rational> seminorms; // one per state
  Word word;                       // the word actually applied (expanded)
};

// Applies the word `periods` times from x0. Word must be non-empty and
// x0 must have dimension n.
TrajectoryTrace simulate(const SwitchedSystem& sys, const RatVec& x0,
                         const Word& word, int periods);

std::string trace_to_csv(const TrajectoryTrace& t);

// The brute-force checks recompute every face classification from raw
// matrix products; they never touch FaceGraph, so agreement with the
// decide module is a genuine cross-check. Work is metered in path
// expansions; exceeding the budget throws CapacityError suggesting the
// graph path.
struct OracleOptions {
  long long step_budget = 10'000'000;
};

// Negative iff some word of length <= N maps some proper face pair back
// into itself with all intermediate faces proper. Searches depth-first,
// pruning branches that reach the interior; a negative verdict carries the
// lexicographically smallest witness word for the smallest face.
Verdict brute_force_problem1(const SwitchedSystem& sys,
                             const OracleOptions& opts = {});

// Positive iff every proper face pair has a word of length <= N steering
// its representative into the interior; per-face words are the first found
// in breadth-first order.
Verdict brute_force_problem2(const SwitchedSystem& sys,
                             const OracleOptions& opts = {});

// Largest seminorm of (product of any word of length N) * v over all face
// representatives v. Requires a positive Problem 1 system; then r < 1 and
// every trajectory from a representative obeys seminorm(x(t)) <= r^floor(t/N).
Rational decay_certificate(const SwitchedSystem& sys,
                           const OracleOptions& opts = {});

}  // namespace confaces

#endif  // CONFACES_ORACLE_HPP
