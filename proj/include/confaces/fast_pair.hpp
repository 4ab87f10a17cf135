#ifndef CONFACES_FAST_PAIR_HPP
#define CONFACES_FAST_PAIR_HPP

#include <vector>

#include "confaces/decide.hpp"
#include "confaces/rational.hpp"

namespace confaces {

// Positivity pattern of a stochastic matrix, viewed as a digraph on the
// agents (edge i -> j iff a_ij > 0).
struct StochasticPattern {
  int n = 0;
  std::vector<bool> adj;  // row-major n*n

  bool at(int i, int j) const { return adj[i * n + j]; }
};

StochasticPattern pattern_of(const RatMatrix& a);

// Nonnegative, rows sum to 1, and a_ij > 0 iff a_ji > 0.
bool is_undirected_stochastic(const RatMatrix& a);

// Every diagonal entry of A*A is positive. Holds for every undirected
// stochastic A: i has some neighbor j with a_ij > 0, and a_ji > 0 feeds
// back into the diagonal.
bool square_has_positive_diagonal(const RatMatrix& a);

// Powers of a stochastic B drive every state to consensus iff B's pattern
// digraph has exactly one closed communicating class and that class is
// aperiodic (gcd of its cycle lengths is 1). Exact and polynomial; throws
// PreconditionError on non-stochastic input.
bool power_converges_to_consensus(const RatMatrix& b);

// Problem 1 for a pair of undirected stochastic matrices, polynomial in n:
// true iff powers of A1, of A2, and of A2*A1 each converge to consensus.
// The alternating sequence generates products ...A2*A1*A2*A1, hence the
// third check multiplies in that order. Negative verdicts name the failing
// sequence (sigma1, sigma2, or sigma3) instead of a face witness.
// Throws PreconditionError when a matrix is not undirected stochastic.
Verdict decide_two_undirected(const RatMatrix& a1, const RatMatrix& a2);

}  // namespace confaces

#endif  // CONFACES_FAST_PAIR_HPP
