#ifndef CONFACES_SYSTEM_HPP
#define CONFACES_SYSTEM_HPP

#include <string>
#include <vector>

#include "confaces/rational.hpp"

namespace confaces {

// A finite family of update matrices sharing the all-ones fixed vector and
// nonexpansive in the consensus seminorm. Labels index into matrices; the
// trajectory under a switching word w is x(t+1) = matrices[w[t]] * x(t).
struct SwitchedSystem {
  int n = 0;
  std::vector<RatMatrix> matrices;
  std::vector<std::string> labels;

  int m() const { return static_cast<int>(matrices.size()); }
};

// Checks every matrix: square of dimension n, rows sum to 1, Dobrushin
// seminorm at most 1. Throws ValidationError naming the first offender.
void validate_system(const SwitchedSystem& sys);

}  // namespace confaces

#endif  // CONFACES_SYSTEM_HPP
