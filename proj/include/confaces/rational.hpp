#ifndef CONFACES_RATIONAL_HPP
#define CONFACES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "confaces/errors.hpp"

namespace confaces {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms with a
// positive denominator, so equality and sign tests are exact everywhere.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q > 0).
/// Anything else, including decimals and whitespace, is rejected.
Rational parse_rational(std::string_view s);

/// Canonical text form, "p" or "p/q".
std::string to_string(const Rational& r);

/// Parses a comma-separated list of rationals, e.g. "1,-1,1/2".
RatVec parse_rational_vector(std::string_view s);

std::string to_string(const RatVec& x);

/// Square rational matrix, row-major, n >= 2.
class RatMatrix {
 public:
  explicit RatMatrix(int n);

  static RatMatrix identity(int n);
  /// Builds a matrix from rational strings, one vector<string> per row.
  static RatMatrix from_strings(const std::vector<std::vector<std::string>>& rows);

  int n() const { return n_; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool operator==(const RatMatrix&) const = default;

 private:
  int n_;
  std::vector<Rational> e_;
};

/// Distance to consensus: (max_i x_i - min_i x_i) / 2. Zero exactly on
/// consensus states (all components equal).
Rational consensus_seminorm(const RatVec& x);

/// True iff every row of a sums to 1 exactly (1 is a fixed vector of a).
bool check_fixed_vector(const RatMatrix& a);

/// Induced operator seminorm of a with respect to the consensus seminorm:
/// max over row pairs (i, j) of sum_k |a_ik - a_jk| / 2. Valid only when
/// rows sum to 1; the weak-Lyapunov assumption holds iff the result is <= 1.
Rational dobrushin_seminorm(const RatMatrix& a);

/// Exact matrix-vector product.
RatVec mat_apply(const RatMatrix& a, const RatVec& x);

/// Exact matrix product a*b.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

}  // namespace confaces

#endif  // CONFACES_RATIONAL_HPP
