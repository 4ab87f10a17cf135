#include "confaces/rational.hpp"

#include <cctype>
#include <sstream>

namespace confaces {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string_view rest = s;
  if (!rest.empty() && rest.front() == '-') rest.remove_prefix(1);
  std::string_view num = rest;
  std::string_view den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!all_digits(den)) {
      throw ParseError("invalid rational '" + std::string(s) +
                       "': denominator must be decimal digits");
    }
  }
  if (!all_digits(num)) {
    throw ParseError("invalid rational '" + std::string(s) +
                     "': expected p or p/q with decimal digits");
  }
  mpz_class n(std::string(num), 10);
  if (s.front() == '-') n = -n;
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) {
      throw ParseError("invalid rational '" + std::string(s) +
                       "': denominator is zero");
    }
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

RatVec parse_rational_vector(std::string_view s) {
  RatVec out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string_view item = s.substr(pos, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const RatVec& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << to_string(x[i]);
  }
  os << ")";
  return os.str();
}

RatMatrix::RatMatrix(int n) : n_(n) {
  if (n < 2) throw DimensionError("matrix dimension must be at least 2");
  e_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix a(n);
  for (int i = 0; i < n; ++i) a.at(i, i) = 1;
  return a;
}

RatMatrix RatMatrix::from_strings(const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(rows.size());
  RatMatrix a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw DimensionError("matrix row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (int j = 0; j < n; ++j) a.at(i, j) = parse_rational(rows[i][j]);
  }
  return a;
}

Rational consensus_seminorm(const RatVec& x) {
  if (x.empty()) throw DimensionError("consensus_seminorm of an empty vector");
  Rational max = x[0];
  Rational min = x[0];
  for (const Rational& v : x) {
    if (v > max) max = v;
    if (v < min) min = v;
  }
  return (max - min) / 2;
}

bool check_fixed_vector(const RatMatrix& a) {
  for (int i = 0; i < a.n(); ++i) {
    Rational sum(0);
    for (int j = 0; j < a.n(); ++j) sum += a.at(i, j);
    if (sum != 1) return false;
  }
  return true;
}

Rational dobrushin_seminorm(const RatMatrix& a) {
  if (!check_fixed_vector(a)) {
    throw PreconditionError(
        "dobrushin_seminorm requires rows summing to 1; the closed form is "
        "only valid then");
  }
  // Row-difference functionals annihilate 1, so the sup over the seminorm
  // unit ball reduces to the box [-1,1]^n, maximized at a sign vertex.
  Rational best(0);
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i + 1; j < a.n(); ++j) {
      Rational sum(0);
      for (int k = 0; k < a.n(); ++k) sum += abs(a.at(i, k) - a.at(j, k));
      if (sum > best) best = sum;
    }
  }
  return best / 2;
}

RatVec mat_apply(const RatMatrix& a, const RatVec& x) {
  if (static_cast<int>(x.size()) != a.n()) {
    throw DimensionError("mat_apply: vector has dimension " +
                         std::to_string(x.size()) + ", matrix is " +
                         std::to_string(a.n()) + "x" + std::to_string(a.n()));
  }
  RatVec y(x.size(), Rational(0));
  for (int i = 0; i < a.n(); ++i) {
    Rational sum(0);
    for (int j = 0; j < a.n(); ++j) sum += a.at(i, j) * x[j];
    y[i] = sum;
  }
  return y;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("mat_mul: dimension mismatch");
  RatMatrix c(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      Rational sum(0);
      for (int k = 0; k < a.n(); ++k) sum += a.at(i, k) * b.at(k, j);
      c.at(i, j) = sum;
    }
  }
  return c;
}

}  // namespace confaces
