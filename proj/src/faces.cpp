#include "confaces/faces.hpp"

namespace confaces {

std::string face_to_string(const FaceId& f) {
  if (f.empty()) return "int";
  std::string s;
  s.reserve(f.size());
  for (std::int8_t v : f) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

FaceId face_from_string(const std::string& s, int n) {
  if (s == "int") return {};
  if (static_cast<int>(s.size()) != n) {
    throw ParseError("face string '" + s + "' has length " +
                     std::to_string(s.size()) + ", expected " +
                     std::to_string(n));
  }
  FaceId f(s.size());
  bool plus = false;
  bool minus = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '+': f[i] = 1; plus = true; break;
      case '-': f[i] = -1; minus = true; break;
      case '0': f[i] = 0; break;
      default:
        throw ParseError("face string '" + s + "': expected '+', '-' or '0'");
    }
  }
  if (!plus || !minus) {
    throw ParseError("face string '" + s +
                     "' needs at least one '+' and one '-'");
  }
  return f;
}

FaceId face_negate(const FaceId& f) {
  FaceId g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = -f[i];
  return g;
}

bool face_is_canonical(const FaceId& f) {
  for (std::int8_t v : f) {
    if (v != 0) return v > 0;
  }
  return true;  // interior
}

FaceId face_canonicalize(const FaceId& f) {
  return face_is_canonical(f) ? f : face_negate(f);
}

FaceCensus face_census(int n) {
  if (n < 2) throw DimensionError("face census needs dimension >= 2");
  FaceCensus c;
  c.n = n;
  mpz_class p3, p2;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n) + 1);
  c.total_faces = p3 - p2 + 2;
  c.proper_pairs = (p3 - p2 + 1) / 2;
  return c;
}

FaceId classify_point(const RatVec& x) {
  if (x.size() < 2) throw DimensionError("classify_point needs dimension >= 2");
  Rational max = x[0];
  Rational min = x[0];
  for (const Rational& v : x) {
    if (v > max) max = v;
    if (v < min) min = v;
  }
  Rational spread = max - min;  // seminorm * 2
  if (spread > 2) {
    throw OutsidePolyhedronError("point " + to_string(x) +
                                 " lies outside the polyhedron (seminorm " +
                                 to_string(spread / 2) + " > 1)");
  }
  if (spread < 2) return {};
  // Boundary: +1 on the maximal components, -1 on the minimal ones, 0 in
  // between. This is the shift-and-round construction in exact arithmetic.
  FaceId f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    f[i] = x[i] == max ? 1 : (x[i] == min ? -1 : 0);
  }
  return face_canonicalize(f);
}

RatVec representative_point(const FaceId& f, int n) {
  if (!f.empty() && static_cast<int>(f.size()) != n) {
    throw DimensionError("face has dimension " + std::to_string(f.size()) +
                         ", expected " + std::to_string(n));
  }
  RatVec v(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = static_cast<int>(f[i]);
  return v;
}

std::vector<FaceId> enumerate_faces(int n, int n_max) {
  if (n < 2) throw DimensionError("face enumeration needs dimension >= 2");
  if (n > n_max) {
    throw CapacityError("face enumeration for n = " + std::to_string(n) +
                        " needs 3^n = 3^" + std::to_string(n) +
                        " sign vectors, beyond the guard n_max = " +
                        std::to_string(n_max));
  }
  std::vector<FaceId> out;
  // Odometer over {-1,0,1}^n in lexicographic order; keep canonical members
  // of V (first nonzero is +1 and some -1 follows).
  FaceId v(static_cast<std::size_t>(n), -1);
  for (;;) {
    bool plus = false;
    bool minus = false;
    bool canonical = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0 && !plus && !minus) canonical = v[i] > 0;
      if (v[i] > 0) plus = true;
      if (v[i] < 0) minus = true;
    }
    if (plus && minus && canonical) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == 1) v[i--] = -1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace confaces
