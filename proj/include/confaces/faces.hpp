#ifndef CONFACES_FACES_HPP
#define CONFACES_FACES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "confaces/rational.hpp"

namespace confaces {

// Sign pattern naming a pair of opposite proper open faces of the
// consensus-seminorm unit ball: one entry per coordinate in {-1,0,+1},
// with at least one +1 and one -1. The empty vector denotes the interior.
// Canonical member of a pair: first nonzero sign is +1.
using FaceId = std::vector<std::int8_t>;

inline bool face_is_interior(const FaceId& f) { return f.empty(); }

// Text form: "int" for the interior, otherwise one of "+0-" per entry.
std::string face_to_string(const FaceId& f);
FaceId face_from_string(const std::string& s, int n);

FaceId face_negate(const FaceId& f);
bool face_is_canonical(const FaceId& f);
FaceId face_canonicalize(const FaceId& f);

struct FaceCensus {
  int n = 0;
  mpz_class total_faces;  // 3^n - 2^(n+1) + 2
  mpz_class proper_pairs; // (3^n - 2^(n+1) + 1) / 2
};

FaceCensus face_census(int n);

// Face containing a point of P. Interior when the seminorm is < 1;
// on the boundary, +1 marks the maximal components, -1 the minimal ones,
// everything strictly between rounds to 0. O(n) exact comparisons.
// Throws OutsidePolyhedronError when the seminorm exceeds 1.
FaceId classify_point(const RatVec& x);

// The sign vector itself, which lies in the face it names; the interior
// gets the origin.
RatVec representative_point(const FaceId& f, int n);

// All canonical proper pairs, lexicographic over sign vectors with
// -1 < 0 < +1. Throws CapacityError when n exceeds n_max.
std::vector<FaceId> enumerate_faces(int n, int n_max = 12);

}  // namespace confaces

#endif  // CONFACES_FACES_HPP
