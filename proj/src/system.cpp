#include "confaces/system.hpp"

namespace confaces {

void validate_system(const SwitchedSystem& sys) {
  if (sys.n < 2) throw DimensionError("system dimension must be at least 2");
  if (sys.matrices.empty()) {
    throw ValidationError("system has no matrices", -1,
                          ValidationKind::DimensionMismatch);
  }
  for (int i = 0; i < sys.m(); ++i) {
    const RatMatrix& a = sys.matrices[i];
    if (a.n() != sys.n) {
      throw ValidationError("matrix " + std::to_string(i) + " is " +
                                std::to_string(a.n()) + "x" +
                                std::to_string(a.n()) + ", system dimension is " +
                                std::to_string(sys.n),
                            i, ValidationKind::DimensionMismatch);
    }
    if (!check_fixed_vector(a)) {
      throw ValidationError("matrix " + std::to_string(i) +
                                " does not fix the all-ones vector (some row "
                                "sum differs from 1)",
                            i, ValidationKind::FixedVectorViolated);
    }
    Rational s = dobrushin_seminorm(a);
    if (s > 1) {
      throw ValidationError("matrix " + std::to_string(i) +
                                " can expand the distance to consensus: "
                                "induced seminorm " +
                                to_string(s) + " exceeds 1",
                            i, ValidationKind::SeminormExceeded, to_string(s));
    }
  }
}

}  // namespace confaces
