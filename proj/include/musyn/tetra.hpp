#pragma once

#include "musyn/types.hpp"

namespace musyn {

// Point of C^3 in (a11, a22, det) coordinates.
struct TetraPoint {
  cplx x1{0.0};
  cplx x2{0.0};
  cplx x3{0.0};
};

// Membership in the tetrablock: 1 - x1 z - x2 w + x3 z w nonvanishing on the
// closed bidisc. Reduced to a one-variable maximization over |z| <= 1.
bool in_tetrablock(const TetraPoint& x, bool closed,
                   double tol = tols::membership);

struct MuResult {
  enum class Method { ZeroCase, Bisection };
  double value;
  double lo;
  double hi;
  Method method;
};

// Structured singular value of A relative to 2x2 diagonal uncertainty, via
// homogeneity and bisection of the tetrablock membership test.
MuResult mu_diag2(const Mat2& A, double tol = 1e-8);

} // namespace musyn
