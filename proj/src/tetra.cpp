#include "musyn/tetra.hpp"

#include <algorithm>
#include <cmath>

#include "musyn/numerics.hpp"

namespace musyn {

namespace {

// g(z) = |x2 - x3 z|^2 - |1 - x1 z|^2; the defining expression has a zero on
// the closed bidisc iff g >= 0 somewhere on the closed disc.
double max_g_on_disc(const TetraPoint& x) {
  const double c2 = std::norm(x.x3) - std::norm(x.x1);
  const cplx beta = x.x1 - std::conj(x.x2) * x.x3;
  const double c0 = std::norm(x.x2) - 1.0;

  auto g = [&](cplx z) {
    return c2 * std::norm(z) + 2.0 * (beta * z).real() + c0;
  };

  const CircleMax bd =
      max_on_circle([&](double theta) { return g(std::polar(1.0, theta)); });
  double best = bd.value;

  // Radially concave case: a single interior critical point can beat the
  // boundary maximum.
  if (c2 < 0.0) {
    const cplx zc = -std::conj(beta) / c2;
    if (std::abs(zc) < 1.0) best = std::max(best, g(zc));
  }
  return best;
}

} // namespace

bool in_tetrablock(const TetraPoint& x, bool closed, double tol) {
  const double m = max_g_on_disc(x);
  return closed ? (m <= tol) : (m < -tol);
}

MuResult mu_diag2(const Mat2& A, double tol) {
  if (tol <= 0.0) throw DomainError("mu_diag2: tol must be > 0");
  const cplx d = A.det();
  if (A.a11 == cplx{0.0} && A.a22 == cplx{0.0} && d == cplx{0.0})
    return {0.0, 0.0, 0.0, MuResult::Method::ZeroCase};

  // Near-strict sign test: the default membership tolerance would bias the
  // boundary crossing by ~sqrt(tol) in the tangential-touch cases, while a
  // fully strict test flips on rounding noise when the defining function only
  // touches zero (e.g. diagonal matrices). 1e-14 sits above rounding and
  // below any detectable bias.
  auto member = [&](double t) {
    return in_tetrablock({A.a11 / t, A.a22 / t, d / (t * t)}, false, 1e-14);
  };

  double lo = std::max(spectral_radius(A), 1e-300);
  double hi = std::max(operator_norm(A), 1e-300);
  int widen = 0;
  while (member(lo)) {
    lo /= 2.0;
    if (++widen > 60) throw BracketError("mu_diag2: lower bracket widening failed");
  }
  widen = 0;
  while (!member(hi)) {
    hi *= 2.0;
    if (++widen > 60) throw BracketError("mu_diag2: upper bracket widening failed");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      hi = mid;
    else
      lo = mid;
  }
  return {0.5 * (lo + hi), lo, hi, MuResult::Method::Bisection};
}

} // namespace musyn
