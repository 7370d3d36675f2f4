#pragma once

#include <utility>
#include <vector>

#include "musyn/construct.hpp"
#include "musyn/gamma.hpp"
#include "musyn/polynomial.hpp"
#include "musyn/types.hpp"

namespace musyn {

struct GridSpec {
  int radial_n = 101;
  int angular_n = 101;
};

struct VerificationReport {
  double max_spectral_radius_on_grid;
  std::vector<double> interpolation_residuals;
  GridSpec grid;
  double residual_tol;
  double grid_tol;

  // pass is derived from the fields, never stored.
  bool pass() const;
};

// Sampling check that h = (s, p) maps the disc into closed Gamma and meets
// the interpolation constraints. Necessary-only, by sampling.
VerificationReport verify_gamma_map(
    const RationalFunction& s, const RationalFunction& p,
    const std::vector<std::pair<cplx, GammaPoint>>& constraints,
    GridSpec grid = {}, double residual_tol = tols::verify_residual,
    double grid_tol = tols::verify_grid);

VerificationReport verify_spectral_interpolant(
    const MatrixInterpolant& F,
    const std::vector<std::pair<cplx, Mat2>>& constraints, GridSpec grid = {},
    double residual_tol = tols::verify_residual,
    double grid_tol = tols::verify_grid);

// f(lambda) = (2(1-beta) lambda / (1 - beta lambda),
//              lambda (lambda - beta) / (1 - beta lambda)); the Gamma-valued
// witness behind the ill-conditioned two-point family.
std::pair<RationalFunction, RationalFunction> witness_illconditioned(cplx beta);

// h(lambda) = (2(1-r) lambda^2 / (1 + r lambda^3),
//              lambda (lambda^3 + r) / (1 + r lambda^3)); generator of
// solvable three-point Gamma data.
std::pair<RationalFunction, RationalFunction> witness_threepoint(double r);

} // namespace musyn
