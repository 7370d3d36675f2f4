#include "musyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "musyn/numerics.hpp"

namespace musyn {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kGridRadius = 1.0 - 1e-6;

template <typename F>
double grid_max(const GridSpec& grid, F&& radius_at) {
  double m = 0.0;
  for (int i = 0; i < grid.radial_n; ++i) {
    const double r =
        grid.radial_n == 1 ? 0.0 : kGridRadius * i / (grid.radial_n - 1);
    for (int j = 0; j < grid.angular_n; ++j) {
      const cplx lambda = std::polar(r, two_pi * j / grid.angular_n);
      m = std::max(m, radius_at(lambda));
      if (r == 0.0) break;
    }
  }
  return m;
}

// Durand-Kerner root iteration; the degrees involved are tiny.
std::vector<cplx> poly_roots(const Polynomial& q) {
  const int n = q.degree();
  if (n <= 0) return {};
  const cplx lead = q.coeff(n);
  std::vector<cplx> r(n);
  for (int i = 0; i < n; ++i) r[i] = std::polar(0.7, 0.4 + two_pi * i / n);
  for (int it = 0; it < 300; ++it) {
    double delta = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx den = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= r[i] - r[j];
      const cplx step = q.eval(r[i]) / (lead * den);
      r[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-13) break;
  }
  return r;
}

void check_no_pole(const RationalFunction& f) {
  for (const cplx& z : poly_roots(f.den()))
    if (std::abs(z) <= kGridRadius)
      throw EvaluationError("verify: denominator has a zero inside the disc");
}

cplx eval_checked(const RationalFunction& f, cplx lambda) {
  const double scale = std::max(f.den().coeff_scale(), 1e-300);
  if (std::abs(f.den().eval(lambda)) <= 1e-12 * scale)
    throw EvaluationError("verify: denominator vanishes inside the disc");
  return f.eval(lambda);
}

} // namespace

bool VerificationReport::pass() const {
  if (max_spectral_radius_on_grid > 1.0 + grid_tol) return false;
  for (const double r : interpolation_residuals)
    if (r > residual_tol) return false;
  return true;
}

VerificationReport verify_gamma_map(
    const RationalFunction& s, const RationalFunction& p,
    const std::vector<std::pair<cplx, GammaPoint>>& constraints, GridSpec grid,
    double residual_tol, double grid_tol) {
  check_no_pole(s);
  check_no_pole(p);
  const double m = grid_max(grid, [&](cplx lambda) {
    const cplx sv = eval_checked(s, lambda);
    const cplx pv = eval_checked(p, lambda);
    const auto [r1, r2] = char_roots(sv, pv);
    return std::max(std::abs(r1), std::abs(r2));
  });
  std::vector<double> residuals;
  for (const auto& [node, target] : constraints) {
    residuals.push_back(std::hypot(std::abs(eval_checked(s, node) - target.s),
                                   std::abs(eval_checked(p, node) - target.p)));
  }
  return {m, std::move(residuals), grid, residual_tol, grid_tol};
}

VerificationReport verify_spectral_interpolant(
    const MatrixInterpolant& F, const std::vector<std::pair<cplx, Mat2>>& constraints,
    GridSpec grid, double residual_tol, double grid_tol) {
  for (const auto& e : F.entries) check_no_pole(e);
  const double m = grid_max(grid, [&](cplx lambda) {
    const Mat2 M{eval_checked(F.entries[0], lambda),
                 eval_checked(F.entries[1], lambda),
                 eval_checked(F.entries[2], lambda),
                 eval_checked(F.entries[3], lambda)};
    return spectral_radius(M);
  });
  std::vector<double> residuals;
  for (const auto& [node, target] : constraints) {
    Mat2 M{eval_checked(F.entries[0], node), eval_checked(F.entries[1], node),
           eval_checked(F.entries[2], node), eval_checked(F.entries[3], node)};
    residuals.push_back((M - target).frob());
  }
  return {m, std::move(residuals), grid, residual_tol, grid_tol};
}

std::pair<RationalFunction, RationalFunction> witness_illconditioned(cplx beta) {
  const double ab = std::abs(beta);
  if (ab == 0.0 || ab >= 1.0)
    throw DomainError("witness_illconditioned: need 0 < |beta| < 1");
  const Polynomial den({cplx{1.0}, -beta});
  return {RationalFunction(Polynomial({cplx{0.0}, 2.0 * (1.0 - beta)}), den),
          RationalFunction(Polynomial({cplx{0.0}, -beta, cplx{1.0}}), den)};
}

std::pair<RationalFunction, RationalFunction> witness_threepoint(double r) {
  if (r <= 0.0 || r >= 1.0)
    throw DomainError("witness_threepoint: need 0 < r < 1");
  const Polynomial den({cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{r}});
  return {RationalFunction(
              Polynomial({cplx{0.0}, cplx{0.0}, cplx{2.0 * (1.0 - r)}}), den),
          RationalFunction(
              Polynomial({cplx{0.0}, cplx{r}, cplx{0.0}, cplx{0.0}, cplx{1.0}}),
              den)};
}

} // namespace musyn
