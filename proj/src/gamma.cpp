#include "musyn/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace musyn {

cplx phi(cplx omega, const GammaPoint& z) {
  const cplx den = 2.0 - omega * z.s;
  if (std::abs(den) == 0.0)
    throw PoleError("phi: 2 - omega*s vanishes");
  return (2.0 * omega * z.p - z.s) / den;
}

bool in_open_G(const GammaPoint& z, double tol) {
  const auto [r1, r2] = char_roots(z.s, z.p);
  return std::abs(r1) < 1.0 - tol && std::abs(r2) < 1.0 - tol;
}

bool in_closed_Gamma(const GammaPoint& z, double tol) {
  const auto [r1, r2] = char_roots(z.s, z.p);
  return std::abs(r1) <= 1.0 + tol && std::abs(r2) <= 1.0 + tol;
}

double phi_sup_on_grid(const GammaPoint& z, int grid_n) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double sup = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const cplx omega = std::polar(1.0, two_pi * i / grid_n);
    const cplx den = 2.0 - omega * z.s;
    if (std::abs(den) == 0.0) return std::numeric_limits<double>::infinity();
    sup = std::max(sup, std::abs((2.0 * omega * z.p - z.s) / den));
  }
  return sup;
}

namespace {

// max over the circle of |c2 w^2 + c1 w + c0| / |d2 w^2 + d1 w + d0| with a
// pre-scan rejecting denominators that vanish on the grid.
DistanceResult max_quadratic_ratio(const std::array<cplx, 3>& num,
                                   const std::array<cplx, 3>& den, int grid_n) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double dscale = 0.0;
  for (const cplx& c : den) dscale = std::max(dscale, std::abs(c));
  double dmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    const cplx w = std::polar(1.0, two_pi * i / grid_n);
    dmin = std::min(dmin, std::abs((den[2] * w + den[1]) * w + den[0]));
  }
  if (dmin <= 1e-12 * std::max(dscale, 1.0))
    throw ObjectiveSingular("circle objective: denominator vanishes on the circle");

  auto objective = [&](double theta) {
    const cplx w = std::polar(1.0, theta);
    return std::abs((num[2] * w + num[1]) * w + num[0]) /
           std::abs((den[2] * w + den[1]) * w + den[0]);
  };
  const CircleMax m = max_on_circle(objective, grid_n);
  return {m.value, std::polar(1.0, m.theta)};
}

} // namespace

DistanceResult caratheodory_G(const GammaPoint& z1, const GammaPoint& z2,
                              int grid_n) {
  if (!in_open_G(z1) || !in_open_G(z2))
    throw DomainError("caratheodory_G: both points must lie in open G");
  const cplx s1 = z1.s, p1 = z1.p, s2 = z2.s, p2 = z2.p;
  const std::array<cplx, 3> num = {s1 - s2, 2.0 * (p2 - p1), s2 * p1 - s1 * p2};
  const std::array<cplx, 3> den = {std::conj(s2) - s1 * std::conj(p2),
                                   -2.0 * (1.0 - p1 * std::conj(p2)),
                                   s1 - std::conj(s2) * p1};
  return max_quadratic_ratio(num, den, grid_n);
}

double lempert_G(const GammaPoint& z1, const GammaPoint& z2, int grid_n) {
  // delta_G = C_G on the symmetrized bidisc.
  return caratheodory_G(z1, z2, grid_n).value;
}

double infinitesimal_caratheodory_G(const GammaTangent& t, int grid_n) {
  if (!in_open_G(t.base))
    throw DomainError("infinitesimal_caratheodory_G: base point outside open G");
  const cplx s0 = t.base.s, p0 = t.base.p, s1 = t.s1, p1 = t.p1;
  const std::array<cplx, 3> num = {-s1, 2.0 * p1, s1 * p0 - s0 * p1};
  const std::array<cplx, 3> den = {std::conj(s0) - s0 * std::conj(p0),
                                   -2.0 * (1.0 - std::norm(p0)),
                                   s0 - std::conj(s0) * p0};
  return max_quadratic_ratio(num, den, grid_n).value;
}

} // namespace musyn
