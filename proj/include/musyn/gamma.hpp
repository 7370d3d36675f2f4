#pragma once

#include "musyn/numerics.hpp"
#include "musyn/types.hpp"

namespace musyn {

// Point of the symmetrized bidisc in (trace, determinant) coordinates.
struct GammaPoint {
  cplx s{0.0};
  cplx p{0.0};
};

struct GammaTangent {
  GammaPoint base;
  cplx s1{0.0};
  cplx p1{0.0};
};

// The magic function Phi_omega(s, p) = (2 omega p - s) / (2 - omega s).
cplx phi(cplx omega, const GammaPoint& z);

// Membership by the root test on lambda^2 - s lambda + p.
bool in_open_G(const GammaPoint& z, double tol = tols::membership);
bool in_closed_Gamma(const GammaPoint& z, double tol = tols::membership);

// sup over a uniform omega grid of |Phi_omega(z)|; cross-check for the root
// criterion.
double phi_sup_on_grid(const GammaPoint& z, int grid_n = tols::circle_grid);

struct DistanceResult {
  double value;
  cplx omega; // maximizer on the unit circle
};

// Caratheodory distance on G: max over the circle of the rational closed
// form for d(Phi_omega(z1), Phi_omega(z2)).
DistanceResult caratheodory_G(const GammaPoint& z1, const GammaPoint& z2,
                              int grid_n = tols::circle_grid);

// The Lempert function of G coincides with the Caratheodory distance.
double lempert_G(const GammaPoint& z1, const GammaPoint& z2,
                 int grid_n = tols::circle_grid);

// Infinitesimal Caratheodory metric at t.base in direction (t.s1, t.p1).
double infinitesimal_caratheodory_G(const GammaTangent& t,
                                    int grid_n = tols::circle_grid);

} // namespace musyn
