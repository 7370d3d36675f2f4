// Shared helpers for the test suites: seeded generators and independent
// brute-force oracles. The oracles deliberately avoid the library's own
// maximization routines.
#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "musyn/construct.hpp"
#include "musyn/gamma.hpp"
#include "musyn/numerics.hpp"
#include "musyn/tetra.hpp"

namespace support {

using namespace musyn;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Rng = std::mt19937_64;

inline double unif(Rng& g, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

// Uniform over the disc of the given radius.
inline cplx rand_disc(Rng& g, double radius) {
  const double r = radius * std::sqrt(unif(g, 0.0, 1.0));
  return std::polar(r, unif(g, 0.0, kTwoPi));
}

inline cplx rand_square(Rng& g) { return {unif(g, 0.0, 1.0), unif(g, 0.0, 1.0)}; }

// Entries with re, im in [0, 1].
inline Mat2 rand_mat_unit_square(Rng& g) {
  return {rand_square(g), rand_square(g), rand_square(g), rand_square(g)};
}

// Random point of G as (z + w, zw) with z, w in the disc of radius rho.
inline GammaPoint rand_G(Rng& g, double rho) {
  const cplx z = rand_disc(g, rho), w = rand_disc(g, rho);
  return {z + w, z * w};
}

// Symmetrization of a pair of disc automorphisms m_k(l) = e_k (l-a_k)/(1-conj(a_k) l):
// h = (m1 + m2, m1 m2). Always Gamma-valued; extremal for roughly half of random
// draws.
struct ExtremalMap {
  cplx a1, a2, e1, e2;
  cplx m1(cplx l) const { return e1 * (l - a1) / (1.0 - std::conj(a1) * l); }
  cplx m2(cplx l) const { return e2 * (l - a2) / (1.0 - std::conj(a2) * l); }
  GammaPoint eval(cplx l) const {
    const cplx u = m1(l), v = m2(l);
    return {u + v, u * v};
  }
};

inline ExtremalMap rand_auto_pair(Rng& g, double zero_radius = 0.7) {
  return {rand_disc(g, zero_radius), rand_disc(g, zero_radius),
          std::polar(1.0, unif(g, 0.0, kTwoPi)),
          std::polar(1.0, unif(g, 0.0, kTwoPi))};
}

// Rejection-sample automorphism pairs until the induced Gamma data is extremal
// at the given node pair: Caratheodory distance of the images equals the
// pseudohyperbolic node separation.
inline ExtremalMap rand_extremal_map(Rng& g, cplx l1, cplx l2) {
  const double d = pseudohyperbolic(l1, l2);
  for (;;) {
    const ExtremalMap h = rand_auto_pair(g);
    if (std::abs(caratheodory_G(h.eval(l1), h.eval(l2)).value - d) <= 1e-9)
      return h;
  }
}

// Brute-force circle sweep for the Caratheodory distance: max over n
// uniformly spaced omega of d(Phi_omega(z1), Phi_omega(z2)).
inline double oracle_caratheodory(const GammaPoint& z1, const GammaPoint& z2,
                                  int n) {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx w = std::polar(1.0, kTwoPi * i / n);
    best = std::max(best, pseudohyperbolic(phi(w, z1), phi(w, z2)));
  }
  return best;
}

// Dense circle sweep of the infinitesimal-metric closed form.
inline double oracle_carametric(cplx s0, cplx p0, cplx s1, cplx p1, int n) {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx w = std::polar(1.0, kTwoPi * i / n);
    const cplx num = (s1 * p0 - s0 * p1) * w * w + 2.0 * w * p1 - s1;
    const cplx den = w * w * (s0 - std::conj(s0) * p0) -
                     2.0 * w * (1.0 - std::norm(p0)) + std::conj(s0) -
                     s0 * std::conj(p0);
    best = std::max(best, std::abs(num) / std::abs(den));
  }
  return best;
}

// Independent mu oracle for Diag(2): mu(A) = max over diagonal unitaries U of
// r(AU). Dense torus grid plus nested local refinement.
inline double oracle_mu_diag2(const Mat2& A) {
  auto rho = [&](double t1, double t2) {
    const cplx u1 = std::polar(1.0, t1), u2 = std::polar(1.0, t2);
    return spectral_radius({A.a11 * u1, A.a12 * u2, A.a21 * u1, A.a22 * u2});
  };
  double best = 0.0, b1 = 0.0, b2 = 0.0;
  const int n = 360;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = rho(kTwoPi * i / n, kTwoPi * j / n);
      if (v > best) {
        best = v;
        b1 = kTwoPi * i / n;
        b2 = kTwoPi * j / n;
      }
    }
  double h = kTwoPi / n;
  for (int stage = 0; stage < 6; ++stage) {
    double nb1 = b1, nb2 = b2;
    for (int i = -12; i <= 12; ++i)
      for (int j = -12; j <= 12; ++j) {
        const double v = rho(b1 + i * h / 12.0, b2 + j * h / 12.0);
        if (v > best) {
          best = v;
          nb1 = b1 + i * h / 12.0;
          nb2 = b2 + j * h / 12.0;
        }
      }
    b1 = nb1;
    b2 = nb2;
    h /= 6.0;
  }
  return best;
}

// Minimum of |1 - x1 z - x2 w + x3 z w| over a torus+radial grid of the
// closed bidisc.
inline double oracle_bidisc_min(const TetraPoint& x, int nr, int na) {
  double best = std::numeric_limits<double>::infinity();
  for (int iz = 0; iz <= nr; ++iz)
    for (int az = 0; az < na; ++az) {
      const cplx z = std::polar(static_cast<double>(iz) / nr, kTwoPi * az / na);
      for (int iw = 0; iw <= nr; ++iw)
        for (int aw = 0; aw < na; ++aw) {
          const cplx w =
              std::polar(static_cast<double>(iw) / nr, kTwoPi * aw / na);
          best = std::min(best,
                          std::abs(1.0 - x.x1 * z - x.x2 * w + x.x3 * z * w));
        }
    }
  return best;
}

} // namespace support
