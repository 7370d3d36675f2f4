#include "doctest.h"

#include <cmath>

#include "musyn/gamma.hpp"
#include "support.hpp"

using namespace musyn;
using support::Rng;

TEST_CASE("phi evaluation") {
  CHECK(std::abs(phi(std::polar(1.0, 0.7), {0.0, 0.0})) == doctest::Approx(0.0));
  CHECK(phi(1.0, {0.0, 0.5}) == cplx{0.5, 0.0});
  // z = (2t, t^2) collapses to -t for any admissible omega.
  const double t = 0.4;
  for (double th : {0.3, 1.1, 2.9})
    CHECK(std::abs(phi(std::polar(1.0, th), {2.0 * t, t * t}) + t) < 1e-12);
  CHECK_THROWS_AS(phi(1.0, {2.0, 1.0}), PoleError);
}

TEST_CASE("membership in G and Gamma") {
  CHECK(in_open_G({0.0, 0.0}));
  CHECK_FALSE(in_open_G({2.0, 1.0}));
  CHECK(in_open_G({0.9, 0.2})); // roots 0.4 and 0.5
  CHECK(in_closed_Gamma({2.0, 1.0}));
  CHECK_FALSE(in_closed_Gamma({3.0, 1.0}));
  CHECK(in_closed_Gamma({0.0, -1.0}));
}

TEST_CASE("images of the bidisc lie in G and satisfy the Phi bound") {
  Rng g(101);
  for (int k = 0; k < 2000; ++k) {
    const GammaPoint z = support::rand_G(g, 0.995);
    CHECK(in_open_G(z));
    for (int i = 0; i < 16; ++i)
      CHECK(std::abs(phi(std::polar(1.0, support::unif(g, 0.0, support::kTwoPi)), z)) < 1.0);
  }
}

TEST_CASE("root criterion matches the Phi-sup criterion away from the boundary") {
  Rng g(103);
  int tested = 0;
  for (int k = 0; k < 4000; ++k) {
    // Box containing Gamma.
    const GammaPoint z{cplx{support::unif(g, -2.2, 2.2), support::unif(g, -2.2, 2.2)},
                       cplx{support::unif(g, -1.2, 1.2), support::unif(g, -1.2, 1.2)}};
    const auto [r1, r2] = char_roots(z.s, z.p);
    const double rmax = std::max(std::abs(r1), std::abs(r2));
    if (std::abs(rmax - 1.0) < 1e-6) continue; // margin band excluded
    ++tested;
    const bool by_phi = phi_sup_on_grid(z) < 1.0 - 1e-9;
    CHECK(in_open_G(z) == by_phi);
  }
  CHECK(tested > 3000);
}

TEST_CASE("Caratheodory distance basics") {
  const GammaPoint z{cplx{0.3, 0.1}, cplx{0.05, -0.2}};
  CHECK(caratheodory_G(z, z).value == doctest::Approx(0.0));
  CHECK(caratheodory_G({0.0, 0.0}, {0.0, cplx{0.2, 0.45}}).value ==
        doctest::Approx(std::abs(cplx{0.2, 0.45})).epsilon(1e-12));
  CHECK_THROWS_AS(caratheodory_G({3.0, 1.0}, {0.0, 0.0}), DomainError);
}

TEST_CASE("Caratheodory distance agrees with the brute-force circle sweep") {
  const GammaPoint z1{0.0, 0.0}, z2{0.5, 0.2};
  const double lib = caratheodory_G(z1, z2).value;
  const double oracle = support::oracle_caratheodory(z1, z2, 1000000);
  CHECK(lib == doctest::Approx(oracle).epsilon(1e-9));

  Rng g(107);
  for (int k = 0; k < 10; ++k) {
    const GammaPoint a = support::rand_G(g, 0.9), b = support::rand_G(g, 0.9);
    CHECK(caratheodory_G(a, b).value ==
          doctest::Approx(support::oracle_caratheodory(a, b, 200000)).epsilon(1e-8));
  }
}

TEST_CASE("distance dominates every omega sample") {
  Rng g(109);
  for (int k = 0; k < 50; ++k) {
    const GammaPoint a = support::rand_G(g, 0.9), b = support::rand_G(g, 0.9);
    const double C = caratheodory_G(a, b).value;
    for (int i = 0; i < 64; ++i) {
      const cplx w = std::polar(1.0, support::unif(g, 0.0, support::kTwoPi));
      CHECK(C >= pseudohyperbolic(phi(w, a), phi(w, b)) - 1e-12);
    }
  }
}

TEST_CASE("lempert_G is the documented alias") {
  Rng g(113);
  for (int k = 0; k < 20; ++k) {
    const GammaPoint a = support::rand_G(g, 0.9), b = support::rand_G(g, 0.9);
    CHECK(lempert_G(a, b) == caratheodory_G(a, b).value);
  }
}

TEST_CASE("infinitesimal metric at the origin") {
  const cplx v{0.3, -0.7};
  CHECK(infinitesimal_caratheodory_G({{0.0, 0.0}, 2.0 * v, 0.0}) ==
        doctest::Approx(std::abs(v)).epsilon(1e-12));
  CHECK(infinitesimal_caratheodory_G({{0.2, 0.05}, 0.0, 0.0}) ==
        doctest::Approx(0.0));
  const cplx p1{-0.4, 0.9};
  CHECK(infinitesimal_caratheodory_G({{0.0, 0.0}, 0.0, p1}) ==
        doctest::Approx(std::abs(p1)).epsilon(1e-12));
  CHECK_THROWS_AS(infinitesimal_caratheodory_G({{3.0, 1.0}, 1.0, 0.0}), DomainError);
}

TEST_CASE("infinitesimal metric is absolutely homogeneous in the direction") {
  Rng g(127);
  for (int k = 0; k < 50; ++k) {
    const GammaPoint base = support::rand_G(g, 0.85);
    const cplx s1 = support::rand_disc(g, 1.0), p1 = support::rand_disc(g, 1.0);
    const cplx c = support::rand_disc(g, 2.0);
    if (std::abs(c) < 1e-3) continue;
    const double v = infinitesimal_caratheodory_G({base, s1, p1});
    const double vc = infinitesimal_caratheodory_G({base, c * s1, c * p1});
    CHECK(vc == doctest::Approx(std::abs(c) * v).epsilon(1e-10));
  }
}

TEST_CASE("infinitesimal metric matches a dense independent sweep") {
  Rng g(131);
  for (int k = 0; k < 20; ++k) {
    const GammaPoint base = support::rand_G(g, 0.85);
    const cplx s1 = support::rand_disc(g, 1.0), p1 = support::rand_disc(g, 1.0);
    const double lib = infinitesimal_caratheodory_G({base, s1, p1});
    const double oracle =
        support::oracle_carametric(base.s, base.p, s1, p1, 200000);
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-8));
  }
}
