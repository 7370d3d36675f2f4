#include "doctest.h"

#include <cmath>

#include "musyn/tetra.hpp"
#include "musyn/numerics.hpp"
#include "support.hpp"

using namespace musyn;
using support::Rng;

TEST_CASE("tetrablock membership basics") {
  CHECK(in_tetrablock({0.0, 0.0, 0.0}, false));
  CHECK_FALSE(in_tetrablock({1.0, 0.0, 0.0}, false));
  CHECK(in_tetrablock({1.0, 0.0, 0.0}, true));
}

TEST_CASE("factored point (0.3, 0.4, 0.12) is interior") {
  // 1 - 0.3 z - 0.4 w + 0.12 zw = (1 - 0.3 z)(1 - 0.4 w): no zero on the
  // closed bidisc, confirmed by the grid scan.
  const TetraPoint x{0.3, 0.4, 0.12};
  CHECK(in_tetrablock(x, false));
  CHECK(support::oracle_bidisc_min(x, 60, 120) > 0.1);
}

TEST_CASE("membership agrees with a bidisc scan near the boundary") {
  // (t, t, t^2) factors as (1 - tz)(1 - tw): inside iff |t| < 1.
  CHECK(in_tetrablock({0.95, 0.95, 0.95 * 0.95}, false));
  CHECK_FALSE(in_tetrablock({1.0, 1.0, 1.0}, false));
  CHECK(in_tetrablock({1.0, 1.0, 1.0}, true));
  // (1.05, 1, 1.05) only touches the bidisc boundary in modulus, which the
  // closed criterion (max over the circle <= tol) admits.
  CHECK(in_tetrablock({1.05, 1.0, 1.05}, true));
  CHECK_FALSE(in_tetrablock({0.0, 1.05, 0.0}, true));
}

TEST_CASE("mu_diag2 zero and diagonal cases") {
  const MuResult z = mu_diag2({0.0, cplx{0.3, 0.8}, 0.0, 0.0});
  CHECK(z.value == doctest::Approx(0.0));
  CHECK(z.method == MuResult::Method::ZeroCase);

  const MuResult d = mu_diag2({0.3, 0.0, 0.0, -0.8});
  CHECK(d.value == doctest::Approx(0.8).epsilon(1e-7));
  CHECK(d.method == MuResult::Method::Bisection);
  CHECK(d.lo <= d.value);
  CHECK(d.value <= d.hi);
}

TEST_CASE("mu_diag2 agrees with the torus oracle on random matrices") {
  Rng g(211);
  for (int k = 0; k < 25; ++k) {
    const Mat2 A = support::rand_mat_unit_square(g);
    const double mu = mu_diag2(A).value;
    CHECK(mu == doctest::Approx(support::oracle_mu_diag2(A)).epsilon(2e-3));
  }
}

TEST_CASE("mu_diag2 bounds and invariances") {
  Rng g(223);
  const double tol = 1e-8;
  for (int k = 0; k < 120; ++k) {
    const Mat2 A = support::rand_mat_unit_square(g);
    const double mu = mu_diag2(A, tol).value;
    CHECK(spectral_radius(A) <= mu + tol);
    CHECK(mu <= operator_norm(A) + tol);

    for (double c : {0.5, 2.0, 7.0})
      CHECK(mu_diag2(A * cplx{c}, tol).value == doctest::Approx(c * mu).epsilon(1e-6));

    const cplx d1 = std::polar(support::unif(g, 0.3, 3.0), support::unif(g, 0.0, support::kTwoPi));
    const cplx d2 = std::polar(support::unif(g, 0.3, 3.0), support::unif(g, 0.0, support::kTwoPi));
    const Mat2 S{A.a11, A.a12 * d1 / d2, A.a21 * d2 / d1, A.a22};
    CHECK(mu_diag2(S, tol).value == doctest::Approx(mu).epsilon(1e-6));

    CHECK(mu_diag2(A.transpose(), tol).value == doctest::Approx(mu).epsilon(1e-6));
  }
}

TEST_CASE("mu_diag2 reduces to the max modulus on diagonal matrices") {
  Rng g(227);
  for (int k = 0; k < 40; ++k) {
    const cplx a = support::rand_disc(g, 1.5), b = support::rand_disc(g, 1.5);
    if (std::abs(a) < 1e-3 && std::abs(b) < 1e-3) continue;
    const double mu = mu_diag2({a, 0.0, 0.0, b}).value;
    CHECK(mu == doctest::Approx(std::max(std::abs(a), std::abs(b))).epsilon(1e-6));
  }
}
