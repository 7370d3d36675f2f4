#pragma once

#include <vector>

#include "musyn/types.hpp"

namespace musyn {

// Dense univariate polynomial with complex coefficients, c[k] multiplies
// lambda^k. Trailing near-zero coefficients are trimmed on construction.
class Polynomial {
 public:
  Polynomial() : c_{cplx{0.0}} {}
  explicit Polynomial(std::vector<cplx> coeffs);
  static Polynomial constant(cplx v) { return Polynomial({v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : cplx{0.0};
  }
  bool is_zero() const { return c_.size() == 1 && c_[0] == cplx{0.0}; }

  cplx eval(cplx x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;

  // Synthetic division by (lambda - root); the remainder is dropped.
  Polynomial deflate(cplx root) const;

  double coeff_scale() const;

 private:
  std::vector<cplx> c_;
};

// Roots of a polynomial of degree <= 2; degenerate leading coefficients fall
// through to the lower-degree cases.
std::vector<cplx> roots_deg2(const Polynomial& q);

class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::constant(cplx{0.0})), den_(Polynomial::constant(cplx{1.0})) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(cplx v) {
    return {Polynomial::constant(v), Polynomial::constant(cplx{1.0})};
  }
  static RationalFunction identity() {
    return {Polynomial({cplx{0.0}, cplx{1.0}}), Polynomial::constant(cplx{1.0})};
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  cplx eval(cplx x) const;

  // this(inner(lambda)) as a rational function of lambda.
  RationalFunction compose(const RationalFunction& inner) const;

 private:
  Polynomial num_, den_;
};

// Finite Blaschke product: unimodular constant times factors
// (lambda - z_i) / (1 - conj(z_i) lambda) with |z_i| < 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular_constant);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular_constant() const { return const_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx eval(cplx x) const;
  RationalFunction to_rational() const;

 private:
  std::vector<cplx> zeros_;
  cplx const_;
};

} // namespace musyn
