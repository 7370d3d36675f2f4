#include "musyn/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "musyn/numerics.hpp"

namespace musyn {

namespace {
constexpr double kTrimRel = 1e-13;
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {cplx{0.0}};
  double scale = 0.0;
  for (const cplx& v : c_) scale = std::max(scale, std::abs(v));
  while (c_.size() > 1 && std::abs(c_.back()) <= kTrimRel * scale) c_.pop_back();
}

cplx Polynomial::eval(cplx x) const {
  cplx r{0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> r(std::max(c_.size(), o.c_.size()), cplx{0.0});
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<cplx> r(std::max(c_.size(), o.c_.size()), cplx{0.0});
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<cplx> r(c_.size() + o.c_.size() - 1, cplx{0.0});
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> r = c_;
  for (cplx& v : r) v *= s;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::deflate(cplx root) const {
  if (c_.size() == 1) return Polynomial();
  std::vector<cplx> q(c_.size() - 1, cplx{0.0});
  cplx carry = c_.back();
  for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
    q[k] = carry;
    carry = c_[k] + root * carry;
  }
  return Polynomial(std::move(q));
}

double Polynomial::coeff_scale() const {
  double s = 0.0;
  for (const cplx& v : c_) s = std::max(s, std::abs(v));
  return s;
}

std::vector<cplx> roots_deg2(const Polynomial& q) {
  const double scale = std::max(q.coeff_scale(), 1e-300);
  const cplx a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
  if (q.degree() > 2) throw DomainError("roots_deg2: degree exceeds 2");
  if (std::abs(a) > kTrimRel * scale) {
    auto [r1, r2] = char_roots(-b / a, c / a);
    return {r1, r2};
  }
  if (std::abs(b) > kTrimRel * scale) return {-c / b};
  return {};
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw DomainError("RationalFunction: denominator identically zero");
}

cplx RationalFunction::eval(cplx x) const {
  const cplx d = den_.eval(x);
  if (std::abs(d) == 0.0)
    throw EvaluationError("RationalFunction: evaluation at a pole");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  const Polynomial& N = inner.num();
  const Polynomial& D = inner.den();
  const int dp = num_.degree(), dq = den_.degree();
  const int d = std::max(dp, dq);

  // Powers N^k D^(d-k), shared between numerator and denominator sums.
  std::vector<Polynomial> pw(d + 1);
  for (int k = 0; k <= d; ++k) {
    Polynomial t = Polynomial::constant(cplx{1.0});
    for (int i = 0; i < k; ++i) t = t * N;
    for (int i = 0; i < d - k; ++i) t = t * D;
    pw[k] = t;
  }
  Polynomial pn, pd;
  for (int k = 0; k <= dp; ++k) pn = pn + pw[k] * num_.coeff(k);
  for (int k = 0; k <= dq; ++k) pd = pd + pw[k] * den_.coeff(k);
  return {pn, pd};
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular_constant)
    : zeros_(std::move(zeros)), const_(unimodular_constant) {
  if (std::abs(std::abs(const_) - 1.0) > 1e-9)
    throw DomainError("BlaschkeProduct: constant must be unimodular");
  const_ /= std::abs(const_);
  for (const cplx& z : zeros_)
    if (std::abs(z) >= 1.0)
      throw DomainError("BlaschkeProduct: zeros must lie in the open disc");
}

cplx BlaschkeProduct::eval(cplx x) const {
  cplx r = const_;
  for (const cplx& z : zeros_) r *= (x - z) / (1.0 - std::conj(z) * x);
  return r;
}

RationalFunction BlaschkeProduct::to_rational() const {
  Polynomial n = Polynomial::constant(const_);
  Polynomial d = Polynomial::constant(cplx{1.0});
  for (const cplx& z : zeros_) {
    n = n * Polynomial({-z, cplx{1.0}});
    d = d * Polynomial({cplx{1.0}, -std::conj(z)});
  }
  return {n, d};
}

} // namespace musyn
