#include "musyn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace musyn {

std::pair<cplx, cplx> char_roots(cplx s, cplx p) {
  const cplx disc = std::sqrt(s * s - 4.0 * p);
  // Pick the sign that avoids cancellation in s +/- disc.
  const cplx big = (std::norm(s + disc) >= std::norm(s - disc)) ? s + disc : s - disc;
  if (std::abs(big) == 0.0) return {cplx{0.0}, cplx{0.0}};
  const cplx r1 = big / 2.0;
  const cplx r2 = p / r1;
  return {r1, r2};
}

std::pair<cplx, cplx> eig2(const Mat2& A) { return char_roots(A.trace(), A.det()); }

double spectral_radius(const Mat2& A) {
  const auto [l1, l2] = eig2(A);
  return std::max(std::abs(l1), std::abs(l2));
}

double operator_norm(const Mat2& A) {
  // Eigenvalues of A* A are (T +- sqrt(T^2 - 4 D)) / 2 with T the squared
  // Frobenius norm and D = |det A|^2.
  const double T = std::norm(A.a11) + std::norm(A.a12) + std::norm(A.a21) +
                   std::norm(A.a22);
  const double D = std::norm(A.det());
  const double disc = std::max(T * T - 4.0 * D, 0.0);
  return std::sqrt((T + std::sqrt(disc)) / 2.0);
}

double pseudohyperbolic(cplx l1, cplx l2) {
  if (std::abs(l1) >= 1.0 || std::abs(l2) >= 1.0)
    throw DomainError("pseudohyperbolic: points must lie in the open unit disc");
  return std::abs(l1 - l2) / std::abs(1.0 - std::conj(l2) * l1);
}

HermitianMatrix::HermitianMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
  if (n < 1) throw DomainError("HermitianMatrix: dimension must be >= 1");
}

void HermitianMatrix::set(int i, int j, cplx v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = std::conj(v);
  if (i == j) a_[i * n_ + i] = cplx{v.real(), 0.0};
}

bool is_psd(const HermitianMatrix& H, double tol) {
  if (tol < 0.0) throw DomainError("is_psd: tol must be >= 0");
  const int n = H.dim();
  double scale = 1.0;
  double amax = 0.0;
  for (int i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(H.at(i, i).real()));
    for (int j = 0; j < n; ++j) amax = std::max(amax, std::abs(H.at(i, j)));
  }
  amax = std::max(amax, 1.0);

  std::vector<cplx> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = H.at(i, j);
  for (int i = 0; i < n; ++i) a[i * n + i] += tol * scale;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * amax;

  // Diagonally pivoted LDL^H elimination, sign decisions only.
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (a[idx[i] * n + idx[i]].real() > a[idx[piv] * n + idx[piv]].real()) piv = i;
    std::swap(idx[k], idx[piv]);
    const int kk = idx[k];
    const double d = a[kk * n + kk].real();
    if (d < -zero_tol) return false;
    if (d <= zero_tol) {
      // PSD forces the rest of a zero-pivot row to vanish.
      for (int i = k + 1; i < n; ++i)
        if (std::abs(a[kk * n + idx[i]]) > std::sqrt(zero_tol * amax)) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      const int ii = idx[i];
      const cplx lik = a[ii * n + kk] / d;
      for (int j = k + 1; j < n; ++j) {
        const int jj = idx[j];
        a[ii * n + jj] -= lik * std::conj(a[jj * n + kk]);
      }
    }
  }
  return true;
}

double min_eigenvalue(const HermitianMatrix& H) {
  const int n = H.dim();
  double m = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(H.at(i, j)));
  double lo = -static_cast<double>(n) * m, hi = static_cast<double>(n) * m;
  // Shifted pivot test: H - t I is PSD iff t <= lambda_min.
  auto shifted_psd = [&](double t) {
    HermitianMatrix S(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        S.set(i, j, H.at(i, j) - (i == j ? cplx{t, 0.0} : cplx{0.0}));
    return is_psd(S, 0.0);
  };
  if (!shifted_psd(lo)) return lo;
  for (int it = 0; it < 80 && hi - lo > 1e-14 * m; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (shifted_psd(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {

double probe(const std::function<double(double)>& f, double theta) {
  const double v = f(theta);
  if (!std::isfinite(v))
    throw ObjectiveSingular("max_on_circle: objective not finite at theta=" +
                            std::to_string(theta));
  return v;
}

} // namespace

CircleMax max_on_circle(const std::function<double(double)>& objective,
                        int grid_n, double refine_tol) {
  if (grid_n < 16) throw DomainError("max_on_circle: grid_n must be >= 16");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double step = two_pi / grid_n;

  int best = 0;
  double best_v = probe(objective, 0.0);
  for (int i = 1; i < grid_n; ++i) {
    const double v = probe(objective, i * step);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }

  // Golden-section refinement on the bracketing interval of the best sample.
  double a = (best - 1) * step, b = (best + 1) * step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = probe(objective, x1), f2 = probe(objective, x2);
  while (b - a > refine_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = probe(objective, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = probe(objective, x1);
    }
  }
  double theta = 0.5 * (a + b);
  double value = probe(objective, theta);
  if (best_v >= value) {
    theta = best * step;
    value = best_v;
  }
  theta = std::fmod(theta + two_pi, two_pi);
  return {theta, value};
}

} // namespace musyn
