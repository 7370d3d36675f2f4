#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "musyn/types.hpp"

namespace musyn {

// Roots of lambda^2 - tr(A) lambda + det(A), quadratic formula with a
// cancellation-safe branch.
std::pair<cplx, cplx> eig2(const Mat2& A);

// Roots of lambda^2 - s lambda + p.
std::pair<cplx, cplx> char_roots(cplx s, cplx p);

double spectral_radius(const Mat2& A);

// Largest singular value via the closed form on the 2x2 Gram matrix.
double operator_norm(const Mat2& A);

// |l1 - l2| / |1 - conj(l2) l1| on the open disc.
double pseudohyperbolic(cplx l1, cplx l2);

// Small dense Hermitian matrix; both triangles kept consistent on set().
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n);

  int dim() const { return n_; }
  cplx at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, cplx v);

 private:
  int n_;
  std::vector<cplx> a_;
};

// Pivoted Cholesky-style test: true iff H + tol*scale*I has all pivots >= 0,
// scale = max(1, max |h_ii|).
bool is_psd(const HermitianMatrix& H, double tol);

// Smallest eigenvalue, located by bisection on the shifted pivot test.
double min_eigenvalue(const HermitianMatrix& H);

struct CircleMax {
  double theta;
  double value;
};

// Dense grid over [0, 2pi) followed by golden-section refinement around the
// best grid point. Throws ObjectiveSingular on a non-finite sample.
CircleMax max_on_circle(const std::function<double(double)>& objective,
                        int grid_n = tols::circle_grid,
                        double refine_tol = tols::circle_refine);

} // namespace musyn
