#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace musyn {

using cplx = std::complex<double>;

// Centralized default tolerances.
namespace tols {
inline constexpr double membership = 1e-10;     // domain membership decisions
inline constexpr double circle_refine = 1e-12;  // angle tolerance, circle maximization
inline constexpr double verify_residual = 1e-8; // interpolation residuals
inline constexpr double verify_grid = 1e-6;     // grid spectral-radius slack
inline constexpr double boundary_band = 1e-9;   // extremal / unique-solution band
inline constexpr int circle_grid = 4096;        // default circle grid size
} // namespace tols

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ObjectiveSingular : Error { using Error::Error; };
struct BracketError : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct DegenerateData : Error { using Error::Error; };
struct NonscalarRequired : Error { using Error::Error; };
struct NondiagonalRequired : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };
struct NotSolvable : Error { using Error::Error; };

// 2x2 complex matrix, row major.
struct Mat2 {
  cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  cplx trace() const { return a11 + a22; }
  cplx det() const { return a11 * a22 - a12 * a21; }

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  // Canonical matrix with trace s and determinant p.
  static Mat2 companion(cplx s, cplx p) { return {0.0, 1.0, -p, s}; }

  bool is_scalar() const {
    return a12 == cplx{0.0} && a21 == cplx{0.0} && a11 == a22;
  }
  bool is_diagonal() const { return a12 == cplx{0.0} && a21 == cplx{0.0}; }

  Mat2 operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Mat2 operator*(cplx c) const { return {c * a11, c * a12, c * a21, c * a22}; }

  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  Mat2 inverse() const {
    const cplx d = det();
    if (std::abs(d) == 0.0) throw EvaluationError("Mat2::inverse: singular matrix");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  // Frobenius norm, used for residual scales.
  double frob() const {
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) +
                     std::norm(a22));
  }
};

inline Mat2 operator*(cplx c, const Mat2& m) { return m * c; }

} // namespace musyn
