#include "musyn/deciders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "musyn/numerics.hpp"

namespace musyn {

std::string to_string(Status s) {
  switch (s) {
    case Status::Solvable: return "Solvable";
    case Status::SolvableUniquely: return "SolvableUniquely";
    case Status::Unsolvable: return "Unsolvable";
    case Status::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "?";
}

namespace {

constexpr double kBand = tols::boundary_band;

// Frobenius distance from W to the scalar matrices.
double distance_to_scalar(const Mat2& W) {
  const cplx c = W.trace() / 2.0;
  return std::sqrt(std::norm(W.a12) + std::norm(W.a21) +
                   std::norm(W.a11 - c) + std::norm(W.a22 - c));
}

void append_conditioning_warning(std::string& detail, const Mat2& W,
                                 const char* name) {
  const double d = distance_to_scalar(W);
  if (d > 0.0 && d < 1e-6) {
    detail += std::string(" WARNING: ") + name +
              " is within 1e-6 of the scalar matrices; the decision is "
              "ill-conditioned there.";
  }
}

Verdict graded_verdict(double criterion, double threshold, bool unique_band,
                       std::string detail) {
  const double margin = threshold - criterion;
  Status st;
  if (unique_band && std::abs(margin) <= kBand)
    st = Status::SolvableUniquely;
  else if (margin >= -kBand)
    st = Status::Solvable;
  else
    st = Status::Unsolvable;
  return {st, margin, criterion, threshold, std::move(detail)};
}

HermitianMatrix poscond_matrix(const std::vector<cplx>& nodes,
                               const std::vector<cplx>& s,
                               const std::vector<cplx>& p, cplx alpha) {
  const int n = static_cast<int>(nodes.size());
  const double a2 = std::norm(alpha);
  HermitianMatrix H(n);
  for (int i = 0; i < n; ++i) {
    const cplx ui = 2.0 - alpha * s[i];
    const cplx vi = 2.0 * alpha * p[i] - s[i];
    for (int j = i; j < n; ++j) {
      const cplx uj = 2.0 - alpha * s[j];
      const cplx vj = 2.0 * alpha * p[j] - s[j];
      const cplx numer = std::conj(ui) * uj - a2 * std::conj(vi) * vj;
      H.set(i, j, numer / (1.0 - std::conj(nodes[i]) * nodes[j]));
    }
  }
  return H;
}

} // namespace

NecessaryResult necessary_condition_snp(const std::vector<cplx>& nodes,
                                        const std::vector<Mat2>& targets,
                                        int alpha_grid) {
  const size_t n = nodes.size();
  if (n < 1 || targets.size() != n)
    throw DomainError("necessary_condition_snp: need n >= 1 nodes and as many targets");
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(nodes[i]) >= 1.0)
      throw DomainError("necessary_condition_snp: node outside the open disc");
    for (size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j])
        throw DomainError("necessary_condition_snp: repeated node");
  }
  std::vector<cplx> s(n), p(n);
  bool all_strict = true;
  for (size_t j = 0; j < n; ++j) {
    s[j] = targets[j].trace();
    p[j] = targets[j].det();
    if (spectral_radius(targets[j]) >= 1.0) all_strict = false;
  }

  constexpr double two_pi = 2.0 * std::numbers::pi;
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  cplx worst_alpha{1.0};

  auto probe = [&](cplx alpha) {
    const HermitianMatrix H = poscond_matrix(nodes, s, p, alpha);
    if (!is_psd(H, tols::membership)) pass = false;
    const double me = min_eigenvalue(H);
    if (me < worst) {
      worst = me;
      worst_alpha = alpha;
    }
    return me;
  };

  if (all_strict) {
    // Spectral radii < 1: the disc condition reduces to the circle.
    int best_i = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < alpha_grid; ++i) {
      const double v = probe(std::polar(1.0, two_pi * i / alpha_grid));
      if (v < best_v) {
        best_v = v;
        best_i = i;
      }
    }
    // Refine the eigenvalue minimum around the worst grid angle.
    const double step = two_pi / alpha_grid;
    double a = (best_i - 1) * step, b = (best_i + 1) * step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = probe(std::polar(1.0, x1)), f2 = probe(std::polar(1.0, x2));
    while (b - a > 1e-10) {
      if (f1 > f2) {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + gr * (b - a);
        f2 = probe(std::polar(1.0, x2));
      } else {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - gr * (b - a);
        f1 = probe(std::polar(1.0, x1));
      }
    }
  } else {
    for (int k = 1; k <= 16; ++k) {
      const double r = static_cast<double>(k) / 16.0;
      for (int i = 0; i < alpha_grid; ++i)
        probe(std::polar(r, two_pi * i / alpha_grid));
    }
    probe(cplx{0.0});
  }
  return {pass, worst, worst_alpha};
}

Verdict decide_snp_2x2(const SnpInstance& inst) {
  if (inst.lambda1 == inst.lambda2)
    throw DomainError("decide_snp_2x2: interpolation nodes coincide");
  if (std::abs(inst.lambda1) >= 1.0 || std::abs(inst.lambda2) >= 1.0)
    throw DomainError("decide_snp_2x2: nodes must lie in the open disc");

  const double r1 = spectral_radius(inst.W1);
  const double r2 = spectral_radius(inst.W2);
  const double d = pseudohyperbolic(inst.lambda1, inst.lambda2);

  // (i) spectral radius beyond 1: no interpolant can exist.
  if (r1 > 1.0 + kBand || r2 > 1.0 + kBand) {
    const double rmax = std::max(r1, r2);
    return {Status::Unsolvable, 1.0 - rmax, rmax, 1.0,
            "a target has spectral radius exceeding 1; r(F(lambda_j)) <= 1 is necessary"};
  }
  // (ii) spectral radius on the unit circle: not covered by the criterion.
  if (std::abs(r1 - 1.0) <= kBand || std::abs(r2 - 1.0) <= kBand) {
    const double rmax = std::max(r1, r2);
    return {Status::OutOfTheoremScope, 1.0 - rmax, rmax, 1.0,
            "a target has spectral radius 1 within the boundary band; the "
            "criterion requires spectral radius strictly less than 1"};
  }

  const bool sc1 = inst.W1.is_scalar();
  const bool sc2 = inst.W2.is_scalar();

  if (sc1 && sc2) {
    // (iii) scalar Nevanlinna-Pick reduction.
    const double crit = pseudohyperbolic(inst.W1.a11, inst.W2.a11);
    return graded_verdict(crit, d, false,
                          "both targets scalar: reduced to a scalar two-point "
                          "Nevanlinna-Pick problem");
  }
  if (sc1 != sc2) {
    // (iv) one scalar target cI: r((W - cI)(I - conj(c) W)^{-1}) <= d.
    const cplx c = sc1 ? inst.W1.a11 : inst.W2.a11;
    const Mat2& W = sc1 ? inst.W2 : inst.W1;
    const Mat2 M = (W - Mat2::identity() * c) *
                   (Mat2::identity() - W * std::conj(c)).inverse();
    std::string detail =
        "one scalar target: criterion r((W - cI)(I - conj(c) W)^{-1})";
    append_conditioning_warning(detail, W, "the nonscalar target");
    return graded_verdict(spectral_radius(M), d, false, std::move(detail));
  }

  // (v) both nonscalar: condition (2), with condition (3) as cross-check.
  const GammaPoint z1{inst.W1.trace(), inst.W1.det()};
  const GammaPoint z2{inst.W2.trace(), inst.W2.det()};
  const DistanceResult C = caratheodory_G(z1, z2);
  const double margin = d - C.value;

  const NecessaryResult nec = necessary_condition_snp(
      {inst.lambda1, inst.lambda2}, {inst.W1, inst.W2});
  if (std::abs(margin) > kBand) {
    const bool solv2 = margin > 0.0;
    if (solv2 != nec.pass) {
      std::ostringstream os;
      os << "decide_snp_2x2: conditions (2) and (3) disagree away from the "
            "boundary band (margin=" << margin
         << ", min eigenvalue=" << nec.min_eigenvalue << ")";
      throw InternalInconsistency(os.str());
    }
  }

  std::string detail = "both targets nonscalar: criterion C_G((s1,p1),(s2,p2)) "
                       "<= d(lambda1,lambda2); PSD cross-check agrees";
  append_conditioning_warning(detail, inst.W1, "W1");
  append_conditioning_warning(detail, inst.W2, "W2");
  return graded_verdict(C.value, d, true, std::move(detail));
}

Verdict decide_scf_2x2(const ScfInstance& inst) {
  if (inst.V0.is_scalar())
    throw NonscalarRequired("decide_scf_2x2: V0 must be nonscalar");
  const cplx s0 = inst.V0.trace(), p0 = inst.V0.det();
  if (!in_open_G({s0, p0}))
    throw DomainError("decide_scf_2x2: r(V0) >= 1, (s0, p0) outside open G");

  const cplx s1 = inst.V1.trace();
  // p1 is the sum of the two mixed determinants of (V0, V1) columns.
  const cplx p1 = (inst.V0.a11 * inst.V1.a22 - inst.V1.a12 * inst.V0.a21) +
                  (inst.V1.a11 * inst.V0.a22 - inst.V0.a12 * inst.V1.a21);

  const double crit = infinitesimal_caratheodory_G({{s0, p0}, s1, p1});
  std::string detail =
      "criterion c_G((s0,p0); (s1,p1)) <= 1; characterizes interpolants with "
      "the strict bound r(F(lambda)) < 1";
  append_conditioning_warning(detail, inst.V0, "V0");
  return graded_verdict(crit, 1.0, false, std::move(detail));
}

Verdict decide_tetra_schwarz(const TetraSchwarzInstance& inst) {
  const double l0 = std::abs(inst.lambda0);
  if (l0 == 0.0 || l0 >= 1.0)
    throw DomainError("decide_tetra_schwarz: need 0 < |lambda0| < 1");

  cplx a = inst.a, b = inst.b;
  std::string detail;
  if (std::abs(b) > std::abs(a)) {
    std::swap(a, b);
    detail += "|b| > |a|: a and b swapped (permutation similarity preserves "
              "diagonal uncertainty). ";
  }
  const cplx p = inst.p;
  const double ap = std::abs(p);
  if (ap >= 1.0) {
    return {Status::Unsolvable, 1.0 - ap, ap, 1.0,
            detail + "|p| >= 1: the criterion requires |det W2| < 1"};
  }

  if (inst.zeta != cplx{0.0}) {
    const double crit =
        (std::abs(a - std::conj(b) * p) + std::abs(a * b - p)) / (1.0 - ap * ap);
    detail += "zeta != 0 branch: (|a - conj(b) p| + |ab - p|)/(1 - |p|^2) <= |lambda0|";
    if (std::abs(inst.zeta) < 1e-6)
      detail += ". WARNING: |zeta| < 1e-6; solutions are not locally bounded "
                "as zeta -> 0, the instance is ill-conditioned";
    return graded_verdict(crit, l0, false, std::move(detail));
  }

  // zeta = 0 branch. The quartic |l|^4 - S |l|^2 + |p|^2 >= 0 also holds on a
  // spurious low-|lambda0| interval; solvability is the monotone branch
  // |lambda0|^2 >= larger root, which reproduces the 1/sqrt(2) threshold at
  // a = b = p = 1/2.
  const double S = std::norm(a) + std::norm(b) + 2.0 * std::abs(a * b - p);
  const double disc = std::max(S * S - 4.0 * ap * ap, 0.0);
  const double crit = std::sqrt((S + std::sqrt(disc)) / 2.0);
  std::ostringstream os;
  os << detail
     << "zeta = 0 branch: |lambda0| >= sqrt of the larger root of "
        "t^2 - (|a|^2+|b|^2+2|ab-p|) t + |p|^2 (quartic value "
     << (std::pow(l0, 4) - S * l0 * l0 + ap * ap) << ")";
  return graded_verdict(crit, l0, false, os.str());
}

Verdict decide_mu_cf(const MuCfInstance& inst) {
  if (inst.V1.is_diagonal())
    throw NondiagonalRequired("decide_mu_cf: V1 must be nondiagonal");
  const double crit =
      std::max(std::abs(inst.V1.a11), std::abs(inst.V1.a22)) +
      std::abs(inst.zeta * inst.V1.a21);
  return graded_verdict(crit, 1.0, false,
                        "criterion max(|v11|, |v22|) + |zeta v21| <= 1");
}

} // namespace musyn
