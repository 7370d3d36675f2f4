#pragma once

#include <string>
#include <vector>

#include "musyn/gamma.hpp"
#include "musyn/types.hpp"

namespace musyn {

enum class Status { Solvable, SolvableUniquely, Unsolvable, OutOfTheoremScope };

std::string to_string(Status s);

struct Verdict {
  Status status;
  double margin;          // signed slack, positive means solvable side
  double criterion_value;
  double threshold;
  std::string detail;
};

// Two-point 2x2 spectral Nevanlinna-Pick instance.
struct SnpInstance {
  cplx lambda1, lambda2;
  Mat2 W1, W2;
};

// 2x2 spectral Caratheodory-Fejer instance (value and derivative at 0).
struct ScfInstance {
  Mat2 V0, V1;
};

// Schwarz-lemma instance on the tetrablock: nodes 0 and lambda0, targets
// W1 = [[0, zeta], [0, 0]] and W2 with diagonal (a, b), p = det W2.
struct TetraSchwarzInstance {
  cplx lambda0;
  cplx zeta;
  cplx a, b, p;
};

// mu Caratheodory-Fejer instance: V0 = [[0, zeta], [0, 0]], V1 nondiagonal.
struct MuCfInstance {
  cplx zeta;
  Mat2 V1;
};

Verdict decide_snp_2x2(const SnpInstance& inst);

struct NecessaryResult {
  bool pass;
  double min_eigenvalue;
  cplx worst_alpha;
};

// n-point necessary condition: positivity of the alpha-pencil of Pick-type
// matrices. Failure certifies unsolvability; passing certifies nothing.
NecessaryResult necessary_condition_snp(const std::vector<cplx>& nodes,
                                        const std::vector<Mat2>& targets,
                                        int alpha_grid = 512);

Verdict decide_scf_2x2(const ScfInstance& inst);

Verdict decide_tetra_schwarz(const TetraSchwarzInstance& inst);

Verdict decide_mu_cf(const MuCfInstance& inst);

} // namespace musyn
