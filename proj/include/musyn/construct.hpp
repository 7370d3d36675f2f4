#pragma once

#include <array>
#include <optional>
#include <string>

#include "musyn/deciders.hpp"
#include "musyn/gamma.hpp"
#include "musyn/polynomial.hpp"
#include "musyn/types.hpp"

namespace musyn {

// Extremal curve lambda -> (s(lambda), p(lambda)) in normal form:
// s(lambda) = 2 (omega0 p(lambda) - lambda) / (1 - omega0 lambda).
struct Geodesic {
  cplx omega0;
  BlaschkeProduct p;
  RationalFunction s;

  GammaPoint eval(cplx lambda) const {
    return {s.eval(lambda), p.eval(lambda)};
  }
};

enum class LiftTag { CompanionForm, SimilarityLifted };

struct MatrixInterpolant {
  std::array<RationalFunction, 4> entries; // row major
  LiftTag tag;

  Mat2 eval(cplx lambda) const {
    return {entries[0].eval(lambda), entries[1].eval(lambda),
            entries[2].eval(lambda), entries[3].eval(lambda)};
  }
};

// omega attaining the Caratheodory maximum for (z1, z2).
cplx find_extremal_omega(const GammaPoint& z1, const GammaPoint& z2);

// Inner function of degree <= 2 with p(l1) = p1, p(l2) = p2 and
// p(boundary_node) = boundary_value, built by one Schur reduction step and a
// circle-parameter root solve for the boundary condition.
BlaschkeProduct interpolate_blaschke(cplx l1, cplx p1, cplx l2, cplx p2,
                                     cplx boundary_node, cplx boundary_value);

Geodesic build_geodesic(cplx omega0, const BlaschkeProduct& p);

struct SnpConstruction {
  Geodesic geodesic;       // extremal geodesic h'
  RationalFunction reparam; // m with h = h' o m; identity when extremal
  RationalFunction s, p;   // the interpolating Gamma-valued map h
  MatrixInterpolant lift;
  bool extremal;
  std::string detail;
};

SnpConstruction construct_snp_interpolant(const SnpInstance& inst);

} // namespace musyn
