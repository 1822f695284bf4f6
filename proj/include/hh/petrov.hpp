#pragma once
// Algebraic classification of a geometry by the root-multiplicity pattern of
// its principal-direction quartic, sampled numerically at several points.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hh/geometry.hpp"

namespace hh {

// Outcome of sampling the curvature quartic at several points.
struct PetrovVerdict {
  std::vector<NumericPoint> pointsUsed;    // points that evaluated cleanly
  std::vector<std::vector<int>> patterns;  // descending multiplicities per point
  std::string label;                       // modal label: I, II, D, III, N, O
  bool consistent = false;                 // every usable point gave the same pattern
};

// Multiplicity pattern to label: {1,1,1,1} -> I, {2,1,1} -> II, {2,2} -> D,
// {3,1} -> III, {4} -> N, empty (vanishing quartic) -> O.
std::string petrovLabelForPattern(const std::vector<int>& pattern);

// Root-multiplicity pattern of the quartic sum_i coeffs[i] * zeta^i, viewed
// projectively (roots at infinity are folded in by a change of frame before
// root finding). Returns the empty pattern when the quartic vanishes; throws
// std::runtime_error if no frame makes the leading coefficient usable.
std::vector<int> quarticRootPattern(const std::array<std::complex<double>, 5>& coeffs,
                                    double clusterTol);

// Sample the quartic built from the totally symmetric curvature spinor at the
// given points (at least three) and aggregate the multiplicity patterns.
// Points where the curvature has a pole, or where the quartic is numerically
// unusable, are skipped; throws std::runtime_error if no point survives.
PetrovVerdict petrovClassify(const PotentialPair& p,
                             const std::vector<NumericPoint>& points,
                             double clusterTol = 1e-6);

}  // namespace hh
