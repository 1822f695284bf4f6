#pragma once

#include <array>
#include <complex>
#include <string>

#include "hh/geometry.hpp"

namespace hh {

// ---------------------------------------------------------------------------
// Named families of explicit solutions.
// ---------------------------------------------------------------------------
enum class FamilyTag { Monomial, Elementary, SpecialMonomial, SparlingTod, EguchiHanson };

struct FamilySpec {
  FamilyTag tag = FamilyTag::Monomial;
  int k = 0, l = 0, m = 0, n = 0;
  // Scale parameters; default to the symbolic parameters a and b.
  RationalExpr a = RationalExpr::generator(GA);
  RationalExpr b = RationalExpr::generator(GB);
};

// Tag <-> name used by the command-line surface.
std::string familyTagName(FamilyTag tag);
bool familyTagFromName(const std::string& name, FamilyTag& out);

// Constructs the potential pair for a family specification.
PotentialPair makeFamily(const FamilySpec& spec);

// General elementary state: two holomorphic functions of two slots, given as
// expressions in (w, z) standing for the slot values; the state substitutes
// (w/rho, z/rho) and divides by rho.
PotentialPair makeElementaryState(const RationalExpr& f0, const RationalExpr& f1);

// Compares the metric of a constructed family against the hard-coded
// closed-form displays (available for the Monomial and SpecialMonomial tags).
struct FamilyMetricCheck {
  bool supported;
  bool matches;
  Mat4 residual;
};
FamilyMetricCheck familyMetricCheck(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Contour-integral construction of the special-monomial family.
// ---------------------------------------------------------------------------
// Data of the twistor-line integrand pair: exponents and scales of the two
// simple-pole rational functions on the spectral line.
struct TwistorFunctionSpec {
  int k = 0, l = 0, m = 0, n = 0;
  RationalExpr a = RationalExpr::generator(GA);
  RationalExpr b = RationalExpr::generator(GB);
};

// Exact residue of the spectral-parameter integrand at the pole lambda =
// -w/y, computed by a finite series shift.  Reproduces the special-monomial
// family exactly.
PotentialPair residueTheta(const TwistorFunctionSpec& spec);

// Same residue taken at the second pole lambda = z/x; equal to the negative
// of residueTheta (the two residues of a rational function summing to zero).
PotentialPair residueThetaSecondPole(const TwistorFunctionSpec& spec);

// Numeric contour oracle: trapezoid quadrature of the spectral integrand on a
// clockwise circle about the first pole.  Returns the pair of integrals
// (1/2 pi i) times the contour integral; agrees with residueTheta evaluated
// at the same point to quadrature accuracy.
struct ContourResult {
  std::array<std::complex<double>, 2> value;
  int samples;
  double radius;
};
ContourResult contourOracle(const TwistorFunctionSpec& spec, const NumericPoint& p,
                            int samples);

}  // namespace hh
