#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hh/forms.hpp"
#include "hh/spinor.hpp"

namespace hh {

// ---------------------------------------------------------------------------
// A potential pair: the two scalar functions whose second derivatives carry
// the whole geometry.  Stored with lower spinor index; the upper-index pair
// is obtained through the antisymmetric invariant.
// ---------------------------------------------------------------------------
struct PotentialPair {
  RationalExpr theta0, theta1;

  const RationalExpr& lower(int A) const { return A == 0 ? theta0 : theta1; }
  RationalExpr upper(int A) const { return A == 0 ? theta1 : -theta0; }
};

// Directional derivative along the unprimed coordinate spinor directions:
// D_0 = d/dy, D_1 = -d/dx.
RationalExpr DA(const RationalExpr& f, int A);
// The conjugate pair of base derivatives: W_0 = d/dw, W_1 = d/dz.
RationalExpr WA(const RationalExpr& f, int A);

// ---------------------------------------------------------------------------
// Geometry bundle: frame, coframe, metric, two-form basis, torsion one-form,
// connection one-forms, and the fourth-derivative totally symmetric spinor.
// Coordinate components are always ordered (w, z, x, y).
// ---------------------------------------------------------------------------
struct GeometryBundle {
  PotentialPair potential;

  DifferentialForm coframe[2][2];    // e^{AA'}, 1-forms
  VectorFieldOperator frame[2][2];   // dual frame vectors
  Mat4 metric;                       // g_{mn}
  Mat4 inverseMetric;                // g^{mn}
  RationalExpr metricDet;

  DifferentialForm sigmaPrimed[2][2];    // (1/2) eps_{AB} e^{AA'} ^ e^{BB'}
  DifferentialForm sigmaUnprimed[2][2];  // (1/2) eps_{A'B'} e^{AA'} ^ e^{BB'}

  RationalExpr leeScalar;                  // divergence-type scalar s
  std::array<RationalExpr, 2> leeSpinor;   // kappa_A = D_A s
  DifferentialForm leeForm;                // kappa_0 dw + kappa_1 dz

  DifferentialForm connUnprimed[2][2];  // Gamma_{BC}, symmetric, 1-forms
  DifferentialForm connPrimed[2][2];    // Gamma'_{B'C'}, symmetric, 1-forms

  SpinorField weylDirect;  // totally symmetric rank-4, all lower unprimed
};

GeometryBundle buildGeometry(const PotentialPair& p);

// 4x4 exact determinant (used for the unimodularity check).
RationalExpr determinant4(const Mat4& m);

// ---------------------------------------------------------------------------
// Field equations and their structure.
// ---------------------------------------------------------------------------

// The coupled second-order system: both components vanish exactly on
// solutions.
std::array<RationalExpr, 2> hypereqResidual(const PotentialPair& p);

// Split into the linear (flat-wave) part and the quadratic remainder; the two
// parts always sum to the full residual.
struct SpecialCaseSplit {
  std::array<RationalExpr, 2> linear;
  std::array<RationalExpr, 2> nonlinear;
};
SpecialCaseSplit specialCaseResiduals(const PotentialPair& p);

// Commutator of the spectral-parameter pencil L_A = nabla_{A0'} - lambda
// nabla_{A1'}; vanishes for all lambda exactly when the field equations hold.
VectorFieldOperator laxCommutator(const PotentialPair& p);

// The full commutator system of the frame: the mixed symmetrized part and the
// primed-primed part.  eq1 and eq2 vanish identically; eq3 carries the field
// equations.
struct EqSystem {
  VectorFieldOperator eq1[2][2];
  VectorFieldOperator eq2[2][2];
  VectorFieldOperator eq3[2][2];
};
EqSystem eqSystemResiduals(const PotentialPair& p);

// Nijenhuis torsion of the endomorphism J^m_n = sum_A e^{AA'}_n nabla_{AB'}^m
// for a chosen primed index pair, evaluated on all six coordinate 2-plane
// pairs (same ordering as degree-2 form components).
struct NijenhuisResult {
  std::array<VectorFieldOperator, 6> onCoordinatePairs;
  bool isZero() const {
    for (const auto& v : onCoordinatePairs)
      if (!v.isZero()) return false;
    return true;
  }
};
NijenhuisResult nijenhuis(const PotentialPair& p, int Aprime, int Bprime);

// Endomorphism matrix used by the Nijenhuis test, exposed for Lie-transport
// checks.
Mat4 endomorphismMatrix(const PotentialPair& p, int Aprime, int Bprime);

// ---------------------------------------------------------------------------
// The distinguished one-form and its curvature.
// ---------------------------------------------------------------------------
struct MaxwellReport {
  DifferentialForm fieldStrength;  // F = dA
  SpinorField phi;                 // symmetric _A_B part
  SpinorField phiTilde;            // _A'_B' part (vanishes identically)
  bool phiSymmetric;
  bool antiSelfDualPartZero;
  bool reassemblyExact;            // F == phi eps' + phiTilde eps, slotwise
  RationalExpr normSquared;        // g^{mn} A_m A_n
  RationalExpr codifferential;     // d_m (g^{mn} A_n)
};
MaxwellReport maxwellCheck(const PotentialPair& p);

// d Sigma^{A'B'} + A ^ Sigma^{A'B'} for (A'B') in {00, 01, 11}; all three
// vanish exactly on solutions.
std::array<DifferentialForm, 3> leeStructureResidual(const PotentialPair& p);

// First structure equation residual de^{AA'} - e^{BA'} ^ Gamma^A_B
// - e^{AB'} ^ Gamma'^{A'}_{B'}; vanishes exactly on solutions.
std::array<std::array<DifferentialForm, 2>, 2> structureEquationResidual(
    const PotentialPair& p);

// ---------------------------------------------------------------------------
// Curvature: connection 2-forms decomposed on the invariant 2-form basis.
// ---------------------------------------------------------------------------
struct CurvatureDecomposition {
  SpinorField weyl;            // rank-4 symmetric, lower unprimed
  SpinorField weylPrimed;      // rank-4 symmetric, lower primed
  RationalExpr scalar;         // curvature scalar from the unprimed sector
  RationalExpr scalarPrimedRoute;
  SpinorField ricci;           // Phi_{AB A'B'} from the unprimed sector
  SpinorField ricciPrimedRoute;
  bool extractionConsistent;   // overdetermined coefficient slots agree
};
CurvatureDecomposition curvatureDecompose(const PotentialPair& p);

// Quadratic curvature invariant built from the fourth-derivative symmetric
// spinor by raising all four slots and contracting.
RationalExpr weylInvariant(const PotentialPair& p);

// Convenience: the five independent components (by number of 1-indices) of
// the totally symmetric rank-4 spinor from the direct third-derivative
// formula.
std::array<RationalExpr, 5> weylDirectComponents(const PotentialPair& p);

// ---------------------------------------------------------------------------
// Reductions and deformations.
// ---------------------------------------------------------------------------
struct HyperKahlerReport {
  bool divergenceFree;                  // s == 0
  std::optional<bool> gradientMatch;    // candidate scalar reproduces the pair
  std::optional<RationalExpr> heavenlyResidual;  // second-order scalar equation
  bool verdict;                         // divergence-free (and gradient if given)
};
HyperKahlerReport hyperKahlerReduction(const PotentialPair& p,
                                       const std::optional<RationalExpr>& candidate);

// Two first-integral candidates V_{C,A}; the cross-derivative obstruction
// D_0 V_{C,1} - D_1 V_{C,0} reproduces the field-equation residual exactly.
struct FirstIntegralReport {
  std::array<std::array<RationalExpr, 2>, 2> potential;  // [C][A]
  std::array<RationalExpr, 2> obstruction;
};
FirstIntegralReport firstIntegralObstruction(const PotentialPair& p);

// ---------------------------------------------------------------------------
// Gauge freedom.
// ---------------------------------------------------------------------------
// Generator data: h, g0, g1, F0, F1 are functions of (w, z) only.
struct GaugeGenerator {
  RationalExpr h;
  RationalExpr g0, g1;  // upper-index pair
  RationalExpr F0, F1;  // upper-index pair
  void validate() const;  // rejects x- or y-dependence
};

struct GaugeVariationReport {
  VectorFieldOperator generatorField;         // the vector field M
  PotentialPair delta;                        // first-order potential change
  Mat4 metricVariationResidual;               // d/d(eps) g(theta + eps delta) - L_M g
  bool metricMatches;
  DifferentialForm volumeSigmaLie;            // L_M of the dw^dz basis 2-form
  Mat4 endomorphismLie;                       // L_M of the distinguished J
  std::array<RationalExpr, 2> linearizedResidual;  // first-order field equations
};
GaugeVariationReport pureGaugeVariation(const PotentialPair& p, const GaugeGenerator& gen);

// ---------------------------------------------------------------------------
// Scalar wave operator associated to the geometry: box h = Lap h + A^a d_a h,
// where Lap is the divergence-form Laplacian of g.  The frame route
// 2 (nabla_{11'} D_0 - nabla_{01'} D_1) h agrees identically.
// ---------------------------------------------------------------------------
RationalExpr waveOperator(const PotentialPair& p, const RationalExpr& h);
RationalExpr waveOperatorFrameRoute(const PotentialPair& p, const RationalExpr& h);

}  // namespace hh
