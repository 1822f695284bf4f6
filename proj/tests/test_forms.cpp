// Exterior-calculus tests: graded ring laws, d^2 = 0, the Leibniz rule,
// interior-product antiderivation law, operator commutator Jacobi identity,
// and agreement between the homotopy-formula Lie derivative and the
// coefficient-level one.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh/forms.hpp"
#include "hh/parser.hpp"

using namespace hh;

namespace {

DifferentialForm oneForm(const char* cw, const char* cz, const char* cx, const char* cy) {
  DifferentialForm a(1);
  a.comp(0) = parseExpr(cw);
  a.comp(1) = parseExpr(cz);
  a.comp(2) = parseExpr(cx);
  a.comp(3) = parseExpr(cy);
  return a;
}

VectorFieldOperator vf(const char* cw, const char* cz, const char* cx, const char* cy) {
  return VectorFieldOperator(
      {parseExpr(cw), parseExpr(cz), parseExpr(cx), parseExpr(cy)});
}

const DifferentialForm kAlpha = oneForm("x*y", "w^2", "0", "z");
const DifferentialForm kBeta = oneForm("1", "y", "w*z", "x^2");
const DifferentialForm kGamma = oneForm("z", "0", "y^3", "w");

}  // namespace

TEST_CASE("wedge is graded-commutative and associative") {
  CHECK(wedge(kAlpha, kBeta) == -wedge(kBeta, kAlpha));
  DifferentialForm s = DifferentialForm::scalar(parseExpr("w + y"));
  CHECK(wedge(s, kAlpha) == wedge(kAlpha, s));
  CHECK(wedge(wedge(kAlpha, kBeta), kGamma) == wedge(kAlpha, wedge(kBeta, kGamma)));
  // A 1-form wedges itself to zero.
  CHECK(wedge(kAlpha, kAlpha).isZero());
  // Two-forms commute.
  DifferentialForm ab = wedge(kAlpha, kBeta), ag = wedge(kAlpha, kGamma);
  CHECK(wedge(ab, ag) == wedge(ag, ab));
}

TEST_CASE("wedge basis bookkeeping") {
  DifferentialForm dwdz = wedge(DifferentialForm::d(GW), DifferentialForm::d(GZ));
  CHECK(dwdz.comp(0) == parseExpr("1"));
  DifferentialForm dzdw = wedge(DifferentialForm::d(GZ), DifferentialForm::d(GW));
  CHECK(dzdw.comp(0) == parseExpr("-1"));
  DifferentialForm top = wedge(wedge(DifferentialForm::d(GW), DifferentialForm::d(GZ)),
                               wedge(DifferentialForm::d(GX), DifferentialForm::d(GY)));
  CHECK(top.comp(0) == parseExpr("1"));
  // Reordered wedge picks up the permutation sign: (2,0,3,1) has three
  // inversions, so dx^dw^dy^dz = -dw^dz^dx^dy.
  DifferentialForm reordered =
      wedge(wedge(DifferentialForm::d(GX), DifferentialForm::d(GW)),
            wedge(DifferentialForm::d(GY), DifferentialForm::d(GZ)));
  CHECK(reordered == -top);
}

TEST_CASE("exterior derivative squares to zero") {
  DifferentialForm f = DifferentialForm::scalar(parseExpr("w^2*y/(x + z)"));
  CHECK(exteriorDerivative(exteriorDerivative(f)).isZero());
  CHECK(exteriorDerivative(exteriorDerivative(kAlpha)).isZero());
  DifferentialForm two = wedge(kAlpha, kBeta);
  CHECK(exteriorDerivative(exteriorDerivative(two)).isZero());
}

TEST_CASE("exterior derivative of a scalar collects partials") {
  DifferentialForm df = exteriorDerivative(DifferentialForm::scalar(parseExpr("w*x + z*y")));
  CHECK(df.comp(0) == parseExpr("x"));
  CHECK(df.comp(1) == parseExpr("y"));
  CHECK(df.comp(2) == parseExpr("w"));
  CHECK(df.comp(3) == parseExpr("z"));
}

TEST_CASE("graded Leibniz rule for d") {
  // d(a ^ b) = da ^ b - a ^ db for 1-forms a, b.
  CHECK(exteriorDerivative(wedge(kAlpha, kBeta)) ==
        wedge(exteriorDerivative(kAlpha), kBeta) - wedge(kAlpha, exteriorDerivative(kBeta)));
  // d(f a) = df ^ a + f da.
  DifferentialForm f = DifferentialForm::scalar(parseExpr("x^2 - w"));
  CHECK(exteriorDerivative(wedge(f, kAlpha)) ==
        wedge(exteriorDerivative(f), kAlpha) + wedge(f, exteriorDerivative(kAlpha)));
}

TEST_CASE("interior product is an antiderivation") {
  VectorFieldOperator v = vf("y", "x*w", "1", "z^2");
  // i_V on 1-forms pairs coefficients.
  CHECK(interiorProduct(v, kAlpha).comp(0) ==
        parseExpr("y*x*y + x*w*w^2 + z^2*z"));
  // i_V(a ^ b) = (i_V a) b - a (i_V b) for 1-forms.
  CHECK(interiorProduct(v, wedge(kAlpha, kBeta)) ==
        wedge(interiorProduct(v, kAlpha), kBeta) - wedge(kAlpha, interiorProduct(v, kBeta)));
  // i_V i_V = 0 on 2- and 3-forms.
  DifferentialForm three = wedge(wedge(kAlpha, kBeta), kGamma);
  CHECK(interiorProduct(v, interiorProduct(v, three)).isZero());
}

TEST_CASE("operator commutator satisfies the Jacobi identity") {
  VectorFieldOperator u = vf("z", "w", "0", "x*y");
  VectorFieldOperator v = vf("1", "y^2", "w", "0");
  VectorFieldOperator t = vf("x", "0", "z", "w + y");
  VectorFieldOperator jac = commutator(u, commutator(v, t)) + commutator(v, commutator(t, u)) +
                            commutator(t, commutator(u, v));
  CHECK(jac.isZero());
  // Commutator acts as the bracket of derivations.
  RationalExpr f = parseExpr("w^2*y + x/(1 + z^2)");
  CHECK(commutator(u, v).apply(f) == u.apply(v.apply(f)) - v.apply(u.apply(f)));
}

TEST_CASE("partial-derivative operators commute") {
  for (int c1 : {GW, GZ, GX, GY})
    for (int c2 : {GW, GZ, GX, GY})
      CHECK(commutator(VectorFieldOperator::partial(c1), VectorFieldOperator::partial(c2))
                .isZero());
}

TEST_CASE("homotopy Lie derivative matches the coefficient formula on forms") {
  // For a 1-form: (L_V a)_m = V^s d_s a_m + a_s d_m V^s.
  VectorFieldOperator v = vf("y*z", "w", "x^2", "1");
  DifferentialForm viaHomotopy = lieDerivativeForm(v, kAlpha);
  DifferentialForm viaCoeffs(1);
  for (int m = 0; m < 4; ++m) {
    RationalExpr acc = v.apply(kAlpha.comp(m));
    for (int s = 0; s < 4; ++s) acc += kAlpha.comp(s) * v.coeff(s).diff(m);
    viaCoeffs.comp(m) = acc;
  }
  CHECK(viaHomotopy == viaCoeffs);
  // L_V commutes with d.
  CHECK(lieDerivativeForm(v, exteriorDerivative(kAlpha)) ==
        exteriorDerivative(lieDerivativeForm(v, kAlpha)));
}

TEST_CASE("metric Lie derivative detects flat-metric isometries") {
  // Flat pairing 2(dw dx + dz dy): rotations in the (w, x) block preserve it.
  Mat4 g = zeroMat4();
  g[0][2] = g[2][0] = RationalExpr(1);
  g[1][3] = g[3][1] = RationalExpr(1);
  // Translations.
  CHECK(mat4IsZero(lieDerivativeMetric(vf("1", "0", "0", "0"), g)));
  // The scaling (w, -x) preserves dw dx.
  CHECK(mat4IsZero(lieDerivativeMetric(vf("w", "0", "-x", "0"), g)));
  // Plain scaling does not.
  CHECK_FALSE(mat4IsZero(lieDerivativeMetric(vf("w", "0", "x", "0"), g)));
}

TEST_CASE("endomorphism Lie derivative vanishes for linear flows preserving J") {
  // J: d/dw -> d/dz, d/dz -> -d/dw on the first block (constant matrix).
  Mat4 j = zeroMat4();
  j[1][0] = RationalExpr(1);
  j[0][1] = RationalExpr(-1);
  j[3][2] = RationalExpr(1);
  j[2][3] = RationalExpr(-1);
  // The rotation generator commutes with its own complex structure.
  VectorFieldOperator rot = vf("-z", "w", "-y", "x");
  CHECK(mat4IsZero(lieDerivativeEndomorphism(rot, j)));
  // A shear does not.
  CHECK_FALSE(mat4IsZero(lieDerivativeEndomorphism(vf("z", "0", "0", "0"), j)));
  // Any constant vector field preserves a constant J.
  CHECK(mat4IsZero(lieDerivativeEndomorphism(vf("1", "2", "3", "4"), j)));
}

TEST_CASE("form printing is readable") {
  CHECK(DifferentialForm::d(GW).str() == "(1)*dw");
  DifferentialForm two = wedge(DifferentialForm::d(GX), DifferentialForm::d(GY));
  CHECK(two.str() == "(1)*dx^dy");
  CHECK(DifferentialForm(2).str() == "0");
}
