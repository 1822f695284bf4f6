// Spinor-algebra tests.  The sign conventions exercised here are the single
// source of truth for the whole geometry layer: the antisymmetric invariant
// has component [0][1] = +1 in every position, raising uses eps^{AB} from the
// left, lowering uses eps_{BA} from the right.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh/parser.hpp"
#include "hh/spinor.hpp"

using namespace hh;

namespace {

SpinorField vectorUp(IndexKind kind, const RationalExpr& c0, const RationalExpr& c1) {
  SpinorField v(std::vector<SlotSpec>{{kind, Variance::Up}});
  v.at({0}) = c0;
  v.at({1}) = c1;
  return v;
}

SpinorField vectorDown(IndexKind kind, const RationalExpr& c0, const RationalExpr& c1) {
  SpinorField v(std::vector<SlotSpec>{{kind, Variance::Down}});
  v.at({0}) = c0;
  v.at({1}) = c1;
  return v;
}

}  // namespace

TEST_CASE("epsilon components and self-contraction") {
  for (auto kind : {IndexKind::Unprimed, IndexKind::Primed})
    for (auto var : {Variance::Up, Variance::Down}) {
      SpinorField e = epsilonSpinor(kind, var);
      CHECK(e.at({0, 1}) == RationalExpr(1));
      CHECK(e.at({1, 0}) == RationalExpr(-1));
      CHECK(e.at({0, 0}).isZero());
      CHECK(e.at({1, 1}).isZero());
    }
  // eps_{AB} eps^{AB} = 2 via outer product and two traces.
  SpinorField up = epsilonSpinor(IndexKind::Unprimed, Variance::Up);
  SpinorField dn = epsilonSpinor(IndexKind::Unprimed, Variance::Down);
  SpinorField prod = outerProduct(dn, up);            // _A _B ^C ^D
  SpinorField once = contractSlots(prod, 0, 2);       // -> _B ^D
  SpinorField twice = contractSlots(once, 0, 1);      // -> scalar
  CHECK(twice.at({}) == RationalExpr(2));
}

TEST_CASE("raising and lowering follow the north-west convention") {
  RationalExpr p0 = parseExpr("w"), p1 = parseExpr("z");
  SpinorField psiDown = vectorDown(IndexKind::Unprimed, p0, p1);
  SpinorField psiUp = raiseLowerSlot(psiDown, 0, Variance::Up);
  // psi^0 = psi_1, psi^1 = -psi_0
  CHECK(psiUp.at({0}) == p1);
  CHECK(psiUp.at({1}) == -p0);
  // Exact round trip.
  CHECK(raiseLowerSlot(psiUp, 0, Variance::Down) == psiDown);

  SpinorField phiUp = vectorUp(IndexKind::Primed, p0, p1);
  SpinorField phiDown = raiseLowerSlot(phiUp, 0, Variance::Down);
  // phi_0 = -phi^1, phi_1 = phi^0
  CHECK(phiDown.at({0}) == -p1);
  CHECK(phiDown.at({1}) == p0);
  CHECK(raiseLowerSlot(phiDown, 0, Variance::Up) == phiUp);
}

TEST_CASE("raising matches explicit epsilon contraction") {
  // psi^A = eps^{AB} psi_B computed by outer product + trace must agree with
  // the dedicated slot operation.
  SpinorField psiDown = vectorDown(IndexKind::Unprimed, parseExpr("x^2"), parseExpr("y - w"));
  SpinorField up = epsilonSpinor(IndexKind::Unprimed, Variance::Up);
  SpinorField viaEps = contractSlots(outerProduct(up, psiDown), 1, 2);  // eps^{A .} psi_.
  CHECK(viaEps == raiseLowerSlot(psiDown, 0, Variance::Up));
}

TEST_CASE("basis spinors pair to the invariant") {
  // o_{A'} = (1,0), iota_{A'} = (0,1); after raising, o^{B'} iota^{C'} -
  // iota^{B'} o^{C'} = eps^{B'C'}.
  SpinorField o = vectorDown(IndexKind::Primed, RationalExpr(1), RationalExpr(0));
  SpinorField iota = vectorDown(IndexKind::Primed, RationalExpr(0), RationalExpr(1));
  SpinorField oUp = raiseLowerSlot(o, 0, Variance::Up);
  SpinorField iotaUp = raiseLowerSlot(iota, 0, Variance::Up);
  CHECK(iotaUp.at({0}) == RationalExpr(1));   // iota^{0'} = 1
  CHECK(oUp.at({1}) == RationalExpr(-1));     // o^{1'} = -1
  SpinorField comb = outerProduct(oUp, iotaUp) - outerProduct(iotaUp, oUp);
  CHECK(comb == epsilonSpinor(IndexKind::Primed, Variance::Up));
}

TEST_CASE("double epsilon contraction is the identity") {
  // eps^{AC} eps_{BC} = delta^A_B.
  SpinorField up = epsilonSpinor(IndexKind::Unprimed, Variance::Up);
  SpinorField dn = epsilonSpinor(IndexKind::Unprimed, Variance::Down);
  SpinorField prod = outerProduct(up, dn);       // ^A ^C _B _C
  SpinorField delta = contractSlots(prod, 1, 3); // ^A _B
  CHECK(delta.at({0, 0}) == RationalExpr(1));
  CHECK(delta.at({1, 1}) == RationalExpr(1));
  CHECK(delta.at({0, 1}).isZero());
  CHECK(delta.at({1, 0}).isZero());
}

TEST_CASE("symmetrization projects and is idempotent") {
  SpinorField t(std::vector<SlotSpec>{{IndexKind::Unprimed, Variance::Down},
                                      {IndexKind::Unprimed, Variance::Down}});
  t.at({0, 0}) = parseExpr("w");
  t.at({0, 1}) = parseExpr("x");
  t.at({1, 0}) = parseExpr("y");
  t.at({1, 1}) = parseExpr("z");
  SpinorField s = symmetrizeSlots(t, {0, 1});
  CHECK(s.at({0, 1}) == parseExpr("(x + y)/2"));
  CHECK(s.at({1, 0}) == parseExpr("(x + y)/2"));
  CHECK(s.at({0, 0}) == parseExpr("w"));
  CHECK(symmetrizeSlots(s, {0, 1}) == s);
  // Antisymmetric input symmetrizes to zero.
  SpinorField anti = epsilonSpinor(IndexKind::Unprimed, Variance::Down);
  CHECK(symmetrizeSlots(anti, {0, 1}).isZero());
  // Mismatched slots are rejected.
  SpinorField mixed(std::vector<SlotSpec>{{IndexKind::Unprimed, Variance::Down},
                                          {IndexKind::Primed, Variance::Down}});
  CHECK_THROWS_AS(symmetrizeSlots(mixed, {0, 1}), std::logic_error);
}

TEST_CASE("three-slot symmetrization averages all six permutations") {
  SpinorField t(std::vector<SlotSpec>(3, SlotSpec{IndexKind::Unprimed, Variance::Down}));
  t.at({0, 0, 1}) = parseExpr("w");
  t.at({0, 1, 0}) = parseExpr("z");
  t.at({1, 0, 0}) = parseExpr("x");
  SpinorField s = symmetrizeSlots(t, {0, 1, 2});
  RationalExpr avg = parseExpr("(w + z + x)/3");
  CHECK(s.at({0, 0, 1}) == avg);
  CHECK(s.at({0, 1, 0}) == avg);
  CHECK(s.at({1, 0, 0}) == avg);
  CHECK(s.at({0, 0, 0}).isZero());
}

TEST_CASE("contraction signs: up-down pairing") {
  RationalExpr a0 = parseExpr("w"), a1 = parseExpr("z");
  RationalExpr b0 = parseExpr("x"), b1 = parseExpr("y");
  SpinorField psiUp = vectorUp(IndexKind::Unprimed, a0, a1);
  SpinorField phiDown = vectorDown(IndexKind::Unprimed, b0, b1);
  SpinorField pair = contractSlots(outerProduct(psiUp, phiDown), 0, 1);
  CHECK(pair.at({}) == a0 * b0 + a1 * b1);  // psi^A phi_A
  // Same-kind requirement and variance requirement.
  SpinorField primedDown = vectorDown(IndexKind::Primed, b0, b1);
  CHECK_THROWS_AS(contractSlots(outerProduct(psiUp, primedDown), 0, 1), std::logic_error);
  SpinorField alsoUp = vectorUp(IndexKind::Unprimed, b0, b1);
  CHECK_THROWS_AS(contractSlots(outerProduct(psiUp, alsoUp), 0, 1), std::logic_error);
}

TEST_CASE("skew pairing changes sign with order") {
  // psi^A phi_A = -psi_A phi^A for the same underlying spinors.
  SpinorField psiDown = vectorDown(IndexKind::Unprimed, parseExpr("w"), parseExpr("z^2"));
  SpinorField phiDown = vectorDown(IndexKind::Unprimed, parseExpr("1 + x"), parseExpr("y"));
  SpinorField psiUp = raiseLowerSlot(psiDown, 0, Variance::Up);
  SpinorField phiUp = raiseLowerSlot(phiDown, 0, Variance::Up);
  RationalExpr upDown = contractSlots(outerProduct(psiUp, phiDown), 0, 1).at({});
  RationalExpr downUp = contractSlots(outerProduct(psiDown, phiUp), 0, 1).at({});
  CHECK(upDown == -downUp);
}

TEST_CASE("coordinate chart placement") {
  CHECK(CoordinateChart::coordinate(0, 0) == parseExpr("y"));
  CHECK(CoordinateChart::coordinate(0, 1) == parseExpr("w"));
  CHECK(CoordinateChart::coordinate(1, 0) == parseExpr("-x"));
  CHECK(CoordinateChart::coordinate(1, 1) == parseExpr("z"));
  int A, Ap, sign;
  REQUIRE(CoordinateChart::spinorPosition(GX, A, Ap, sign));
  CHECK(A == 1);
  CHECK(Ap == 0);
  CHECK(sign == -1);
  REQUIRE(CoordinateChart::spinorPosition(GW, A, Ap, sign));
  CHECK(A == 0);
  CHECK(Ap == 1);
  CHECK(sign == 1);
  CHECK_FALSE(CoordinateChart::spinorPosition(GA, A, Ap, sign));
}

TEST_CASE("signature strings") {
  SpinorField t(std::vector<SlotSpec>{{IndexKind::Unprimed, Variance::Down},
                                      {IndexKind::Primed, Variance::Up}});
  CHECK(t.signature() == "_A^A'");
  CHECK(SpinorField().signature() == "scalar");
}
