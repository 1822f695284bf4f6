// Family-construction tests.
//
// The residue construction is validated two independent ways before it is
// trusted: exact equality against the closed-form special-monomial potentials
// on a grid of exponents, and numeric agreement with a contour-quadrature
// oracle at random-ish complex points.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hh/families.hpp"
#include "hh/parser.hpp"

using namespace hh;

namespace {

NumericPoint samplePoint(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mod(0.6, 1.8), arg(0.0, 6.28318);
  NumericPoint p;
  for (int g = 0; g < kGenCount; ++g) {
    double m = mod(rng), t = arg(rng);
    p.value[static_cast<std::size_t>(g)] = {m * std::cos(t), m * std::sin(t)};
  }
  return p;
}

FamilySpec specialSpec(int k, int l, int m, int n) {
  FamilySpec s;
  s.tag = FamilyTag::SpecialMonomial;
  s.k = k;
  s.l = l;
  s.m = m;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("family constructors produce exact solutions") {
  std::vector<FamilySpec> specs;
  FamilySpec mono;
  mono.tag = FamilyTag::Monomial;
  mono.k = 4;
  mono.l = 3;
  specs.push_back(mono);
  specs.push_back(specialSpec(1, 1, 2, 0));
  FamilySpec st;
  st.tag = FamilyTag::SparlingTod;
  specs.push_back(st);
  FamilySpec eh;
  eh.tag = FamilyTag::EguchiHanson;
  specs.push_back(eh);
  FamilySpec el;
  el.tag = FamilyTag::Elementary;
  el.k = 2;
  el.l = 1;
  el.m = 0;
  el.n = 2;
  specs.push_back(el);
  for (const auto& s : specs) {
    auto r = hypereqResidual(makeFamily(s));
    CHECK(r[0].isZero());
    CHECK(r[1].isZero());
  }
}

TEST_CASE("elementary tag equals the closed-form family") {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l) {
      FamilySpec el;
      el.tag = FamilyTag::Elementary;
      el.k = k;
      el.l = l;
      el.m = l;
      el.n = k;
      FamilySpec sm = specialSpec(k, l, l, k);
      PotentialPair a = makeFamily(el), b = makeFamily(sm);
      CHECK(a.theta0 == b.theta0);
      CHECK(a.theta1 == b.theta1);
    }
}

TEST_CASE("named state equals the elementary state of the slot coordinates") {
  // First slot function -Z, second slot function W.
  PotentialPair viaState = makeElementaryState(parseExpr("-z"), parseExpr("w"));
  FamilySpec st;
  st.tag = FamilyTag::SparlingTod;
  PotentialPair named = makeFamily(st);
  CHECK(viaState.theta0 == named.theta0);
  CHECK(viaState.theta1 == named.theta1);
  CHECK(viaState.theta0 == parseExpr("-z/(w*x+z*y)^2"));
  // Slot data must not involve the second-pair coordinates.
  CHECK_THROWS_AS(makeElementaryState(parseExpr("x"), parseExpr("0")),
                  std::invalid_argument);
}

TEST_CASE("general elementary states solve the equations") {
  PotentialPair p = makeElementaryState(parseExpr("w^2*z - 3*z"), parseExpr("w*z^2 + 2*w"));
  auto r = hypereqResidual(p);
  CHECK(r[0].isZero());
  CHECK(r[1].isZero());
}

TEST_CASE("metric displays match the built metric") {
  FamilySpec mono;
  mono.tag = FamilyTag::Monomial;
  for (auto [k, l] : {std::pair{0, 0}, {1, 2}, {3, 3}, {5, 2}}) {
    mono.k = k;
    mono.l = l;
    auto c = familyMetricCheck(mono);
    CHECK(c.supported);
    CHECK(c.matches);
  }
  for (auto [k, l, m, n] : {std::array{0, 0, 0, 0}, {1, 0, 0, 1}, {2, 1, 1, 2}}) {
    auto c = familyMetricCheck(specialSpec(k, l, m, n));
    CHECK(c.supported);
    CHECK(c.matches);
  }
  FamilySpec eh;
  eh.tag = FamilyTag::EguchiHanson;
  CHECK_FALSE(familyMetricCheck(eh).supported);
}

TEST_CASE("family tag names round-trip") {
  for (FamilyTag t : {FamilyTag::Monomial, FamilyTag::Elementary, FamilyTag::SpecialMonomial,
                      FamilyTag::SparlingTod, FamilyTag::EguchiHanson}) {
    FamilyTag back;
    REQUIRE(familyTagFromName(familyTagName(t), back));
    CHECK(back == t);
  }
  FamilyTag dummy;
  CHECK_FALSE(familyTagFromName("no-such-family", dummy));
}

// ---------------------------------------------------------------------------
// Residue construction.
// ---------------------------------------------------------------------------

TEST_CASE("first-pole residue reproduces the closed-form family exactly") {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      TwistorFunctionSpec ts;
      ts.k = k;
      ts.l = l;
      ts.m = l;  // exercise an independent exponent pair in the second slot
      ts.n = k;
      PotentialPair fromResidue = residueTheta(ts);
      PotentialPair closed = makeFamily(specialSpec(k, l, l, k));
      CHECK(fromResidue.theta0 == closed.theta0);
      CHECK(fromResidue.theta1 == closed.theta1);
    }
}

TEST_CASE("the two residues sum to zero") {
  for (auto [k, l] : {std::pair{0, 0}, {1, 0}, {0, 2}, {2, 3}}) {
    TwistorFunctionSpec ts;
    ts.k = k;
    ts.l = l;
    ts.m = 1;
    ts.n = 1;
    PotentialPair first = residueTheta(ts);
    PotentialPair second = residueThetaSecondPole(ts);
    CHECK(first.theta0 + second.theta0 == RationalExpr());
    CHECK(first.theta1 + second.theta1 == RationalExpr());
  }
}

TEST_CASE("residue potentials solve the equations") {
  TwistorFunctionSpec ts;
  ts.k = 2;
  ts.l = 1;
  ts.m = 0;
  ts.n = 3;
  auto r = hypereqResidual(residueTheta(ts));
  CHECK(r[0].isZero());
  CHECK(r[1].isZero());
}

// ---------------------------------------------------------------------------
// Contour oracle.
// ---------------------------------------------------------------------------

TEST_CASE("contour integral at the all-ones point gives one half") {
  // k = l = m = n = 0 with unit scales: the potentials are 1/rho, and at
  // w = z = x = y = 1 the value is 1/2.
  TwistorFunctionSpec ts;
  ts.a = RationalExpr(1);
  ts.b = RationalExpr(1);
  NumericPoint ones = NumericPoint::ones();
  ContourResult c = contourOracle(ts, ones, 128);
  CHECK(std::abs(c.value[0] - std::complex<double>(0.5, 0.0)) < 1e-10);
  CHECK(std::abs(c.value[1] - std::complex<double>(0.5, 0.0)) < 1e-10);
}

TEST_CASE("contour oracle matches the exact residue at sample points") {
  TwistorFunctionSpec ts;
  ts.k = 1;
  ts.l = 2;
  ts.m = 2;
  ts.n = 0;
  PotentialPair exact = residueTheta(ts);
  for (unsigned seed : {11u, 29u, 47u}) {
    NumericPoint p = samplePoint(seed);
    ContourResult c = contourOracle(ts, p, 256);
    std::complex<double> e0 = exact.theta0.eval(p);
    std::complex<double> e1 = exact.theta1.eval(p);
    double scale0 = std::max(1.0, std::abs(e0));
    double scale1 = std::max(1.0, std::abs(e1));
    CHECK(std::abs(c.value[0] - e0) / scale0 < 1e-8);
    CHECK(std::abs(c.value[1] - e1) / scale1 < 1e-8);
  }
}

TEST_CASE("contour quadrature converges under sample doubling") {
  TwistorFunctionSpec ts;
  ts.k = 0;
  ts.l = 1;
  ts.m = 1;
  ts.n = 0;
  NumericPoint p = samplePoint(101);
  PotentialPair exact = residueTheta(ts);
  std::complex<double> truth = exact.theta0.eval(p);
  double err64 = std::abs(contourOracle(ts, p, 64).value[0] - truth);
  double err256 = std::abs(contourOracle(ts, p, 256).value[0] - truth);
  CHECK(err256 <= err64 + 1e-12);
  CHECK(err256 < 1e-8);
}
