#include "hh/families.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hh {

namespace {

RationalExpr rho() {
  return RationalExpr::generator(GW) * RationalExpr::generator(GX) +
         RationalExpr::generator(GZ) * RationalExpr::generator(GY);
}

RationalExpr monomialWZ(const RationalExpr& scale, int i, int j, int extraRhoPower) {
  return scale * RationalExpr::generator(GW).pow(i) * RationalExpr::generator(GZ).pow(j) *
         rho().pow(-extraRhoPower);
}

// Exact binomial coefficient as a kernel constant.
GaussianRational binomial(int n, int r) {
  GaussianRational acc(1);
  for (int i = 1; i <= r; ++i)
    acc = acc * GaussianRational(n - r + i) / GaussianRational(i);
  return acc;
}

// Power term d/dy-side factor for the closed-form metric displays; returns
// zero when the exponent would be negative.
RationalExpr powerDerivative(const RationalExpr& scale, int exponent, int gen) {
  if (exponent <= 0) return RationalExpr();
  return scale * RationalExpr(exponent) * RationalExpr::generator(gen).pow(exponent - 1);
}

}  // namespace

std::string familyTagName(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Monomial: return "monomial";
    case FamilyTag::Elementary: return "elementary";
    case FamilyTag::SpecialMonomial: return "special-monomial";
    case FamilyTag::SparlingTod: return "sparling-tod";
    case FamilyTag::EguchiHanson: return "eguchi-hanson";
  }
  return "unknown";
}

bool familyTagFromName(const std::string& name, FamilyTag& out) {
  for (FamilyTag tag : {FamilyTag::Monomial, FamilyTag::Elementary, FamilyTag::SpecialMonomial,
                        FamilyTag::SparlingTod, FamilyTag::EguchiHanson}) {
    if (familyTagName(tag) == name) {
      out = tag;
      return true;
    }
  }
  return false;
}

PotentialPair makeFamily(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::Monomial:
      return {spec.a * RationalExpr::generator(GX).pow(spec.l),
              spec.b * RationalExpr::generator(GY).pow(spec.k)};
    case FamilyTag::SpecialMonomial:
      return {monomialWZ(spec.a, spec.k, spec.l, spec.k + spec.l + 1),
              monomialWZ(spec.b, spec.m, spec.n, spec.m + spec.n + 1)};
    case FamilyTag::Elementary: {
      RationalExpr f0 = spec.a * RationalExpr::generator(GW).pow(spec.k) *
                        RationalExpr::generator(GZ).pow(spec.l);
      RationalExpr f1 = spec.b * RationalExpr::generator(GW).pow(spec.m) *
                        RationalExpr::generator(GZ).pow(spec.n);
      return makeElementaryState(f0, f1);
    }
    case FamilyTag::SparlingTod: {
      FamilySpec st;
      st.tag = FamilyTag::SpecialMonomial;
      st.k = 0;
      st.l = 1;
      st.m = 1;
      st.n = 0;
      st.a = RationalExpr(-1);
      st.b = RationalExpr(1);
      return makeFamily(st);
    }
    case FamilyTag::EguchiHanson: {
      RationalExpr r = rho();
      RationalExpr w = RationalExpr::generator(GW);
      RationalExpr x = RationalExpr::generator(GX);
      RationalExpr y = RationalExpr::generator(GY);
      RationalExpr z = RationalExpr::generator(GZ);
      RationalExpr t0 = -(y * (RationalExpr(2) * w * x + z * y)) / (w.pow(2) * r.pow(2));
      RationalExpr t1 = -(y.pow(2)) / (w * r.pow(2));
      return {t0, t1};
    }
  }
  throw std::logic_error("unknown family tag");
}

PotentialPair makeElementaryState(const RationalExpr& f0, const RationalExpr& f1) {
  for (const RationalExpr* f : {&f0, &f1}) {
    if (!f->diff(GX).isZero() || !f->diff(GY).isZero())
      throw std::invalid_argument("elementary-state data must depend on the first two slots only");
  }
  RationalExpr r = rho();
  std::map<int, RationalExpr> subs = {{GW, RationalExpr::generator(GW) / r},
                                      {GZ, RationalExpr::generator(GZ) / r}};
  return {f0.substituted(subs) / r, f1.substituted(subs) / r};
}

FamilyMetricCheck familyMetricCheck(const FamilySpec& spec) {
  FamilyMetricCheck out;
  out.residual = zeroMat4();
  Mat4 expected = zeroMat4();
  expected[0][2] = expected[2][0] = RationalExpr(1);
  expected[1][3] = expected[3][1] = RationalExpr(1);
  switch (spec.tag) {
    case FamilyTag::Monomial: {
      RationalExpr wz =
          powerDerivative(spec.b, spec.k, GY) - powerDerivative(spec.a, spec.l, GX);
      expected[0][1] = expected[1][0] = wz;
      break;
    }
    case FamilyTag::SpecialMonomial: {
      RationalExpr p =
          monomialWZ(spec.a * RationalExpr(spec.k + spec.l + 1), spec.k, spec.l,
                     spec.k + spec.l + 2);
      RationalExpr q =
          monomialWZ(spec.b * RationalExpr(spec.m + spec.n + 1), spec.m, spec.n,
                     spec.m + spec.n + 2);
      RationalExpr w = RationalExpr::generator(GW), z = RationalExpr::generator(GZ);
      expected[0][0] = RationalExpr(-2) * p * z;
      expected[1][1] = RationalExpr(2) * q * w;
      expected[0][1] = expected[1][0] = p * w - q * z;
      break;
    }
    default:
      out.supported = false;
      out.matches = false;
      return out;
  }
  out.supported = true;
  Mat4 built = buildGeometry(makeFamily(spec)).metric;
  out.matches = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      RationalExpr res = built[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                         expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out.residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = res;
      if (!res.isZero()) out.matches = false;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Residue construction.
// ---------------------------------------------------------------------------

namespace {

// The generating function for one component is
//   (-1)^kk scale kk! ll!/(kk+ll)! lambda^{kk+ll}
//       (w + lambda y)^{-(ll+1)} (z - lambda x)^{-(kk+1)}.
// Without the factorial prefactor its residue would be
// C(kk+ll,kk) w^kk z^ll / rho^{kk+ll+1}; the prefactor normalises the family
// so the residue is exactly the closed-form potential w^kk z^ll/rho^{kk+ll+1}.
// (The two coincide whenever kk = 0 or ll = 0.)
GaussianRational poleNormalisation(int kk, int ll) {
  return GaussianRational(1) / binomial(kk + ll, kk);
}

// Residue at the first pole for one component with data (kk, ll, scale):
// shift lambda = -w/y + t and read the t^{ll} coefficient of
//   (-1)^kk scale (t - w/y)^{kk+ll} y^{kk-ll} rho^{-(kk+1)}
//      sum_{j<=ll} C(kk+j, kk) (x y / rho)^j t^j.
RationalExpr residueComponentFirstPole(int kk, int ll, const RationalExpr& scale) {
  RationalExpr w = RationalExpr::generator(GW), y = RationalExpr::generator(GY);
  RationalExpr x = RationalExpr::generator(GX), t = RationalExpr::generator(GT);
  RationalExpr r = rho();
  RationalExpr shifted = (t - w / y).pow(kk + ll);
  RationalExpr series;
  for (int j = 0; j <= ll; ++j) {
    RationalExpr term = RationalExpr(binomial(kk + j, kk)) * (x * y / r).pow(j) * t.pow(j);
    series += term;
  }
  RationalExpr g = RationalExpr(kk % 2 == 0 ? 1 : -1) *
                   RationalExpr(poleNormalisation(kk, ll)) * scale * y.pow(kk - ll) *
                   r.pow(-(kk + 1)) * shifted * series;
  return g.coefficientOf(GT, ll);
}

// Residue at the second pole lambda = z/x: shift lambda = z/x + t and read
// the t^{kk} coefficient of
//   -scale (t + z/x)^{kk+ll} x^{ll-kk} rho^{-(ll+1)}
//      sum_{j<=kk} C(ll+j, ll) (-x y / rho)^j t^j.
RationalExpr residueComponentSecondPole(int kk, int ll, const RationalExpr& scale) {
  RationalExpr z = RationalExpr::generator(GZ), y = RationalExpr::generator(GY);
  RationalExpr x = RationalExpr::generator(GX), t = RationalExpr::generator(GT);
  RationalExpr r = rho();
  RationalExpr shifted = (t + z / x).pow(kk + ll);
  RationalExpr series;
  for (int j = 0; j <= kk; ++j) {
    series += RationalExpr(binomial(ll + j, ll)) * (-(x * y) / r).pow(j) * t.pow(j);
  }
  RationalExpr g = -RationalExpr(poleNormalisation(kk, ll)) * scale * x.pow(ll - kk) *
                   r.pow(-(ll + 1)) * shifted * series;
  return g.coefficientOf(GT, kk);
}

}  // namespace

PotentialPair residueTheta(const TwistorFunctionSpec& spec) {
  return {residueComponentFirstPole(spec.k, spec.l, spec.a),
          residueComponentFirstPole(spec.m, spec.n, spec.b)};
}

PotentialPair residueThetaSecondPole(const TwistorFunctionSpec& spec) {
  return {residueComponentSecondPole(spec.k, spec.l, spec.a),
          residueComponentSecondPole(spec.m, spec.n, spec.b)};
}

ContourResult contourOracle(const TwistorFunctionSpec& spec, const NumericPoint& p,
                            int samples) {
  using C = std::complex<double>;
  const C w = p.value[GW], z = p.value[GZ], x = p.value[GX], y = p.value[GY];
  const C aVal = spec.a.eval(p), bVal = spec.b.eval(p);

  auto ipow = [](C base, int e) {
    C acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
  };

  const C pole0 = -w / y;
  const C pole1 = z / x;
  double gap = std::abs(pole1 - pole0);
  double radius = std::min(gap / 2.0, 1.0);
  // Keep the contour at least 1e-3 away from both poles of the integrand.
  if (radius < 1e-3 || gap - radius < 1e-3)
    throw std::runtime_error("contour cannot separate the integrand poles at this point");

  ContourResult out;
  out.samples = std::max(samples, 64);
  out.radius = radius;
  const int N = out.samples;
  const double twoPi = 6.283185307179586476925286766559;

  auto integrate = [&](int kk, int ll, C scale) {
    const C norm = poleNormalisation(kk, ll).toComplex();
    C acc = 0.0;
    for (int j = 0; j < N; ++j) {
      double theta = twoPi * static_cast<double>(j) / N;
      // Clockwise traversal.
      C phase = std::polar(1.0, -theta);
      C lam = pole0 + radius * phase;
      C sval = static_cast<double>(kk % 2 == 0 ? 1 : -1) * norm * scale *
               ipow(lam, kk + ll) /
               (ipow(w + lam * y, ll + 1) * ipow(z - lam * x, kk + 1));
      C dLambda = C(0.0, -1.0) * radius * phase;  // d lambda / d theta
      acc += -sval * dLambda;
    }
    acc *= twoPi / N;                  // quadrature weight
    return acc / C(0.0, twoPi);        // divide by 2 pi i
  };

  out.value[0] = integrate(spec.k, spec.l, aVal);
  out.value[1] = integrate(spec.m, spec.n, bVal);
  return out;
}

}  // namespace hh
