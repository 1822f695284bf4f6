#include "hh/geometry.hpp"

#include <stdexcept>

namespace hh {

namespace {

constexpr int kEps[2][2] = {{0, 1}, {-1, 0}};  // antisymmetric invariant, [0][1] = +1

RationalExpr half() { return RationalExpr(GaussianRational::fromRationalLiteral("1/2")); }
RationalExpr quarter() { return RationalExpr(GaussianRational::fromRationalLiteral("1/4")); }

// Raise the first index of a symmetric 1-form-valued pair table:
// X^0_B = X_{1B}, X^1_B = -X_{0B}.
DifferentialForm raiseFirst(const DifferentialForm low[2][2], int upper, int B) {
  return upper == 0 ? low[1][B] : -low[0][B];
}

// Exact linear solve A x = rhs for several right-hand sides; A is n x n.
std::vector<std::vector<RationalExpr>> solveLinearExact(
    std::vector<std::vector<RationalExpr>> a, std::vector<std::vector<RationalExpr>> rhs) {
  const std::size_t n = a.size();
  const std::size_t m = rhs.empty() ? 0 : rhs.front().size();
  for (std::size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
    // Pivot: prefer the structurally simplest nonzero entry in this column.
    std::size_t best = n;
    std::size_t bestTerms = 0;
    for (std::size_t r = row; r < n; ++r) {
      if (a[r][col].isZero()) continue;
      std::size_t terms = a[r][col].numerator().termCount();
      if (best == n || terms < bestTerms) {
        best = r;
        bestTerms = terms;
      }
    }
    if (best == n) throw std::logic_error("singular linear system in curvature split");
    std::swap(a[row], a[best]);
    std::swap(rhs[row], rhs[best]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col].isZero()) continue;
      RationalExpr factor = a[r][col] / a[row][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
      for (std::size_t c = 0; c < m; ++c) rhs[r][c] -= factor * rhs[row][c];
    }
  }
  std::vector<std::vector<RationalExpr>> x(n, std::vector<RationalExpr>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c) x[i][c] = rhs[i][c] / a[i][i];
  return x;
}

RationalExpr det3(const Mat4& g, const std::array<int, 3>& rows,
                  const std::array<int, 3>& cols) {
  auto e = [&](int r, int c) -> const RationalExpr& {
    return g[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])]
            [static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])];
  };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

std::array<int, 3> complement(int k) {
  std::array<int, 3> out{};
  int j = 0;
  for (int i = 0; i < 4; ++i)
    if (i != k) out[static_cast<std::size_t>(j++)] = i;
  return out;
}

// Evaluate a 2-form on two vector fields.
RationalExpr formOnVectors(const DifferentialForm& f, const VectorFieldOperator& v,
                           const VectorFieldOperator& w) {
  return interiorProduct(w, interiorProduct(v, f)).comp(0);
}

SpinorField symmetricRank4(IndexKind kind, const std::array<RationalExpr, 5>& byOnes) {
  SpinorField t(std::vector<SlotSpec>(4, SlotSpec{kind, Variance::Down}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          t.at({i, j, k, l}) = byOnes[static_cast<std::size_t>(i + j + k + l)];
  return t;
}

}  // namespace

RationalExpr DA(const RationalExpr& f, int A) {
  return A == 0 ? f.diff(GY) : -f.diff(GX);
}

RationalExpr WA(const RationalExpr& f, int A) {
  return A == 0 ? f.diff(GW) : f.diff(GZ);
}

RationalExpr determinant4(const Mat4& m) {
  RationalExpr det;
  for (int c = 0; c < 4; ++c) {
    RationalExpr cof = det3(m, complement(0), complement(c));
    RationalExpr term = m[0][static_cast<std::size_t>(c)] * cof;
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

GeometryBundle buildGeometry(const PotentialPair& p) {
  GeometryBundle b;
  b.potential = p;

  const RationalExpr up[2] = {p.upper(0), p.upper(1)};

  // Frame: nabla_{A0'} = D_A; nabla_{A1'} = W_A - (D_A Theta^B) D_B.
  b.frame[0][0] = VectorFieldOperator::partial(GY);
  b.frame[1][0] = -VectorFieldOperator::partial(GX);
  for (int A = 0; A < 2; ++A) {
    VectorFieldOperator v;
    v.coeff(A == 0 ? 0 : 1) = RationalExpr(1);  // d/dw or d/dz
    v.coeff(2) = DA(up[1], A);                  // +(D_A Theta^1) d/dx
    v.coeff(3) = -DA(up[0], A);                 // -(D_A Theta^0) d/dy
    b.frame[A][1] = v;
  }

  // Coframe: e^{A1'} = (dw, dz); e^{A0'} = dx^A + (D_B Theta^A) dw^B.
  b.coframe[0][1] = DifferentialForm::d(GW);
  b.coframe[1][1] = DifferentialForm::d(GZ);
  for (int A = 0; A < 2; ++A) {
    DifferentialForm f(1);
    f.comp(0) = DA(up[A], 0);  // dw coefficient
    f.comp(1) = DA(up[A], 1);  // dz coefficient
    if (A == 0)
      f.comp(3) = RationalExpr(1);  // dx^0 = dy
    else
      f.comp(2) = RationalExpr(-1);  // dx^1 = -dx
    b.coframe[A][0] = f;
  }

  // Metric by double contraction with the invariant, then symmetrization.
  Mat4 raw = zeroMat4();
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      if (kEps[A][B] == 0) continue;
      for (int Ap = 0; Ap < 2; ++Ap)
        for (int Bp = 0; Bp < 2; ++Bp) {
          if (kEps[Ap][Bp] == 0) continue;
          int sign = kEps[A][B] * kEps[Ap][Bp];
          for (int mu = 0; mu < 4; ++mu) {
            if (b.coframe[A][Ap].comp(mu).isZero()) continue;
            for (int nu = 0; nu < 4; ++nu) {
              RationalExpr term = b.coframe[A][Ap].comp(mu) * b.coframe[B][Bp].comp(nu);
              auto& slot = raw[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
              slot += sign > 0 ? term : -term;
            }
          }
        }
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      b.metric[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          (raw[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] +
           raw[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)]) *
          half();

  b.metricDet = determinant4(b.metric);
  // Inverse through the adjugate (exact; the determinant is unimodular on
  // this family but the division keeps the construction general).
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      RationalExpr cof = det3(b.metric, complement(c), complement(r));
      if ((r + c) % 2 == 1) cof = -cof;
      b.inverseMetric[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          cof / b.metricDet;
    }

  // Invariant 2-form bases.
  for (int Ap = 0; Ap < 2; ++Ap)
    for (int Bp = 0; Bp < 2; ++Bp) {
      DifferentialForm acc(2);
      for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B) {
          if (kEps[A][B] == 0) continue;
          DifferentialForm w = wedge(b.coframe[A][Ap], b.coframe[B][Bp]);
          acc = kEps[A][B] > 0 ? acc + w : acc - w;
        }
      b.sigmaPrimed[Ap][Bp] = acc.scaled(half());
    }
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      DifferentialForm acc(2);
      for (int Ap = 0; Ap < 2; ++Ap)
        for (int Bp = 0; Bp < 2; ++Bp) {
          if (kEps[Ap][Bp] == 0) continue;
          DifferentialForm w = wedge(b.coframe[A][Ap], b.coframe[B][Bp]);
          acc = kEps[Ap][Bp] > 0 ? acc + w : acc - w;
        }
      b.sigmaUnprimed[A][B] = acc.scaled(half());
    }

  // Distinguished one-form.
  b.leeScalar = DA(up[0], 0) + DA(up[1], 1);
  b.leeSpinor = {DA(b.leeScalar, 0), DA(b.leeScalar, 1)};
  {
    DifferentialForm a(1);
    a.comp(0) = b.leeSpinor[0];
    a.comp(1) = b.leeSpinor[1];
    b.leeForm = a;
  }

  // Connection one-forms.  Unprimed sector: mixed third derivatives weighted
  // between the raw and totally symmetrized arrangements; the coefficients
  // multiply the (dw, dz) half of the coframe.
  RationalExpr t3[2][2][2];
  for (int B = 0; B < 2; ++B)
    for (int C = 0; C < 2; ++C)
      for (int A = 0; A < 2; ++A)
        t3[B][C][A] = DA(DA(p.lower(A), C), B);
  for (int B = 0; B < 2; ++B)
    for (int C = 0; C < 2; ++C) {
      DifferentialForm acc(1);
      for (int A = 0; A < 2; ++A) {
        RationalExpr sym = (t3[B][C][A] + t3[B][A][C] + t3[C][B][A] + t3[C][A][B] +
                            t3[A][B][C] + t3[A][C][B]) /
                           RationalExpr(6);
        RationalExpr coef = quarter() * t3[B][C][A] +
                            RationalExpr(GaussianRational::fromRationalLiteral("3/4")) * sym;
        acc = acc + b.coframe[A][1].scaled(coef);
      }
      b.connUnprimed[B][C] = acc;
    }
  b.connPrimed[0][0] = DifferentialForm(1);
  {
    DifferentialForm mixed(1);
    mixed.comp(0) = quarter() * b.leeSpinor[0];
    mixed.comp(1) = quarter() * b.leeSpinor[1];
    b.connPrimed[0][1] = mixed;
    b.connPrimed[1][0] = mixed;
    DifferentialForm last =
        b.coframe[0][0].scaled(b.leeSpinor[0]) + b.coframe[1][0].scaled(b.leeSpinor[1]);
    b.connPrimed[1][1] = last.scaled(-half());
  }

  // Fourth-derivative totally symmetric spinor from the direct route.
  b.weylDirect = symmetricRank4(IndexKind::Unprimed, weylDirectComponents(p));
  return b;
}

std::array<RationalExpr, 2> hypereqResidual(const PotentialPair& p) {
  std::array<RationalExpr, 2> r;
  const RationalExpr t0x = p.theta0.diff(GX), t0y = p.theta0.diff(GY);
  const RationalExpr t1x = p.theta1.diff(GX), t1y = p.theta1.diff(GY);
  for (int C = 0; C < 2; ++C) {
    const RationalExpr& th = p.lower(C);
    r[static_cast<std::size_t>(C)] =
        th.diff(GW).diff(GX) + th.diff(GZ).diff(GY) - t0y * th.diff(GX).diff(GX) +
        (t0x - t1y) * th.diff(GX).diff(GY) + t1x * th.diff(GY).diff(GY);
  }
  return r;
}

SpecialCaseSplit specialCaseResiduals(const PotentialPair& p) {
  SpecialCaseSplit s;
  auto full = hypereqResidual(p);
  for (int C = 0; C < 2; ++C) {
    const RationalExpr& th = p.lower(C);
    s.linear[static_cast<std::size_t>(C)] = th.diff(GW).diff(GX) + th.diff(GZ).diff(GY);
    s.nonlinear[static_cast<std::size_t>(C)] =
        full[static_cast<std::size_t>(C)] - s.linear[static_cast<std::size_t>(C)];
  }
  return s;
}

VectorFieldOperator laxCommutator(const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);
  RationalExpr lam = RationalExpr::generator(GLambda);
  VectorFieldOperator l0 = b.frame[0][0] - b.frame[0][1].scaled(lam);
  VectorFieldOperator l1 = b.frame[1][0] - b.frame[1][1].scaled(lam);
  return commutator(l0, l1);
}

EqSystem eqSystemResiduals(const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);
  EqSystem s;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      s.eq1[A][B] = commutator(b.frame[A][0], b.frame[B][0]);
      s.eq2[A][B] =
          commutator(b.frame[A][0], b.frame[B][1]) + commutator(b.frame[A][1], b.frame[B][0]);
      s.eq3[A][B] = commutator(b.frame[A][1], b.frame[B][1]);
    }
  return s;
}

Mat4 endomorphismMatrix(const PotentialPair& p, int Aprime, int Bprime) {
  GeometryBundle b = buildGeometry(p);
  Mat4 j = zeroMat4();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int A = 0; A < 2; ++A)
        j[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] +=
            b.coframe[A][Aprime].comp(nu) * b.frame[A][Bprime].coeff(mu);
  return j;
}

NijenhuisResult nijenhuis(const PotentialPair& p, int Aprime, int Bprime) {
  Mat4 j = endomorphismMatrix(p, Aprime, Bprime);
  auto applyJ = [&](const VectorFieldOperator& v) {
    VectorFieldOperator out;
    for (int mu = 0; mu < 4; ++mu) {
      RationalExpr acc;
      for (int s = 0; s < 4; ++s)
        acc += j[static_cast<std::size_t>(mu)][static_cast<std::size_t>(s)] * v.coeff(s);
      out.coeff(mu) = acc;
    }
    return out;
  };
  NijenhuisResult r;
  const auto& pairs = DifferentialForm::combinations(2);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    VectorFieldOperator X = VectorFieldOperator::partial(pairs[k][0]);
    VectorFieldOperator Y = VectorFieldOperator::partial(pairs[k][1]);
    VectorFieldOperator jx = applyJ(X), jy = applyJ(Y);
    // [X, Y] = 0 for coordinate fields, so the J^2 term drops.
    r.onCoordinatePairs[k] =
        commutator(jx, jy) - applyJ(commutator(jx, Y)) - applyJ(commutator(X, jy));
  }
  return r;
}

MaxwellReport maxwellCheck(const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);
  MaxwellReport r;
  r.fieldStrength = exteriorDerivative(b.leeForm);

  // Frame components F_{(AA')(BB')}.
  RationalExpr F[2][2][2][2];
  for (int A = 0; A < 2; ++A)
    for (int Ap = 0; Ap < 2; ++Ap)
      for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp)
          F[A][Ap][B][Bp] = formOnVectors(r.fieldStrength, b.frame[A][Ap], b.frame[B][Bp]);

  SpinorField phi(std::vector<SlotSpec>(2, SlotSpec{IndexKind::Unprimed, Variance::Down}));
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      phi.at({A, B}) = half() * (F[A][0][B][1] - F[A][1][B][0]);
  SpinorField phiTilde(std::vector<SlotSpec>(2, SlotSpec{IndexKind::Primed, Variance::Down}));
  for (int Ap = 0; Ap < 2; ++Ap)
    for (int Bp = 0; Bp < 2; ++Bp)
      phiTilde.at({Ap, Bp}) = half() * (F[0][Ap][1][Bp] - F[1][Ap][0][Bp]);
  r.phi = phi;
  r.phiTilde = phiTilde;
  r.phiSymmetric = (phi.at({0, 1}) - phi.at({1, 0})).isZero();
  r.antiSelfDualPartZero = phiTilde.isZero();

  r.reassemblyExact = true;
  for (int A = 0; A < 2; ++A)
    for (int Ap = 0; Ap < 2; ++Ap)
      for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp) {
          RationalExpr rebuilt = phi.at({A, B}) * RationalExpr(kEps[Ap][Bp]) +
                                 phiTilde.at({Ap, Bp}) * RationalExpr(kEps[A][B]);
          if (!(rebuilt - F[A][Ap][B][Bp]).isZero()) r.reassemblyExact = false;
        }

  // Scalar invariants of the one-form.
  RationalExpr norm;
  std::array<RationalExpr, 4> aLow = {b.leeSpinor[0], b.leeSpinor[1], RationalExpr(),
                                      RationalExpr()};
  std::array<RationalExpr, 4> aUp;
  for (int mu = 0; mu < 4; ++mu) {
    RationalExpr acc;
    for (int nu = 0; nu < 4; ++nu)
      acc += b.inverseMetric[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] *
             aLow[static_cast<std::size_t>(nu)];
    aUp[static_cast<std::size_t>(mu)] = acc;
    norm += acc * aLow[static_cast<std::size_t>(mu)];
  }
  r.normSquared = norm;
  RationalExpr divergence;
  for (int mu = 0; mu < 4; ++mu) divergence += aUp[static_cast<std::size_t>(mu)].diff(mu);
  r.codifferential = divergence;
  return r;
}

std::array<DifferentialForm, 3> leeStructureResidual(const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);
  std::array<DifferentialForm, 3> out = {DifferentialForm(3), DifferentialForm(3),
                                         DifferentialForm(3)};
  const int pairs[3][2] = {{0, 0}, {0, 1}, {1, 1}};
  for (int k = 0; k < 3; ++k) {
    const DifferentialForm& sig = b.sigmaPrimed[pairs[k][0]][pairs[k][1]];
    out[static_cast<std::size_t>(k)] = exteriorDerivative(sig) + wedge(b.leeForm, sig);
  }
  return out;
}

std::array<std::array<DifferentialForm, 2>, 2> structureEquationResidual(
    const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);
  std::array<std::array<DifferentialForm, 2>, 2> out;
  for (int A = 0; A < 2; ++A)
    for (int Ap = 0; Ap < 2; ++Ap) {
      DifferentialForm res = exteriorDerivative(b.coframe[A][Ap]);
      for (int B = 0; B < 2; ++B)
        res = res - wedge(b.coframe[B][Ap], raiseFirst(b.connUnprimed, A, B));
      for (int Bp = 0; Bp < 2; ++Bp)
        res = res - wedge(b.coframe[A][Bp], raiseFirst(b.connPrimed, Ap, Bp));
      out[static_cast<std::size_t>(A)][static_cast<std::size_t>(Ap)] = res;
    }
  return out;
}

CurvatureDecomposition curvatureDecompose(const PotentialPair& p) {
  GeometryBundle b = buildGeometry(p);

  // Curvature 2-forms of both connection sectors, first index raised.
  DifferentialForm ru[2][2], rp[2][2];
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      DifferentialForm acc = exteriorDerivative(raiseFirst(b.connUnprimed, A, B));
      for (int C = 0; C < 2; ++C)
        acc = acc +
              wedge(raiseFirst(b.connUnprimed, A, C), raiseFirst(b.connUnprimed, C, B));
      ru[A][B] = acc;
      DifferentialForm accP = exteriorDerivative(raiseFirst(b.connPrimed, A, B));
      for (int C = 0; C < 2; ++C)
        accP = accP + wedge(raiseFirst(b.connPrimed, A, C), raiseFirst(b.connPrimed, C, B));
      rp[A][B] = accP;
    }
  // Lower the first index: X_{0B} = -X^1_B, X_{1B} = X^0_B.
  DifferentialForm rl[2][2], rlp[2][2];
  for (int B = 0; B < 2; ++B) {
    rl[0][B] = -ru[1][B];
    rl[1][B] = ru[0][B];
    rlp[0][B] = -rp[1][B];
    rlp[1][B] = rp[0][B];
  }

  // Decompose all eight 2-forms on the invariant basis.
  const DifferentialForm* basis[6] = {&b.sigmaUnprimed[0][0], &b.sigmaUnprimed[0][1],
                                      &b.sigmaUnprimed[1][1], &b.sigmaPrimed[0][0],
                                      &b.sigmaPrimed[0][1],   &b.sigmaPrimed[1][1]};
  std::vector<std::vector<RationalExpr>> mat(6, std::vector<RationalExpr>(6));
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 6; ++col) mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = basis[col]->comp(row);
  const DifferentialForm* columns[8] = {&rl[0][0], &rl[0][1], &rl[1][0], &rl[1][1],
                                        &rlp[0][0], &rlp[0][1], &rlp[1][0], &rlp[1][1]};
  std::vector<std::vector<RationalExpr>> rhs(6, std::vector<RationalExpr>(8));
  for (int row = 0; row < 6; ++row)
    for (int c = 0; c < 8; ++c)
      rhs[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = columns[c]->comp(row);
  auto sol = solveLinearExact(std::move(mat), std::move(rhs));
  auto co = [&](int A, int B, int k) { return sol[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * A + B)]; };
  auto cp = [&](int Ap, int Bp, int k) {
    return sol[static_cast<std::size_t>(k)][static_cast<std::size_t>(4 + 2 * Ap + Bp)];
  };

  CurvatureDecomposition d;
  RationalExpr twelve(12);

  d.scalar = RationalExpr(8) * co(0, 0, 2) - RationalExpr(4) * co(0, 1, 1);
  std::array<RationalExpr, 5> c;
  c[0] = co(0, 0, 0);
  c[1] = co(0, 0, 1) * half();
  c[2] = co(0, 0, 2) - d.scalar / twelve;
  c[3] = co(0, 1, 2);
  c[4] = co(1, 1, 2);
  d.weyl = symmetricRank4(IndexKind::Unprimed, c);

  d.scalarPrimedRoute = RationalExpr(8) * cp(0, 0, 5) - RationalExpr(4) * cp(0, 1, 4);
  std::array<RationalExpr, 5> cpn;
  cpn[0] = cp(0, 0, 3);
  cpn[1] = cp(0, 0, 4) * half();
  cpn[2] = cp(0, 0, 5) - d.scalarPrimedRoute / twelve;
  cpn[3] = cp(0, 1, 5);
  cpn[4] = cp(1, 1, 5);
  d.weylPrimed = symmetricRank4(IndexKind::Primed, cpn);

  std::vector<SlotSpec> mixedSlots = {{IndexKind::Unprimed, Variance::Down},
                                      {IndexKind::Unprimed, Variance::Down},
                                      {IndexKind::Primed, Variance::Down},
                                      {IndexKind::Primed, Variance::Down}};
  SpinorField phi(mixedSlots), phiP(mixedSlots);
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      phi.at({A, B, 0, 0}) = co(A, B, 3);
      phi.at({A, B, 0, 1}) = co(A, B, 4) * half();
      phi.at({A, B, 1, 0}) = co(A, B, 4) * half();
      phi.at({A, B, 1, 1}) = co(A, B, 5);
    }
  for (int Ap = 0; Ap < 2; ++Ap)
    for (int Bp = 0; Bp < 2; ++Bp) {
      phiP.at({0, 0, Ap, Bp}) = cp(Ap, Bp, 0);
      phiP.at({0, 1, Ap, Bp}) = cp(Ap, Bp, 1) * half();
      phiP.at({1, 0, Ap, Bp}) = cp(Ap, Bp, 1) * half();
      phiP.at({1, 1, Ap, Bp}) = cp(Ap, Bp, 2);
    }
  d.ricci = phi;
  d.ricciPrimedRoute = phiP;

  // Overdetermined slots of the expansion must agree with the extraction.
  bool ok = true;
  auto expectZero = [&ok](const RationalExpr& e) {
    if (!e.isZero()) ok = false;
  };
  expectZero(co(1, 1, 0) - d.scalar / twelve - c[2]);
  expectZero(co(0, 1, 0) - c[1]);
  expectZero(co(1, 1, 1) * half() - c[3]);
  expectZero((co(0, 1, 1) + d.scalar / twelve) * half() - c[2]);
  for (int k = 0; k < 6; ++k) expectZero(co(0, 1, k) - co(1, 0, k));
  expectZero(cp(1, 1, 3) - d.scalarPrimedRoute / twelve - cpn[2]);
  expectZero(cp(0, 1, 3) - cpn[1]);
  expectZero(cp(1, 1, 4) * half() - cpn[3]);
  expectZero((cp(0, 1, 4) + d.scalarPrimedRoute / twelve) * half() - cpn[2]);
  for (int k = 0; k < 6; ++k) expectZero(cp(0, 1, k) - cp(1, 0, k));
  d.extractionConsistent = ok;
  return d;
}

std::array<RationalExpr, 5> weylDirectComponents(const PotentialPair& p) {
  // Totally symmetrized fourth-order mixed derivatives D_(A D_B D_C theta_D).
  SpinorField t(std::vector<SlotSpec>(4, SlotSpec{IndexKind::Unprimed, Variance::Down}));
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int C = 0; C < 2; ++C)
        for (int D = 0; D < 2; ++D)
          t.at({A, B, C, D}) = DA(DA(DA(p.lower(D), C), B), A);
  SpinorField s = symmetrizeSlots(t, {0, 1, 2, 3});
  return {s.at({0, 0, 0, 0}), s.at({0, 0, 0, 1}), s.at({0, 0, 1, 1}), s.at({0, 1, 1, 1}),
          s.at({1, 1, 1, 1})};
}

RationalExpr weylInvariant(const PotentialPair& p) {
  SpinorField low = symmetricRank4(IndexKind::Unprimed, weylDirectComponents(p));
  SpinorField high = low;
  for (int s = 0; s < 4; ++s) high = raiseLowerSlot(high, s, Variance::Up);
  SpinorField prod = outerProduct(low, high);
  SpinorField r = contractSlots(prod, 0, 4);
  r = contractSlots(r, 0, 3);
  r = contractSlots(r, 0, 2);
  r = contractSlots(r, 0, 1);
  return r.at({});
}

HyperKahlerReport hyperKahlerReduction(const PotentialPair& p,
                                       const std::optional<RationalExpr>& candidate) {
  HyperKahlerReport r;
  RationalExpr s = DA(p.upper(0), 0) + DA(p.upper(1), 1);
  r.divergenceFree = s.isZero();
  r.verdict = r.divergenceFree;
  if (candidate) {
    const RationalExpr& scalar = *candidate;
    bool grad = (p.theta0 - scalar.diff(GY)).isZero() && (p.theta1 + scalar.diff(GX)).isZero();
    r.gradientMatch = grad;
    RationalExpr heavenly = scalar.diff(GW).diff(GX) + scalar.diff(GZ).diff(GY) +
                            scalar.diff(GX).diff(GX) * scalar.diff(GY).diff(GY) -
                            scalar.diff(GX).diff(GY).pow(2);
    r.heavenlyResidual = heavenly;
    r.verdict = r.verdict && grad;
  }
  return r;
}

FirstIntegralReport firstIntegralObstruction(const PotentialPair& p) {
  FirstIntegralReport r;
  for (int C = 0; C < 2; ++C) {
    for (int A = 0; A < 2; ++A) {
      RationalExpr v = WA(p.lower(C), A);
      for (int B = 0; B < 2; ++B) v -= DA(p.upper(B), A) * DA(p.lower(C), B);
      r.potential[static_cast<std::size_t>(C)][static_cast<std::size_t>(A)] = v;
    }
    r.obstruction[static_cast<std::size_t>(C)] =
        DA(r.potential[static_cast<std::size_t>(C)][1], 0) -
        DA(r.potential[static_cast<std::size_t>(C)][0], 1);
  }
  return r;
}

void GaugeGenerator::validate() const {
  for (const RationalExpr* f : {&h, &g0, &g1, &F0, &F1}) {
    if (!f->diff(GX).isZero() || !f->diff(GY).isZero())
      throw std::invalid_argument("gauge generator data must not depend on x or y");
  }
}

GaugeVariationReport pureGaugeVariation(const PotentialPair& p, const GaugeGenerator& gen) {
  gen.validate();
  GaugeVariationReport r;

  const RationalExpr hw = gen.h.diff(GW), hz = gen.h.diff(GZ);
  const RationalExpr hww = hw.diff(GW), hwz = hw.diff(GZ), hzz = hz.diff(GZ);
  const RationalExpr X = RationalExpr::generator(GX), Y = RationalExpr::generator(GY);

  // The generator vector field M over (w, z, x, y).
  VectorFieldOperator m;
  m.coeff(0) = -hz;
  m.coeff(1) = hw;
  m.coeff(2) = -(gen.g1 + Y * hww - X * hwz);
  m.coeff(3) = gen.g0 - Y * hwz + X * hzz;
  r.generatorField = m;

  // First-order change of the upper-index pair:
  //   vector Lie transport along M, plus the inhomogeneous terms.
  auto xw = [&](const RationalExpr& f) { return Y * f.diff(GW) - X * f.diff(GZ); };
  const RationalExpr up[2] = {p.upper(0), p.upper(1)};
  const RationalExpr mixJac[2][2] = {{-hz.diff(GW), -hz.diff(GZ)}, {hw.diff(GW), hw.diff(GZ)}};
  const RationalExpr inhomog[2] = {gen.g0, gen.g1};
  const RationalExpr hPair[2] = {-hz, hw};
  RationalExpr deltaUp[2];
  for (int B = 0; B < 2; ++B) {
    RationalExpr lie = m.apply(up[B]);
    for (int C = 0; C < 2; ++C) lie -= up[C] * mixJac[B][C];
    deltaUp[B] = lie + (B == 0 ? gen.F0 : gen.F1) + xw(inhomog[B]) +
                 half() * xw(xw(hPair[B]));
  }
  r.delta.theta0 = -deltaUp[1];
  r.delta.theta1 = deltaUp[0];

  // Metric transport: first-order term of the deformed metric versus the Lie
  // derivative of the undeformed one.
  RationalExpr eps = RationalExpr::generator(GEps);
  PotentialPair perturbed{p.theta0 + eps * r.delta.theta0, p.theta1 + eps * r.delta.theta1};
  Mat4 gPerturbed = buildGeometry(perturbed).metric;
  Mat4 gLie = lieDerivativeMetric(m, buildGeometry(p).metric);
  r.metricMatches = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      RationalExpr res = gPerturbed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                             .coefficientOf(GEps, 1) -
                         gLie[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      r.metricVariationResidual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          res;
      if (!res.isZero()) r.metricMatches = false;
    }

  // Invariance of the preferred 2-form and endomorphism.
  DifferentialForm dwdz = wedge(DifferentialForm::d(GW), DifferentialForm::d(GZ));
  r.volumeSigmaLie = lieDerivativeForm(m, dwdz);
  r.endomorphismLie = lieDerivativeEndomorphism(m, endomorphismMatrix(p, 1, 0));

  // Linearized field equations.
  auto resid = hypereqResidual(perturbed);
  for (int C = 0; C < 2; ++C)
    r.linearizedResidual[static_cast<std::size_t>(C)] =
        resid[static_cast<std::size_t>(C)].coefficientOf(GEps, 1);
  return r;
}

RationalExpr waveOperator(const PotentialPair& p, const RationalExpr& h) {
  GeometryBundle b = buildGeometry(p);
  RationalExpr box;
  for (int mu = 0; mu < 4; ++mu) {
    RationalExpr flux;
    for (int nu = 0; nu < 4; ++nu)
      flux += b.inverseMetric[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] *
              h.diff(nu);
    box += flux.diff(mu);
  }
  box += b.leeSpinor[0] * h.diff(GX) + b.leeSpinor[1] * h.diff(GY);
  return box;
}

RationalExpr waveOperatorFrameRoute(const PotentialPair& p, const RationalExpr& h) {
  GeometryBundle b = buildGeometry(p);
  RationalExpr d0h = DA(h, 0), d1h = DA(h, 1);
  return RationalExpr(2) * (b.frame[1][1].apply(d0h) - b.frame[0][1].apply(d1h));
}

}  // namespace hh
