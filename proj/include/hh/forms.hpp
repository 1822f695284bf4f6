#pragma once

#include <array>
#include <vector>

#include "hh/rational_expr.hpp"

namespace hh {

// ---------------------------------------------------------------------------
// First-order differential operators (vector fields) on the four base
// coordinates, stored as coefficients of (d/dw, d/dz, d/dx, d/dy).
// ---------------------------------------------------------------------------
class VectorFieldOperator {
 public:
  VectorFieldOperator() = default;
  explicit VectorFieldOperator(std::array<RationalExpr, 4> coeffs)
      : coeff_(std::move(coeffs)) {}
  static VectorFieldOperator partial(int coordGen);

  const RationalExpr& coeff(int c) const { return coeff_[static_cast<std::size_t>(c)]; }
  RationalExpr& coeff(int c) { return coeff_[static_cast<std::size_t>(c)]; }

  // Apply as a derivation to a scalar.
  RationalExpr apply(const RationalExpr& f) const;

  bool isZero() const;
  VectorFieldOperator operator-() const;
  friend VectorFieldOperator operator+(const VectorFieldOperator&, const VectorFieldOperator&);
  friend VectorFieldOperator operator-(const VectorFieldOperator&, const VectorFieldOperator&);
  VectorFieldOperator scaled(const RationalExpr& c) const;
  friend bool operator==(const VectorFieldOperator&, const VectorFieldOperator&);

 private:
  std::array<RationalExpr, 4> coeff_;
};

// Commutator of first-order operators, again first order:
// [V, W]^c = V(W^c) - W(V^c).
VectorFieldOperator commutator(const VectorFieldOperator& v, const VectorFieldOperator& w);

// ---------------------------------------------------------------------------
// Differential forms of degree 0..4 over the base coordinates (w, z, x, y),
// stored on the canonical ordered-combination basis:
//   degree 1:  dw, dz, dx, dy
//   degree 2:  dw^dz, dw^dx, dw^dy, dz^dx, dz^dy, dx^dy
//   degree 3:  dw^dz^dx, dw^dz^dy, dw^dx^dy, dz^dx^dy
//   degree 4:  dw^dz^dx^dy
// ---------------------------------------------------------------------------
class DifferentialForm {
 public:
  DifferentialForm() : degree_(0), comp_(1) {}
  explicit DifferentialForm(int degree);
  static DifferentialForm scalar(RationalExpr f);
  static DifferentialForm d(int coordGen);  // the basis 1-form for a coordinate

  int degree() const { return degree_; }
  static int dimension(int degree);
  const RationalExpr& comp(int i) const { return comp_[static_cast<std::size_t>(i)]; }
  RationalExpr& comp(int i) { return comp_[static_cast<std::size_t>(i)]; }
  const std::vector<RationalExpr>& components() const { return comp_; }

  // Index of the ordered combination, and the combination at an index.
  static const std::vector<std::vector<int>>& combinations(int degree);

  bool isZero() const;
  DifferentialForm operator-() const;
  friend DifferentialForm operator+(const DifferentialForm&, const DifferentialForm&);
  friend DifferentialForm operator-(const DifferentialForm&, const DifferentialForm&);
  DifferentialForm scaled(const RationalExpr& c) const;
  friend bool operator==(const DifferentialForm&, const DifferentialForm&);

  std::string str() const;

 private:
  int degree_;
  std::vector<RationalExpr> comp_;
};

// Exterior product (graded-commutative, associative).
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// Exterior derivative (degree +1, squares to zero).
DifferentialForm exteriorDerivative(const DifferentialForm& a);

// Interior product (contraction with a vector field, degree -1).
DifferentialForm interiorProduct(const VectorFieldOperator& v, const DifferentialForm& a);

// Lie derivative of a form along a vector field via the homotopy identity
// L_V = i_V d + d i_V.
DifferentialForm lieDerivativeForm(const VectorFieldOperator& v, const DifferentialForm& a);

// ---------------------------------------------------------------------------
// Coefficient-level Lie derivatives for non-form tensors (4x4 component
// matrices over the base coordinates).
// ---------------------------------------------------------------------------
using Mat4 = std::array<std::array<RationalExpr, 4>, 4>;

Mat4 zeroMat4();
bool mat4IsZero(const Mat4& m);

// (L_V g)_{mn} = V^s d_s g_{mn} + g_{sn} d_m V^s + g_{ms} d_n V^s.
Mat4 lieDerivativeMetric(const VectorFieldOperator& v, const Mat4& g);

// (L_V J)^m_n = V^s d_s J^m_n - J^s_n d_s V^m + J^m_s d_n V^s.
Mat4 lieDerivativeEndomorphism(const VectorFieldOperator& v, const Mat4& j);

}  // namespace hh
