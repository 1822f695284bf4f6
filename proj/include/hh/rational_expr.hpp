#pragma once
// The universal scalar: an exact rational function over the fixed generator
// set.  Logically a numerator/denominator pair of polynomials; internally the
// denominator is kept as a product of monic base polynomials with positive
// integer exponents, because the geometry pipeline nests high powers of a few
// bases and factored storage keeps common-denominator arithmetic and
// cancellation cheap.  Cancellation is trial division by denominator bases
// only — no multivariate GCD.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/multipoly.hpp"

namespace hh {

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

class RationalExpr {
 public:
  struct DenFactor {
    MultiPoly base;  // monic, non-constant
    int exponent;    // >= 1
  };

  RationalExpr() = default;  // zero
  RationalExpr(long v) : num_(MultiPoly::integer(v)) {}  // NOLINT
  explicit RationalExpr(GaussianRational c) : num_(MultiPoly::constant(std::move(c))) {}
  explicit RationalExpr(MultiPoly num) : num_(std::move(num)) {}
  RationalExpr(MultiPoly num, std::vector<DenFactor> den)
      : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RationalExpr generator(int gen, int power = 1);
  static RationalExpr imaginaryUnit() { return RationalExpr(GaussianRational::i()); }

  bool isZero() const { return num_.isZero(); }
  bool isConstant() const { return den_.empty() && num_.isConstant(); }
  GaussianRational constantValue() const { return num_.constantValue(); }

  const MultiPoly& numerator() const { return num_; }
  const std::vector<DenFactor>& denominatorFactors() const { return den_; }
  MultiPoly denominatorExpanded() const;

  RationalExpr operator-() const;
  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator-=(const RationalExpr& o);
  RationalExpr& operator*=(const RationalExpr& o);
  RationalExpr& operator/=(const RationalExpr& o);
  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
  friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }

  RationalExpr inverse() const;
  RationalExpr pow(int n) const;

  // Exact equality of values (cross-multiplied difference expands to zero).
  bool equals(const RationalExpr& o) const { return (*this - o).isZero(); }

  // Exact quotient-rule derivative with respect to a coordinate or parameter.
  RationalExpr diff(int gen) const;

  std::complex<double> eval(const NumericPoint& p) const;
  // Magnitude of the denominator at p (pole detection without throwing).
  double denominatorMagnitude(const NumericPoint& p) const;

  bool denominatorDependsOn(int gen) const;
  // Degree of the numerator in `gen`; requires denominator free of `gen`.
  int polynomialDegreeIn(int gen) const;
  // Coefficient of gen^power; requires denominator free of `gen`.
  RationalExpr coefficientOf(int gen, int power) const;

  // Substitutes rational expressions for generators (missing generators stay
  // themselves).  Throws if a denominator factor collapses to zero.
  RationalExpr substituted(const std::map<int, RationalExpr>& subs) const;

  // Canonical text per the expression grammar; parse(str()) reproduces the
  // value and the printed form is a fixed point of parse-then-print.
  std::string str() const;

  friend bool operator==(const RationalExpr& a, const RationalExpr& b) { return a.equals(b); }
  friend bool operator!=(const RationalExpr& a, const RationalExpr& b) { return !a.equals(b); }

 private:
  void canonicalize();
  void mergeFactor(const MultiPoly& base, int exponent);

  MultiPoly num_;
  std::vector<DenFactor> den_;
};

}  // namespace hh
