#pragma once
// Sparse multivariate polynomials over the Gaussian rationals, in the fixed
// generator set of generators.hpp.  Exact arithmetic, exact derivative, exact
// divisibility test, canonical (lexicographic) ordering of terms.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hh/gaussian_rational.hpp"
#include "hh/generators.hpp"

namespace hh {

struct NumericPoint;

class MultiPoly {
 public:
  using TermMap = std::map<Expo, GaussianRational>;  // ascending lex order

  MultiPoly() = default;

  static MultiPoly constant(GaussianRational c);
  static MultiPoly integer(long v) { return constant(GaussianRational(v)); }
  static MultiPoly generator(int gen, int power = 1);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isOne() const;
  // Requires isConstant().
  GaussianRational constantValue() const;

  int termCount() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  // Leading term in the canonical lexicographic order (largest exponent
  // vector).  Requires nonzero.
  const std::pair<const Expo, GaussianRational>& leading() const { return *terms_.rbegin(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly pow(unsigned n) const;

  // Exact partial derivative with respect to one generator.
  MultiPoly diff(int gen) const;

  // Exact division: returns the quotient iff `divisor` divides this exactly.
  std::optional<MultiPoly> divideExact(const MultiPoly& divisor) const;

  int degreeIn(int gen) const;
  bool dependsOn(int gen) const { return degreeIn(gen) > 0; }

  // Splits into polynomial coefficients of powers of `gen` (the returned
  // polynomials are free of `gen`).
  std::map<int, MultiPoly> coefficientsIn(int gen) const;

  // Makes the leading coefficient 1; returns the former leading coefficient.
  // Requires nonzero.
  GaussianRational makeMonic();

  std::complex<double> eval(const NumericPoint& p) const;

  // Deterministic total order (for canonical sorting of denominator factors).
  int compare(const MultiPoly& o) const;

  // Canonical text: terms in descending lexicographic order, per the
  // expression grammar.  A nonzero polynomial with more than one term needs
  // parentheses when embedded as a grammar factor.
  std::string str() const;

  void addTerm(const Expo& e, const GaussianRational& c);

 private:
  TermMap terms_;
};

// Complex-double assignment to every generator.
struct NumericPoint {
  std::array<std::complex<double>, kGenCount> value{};

  static NumericPoint ones() {
    NumericPoint p;
    for (auto& v : p.value) v = 1.0;
    return p;
  }
  std::complex<double>& operator[](int gen) { return value[static_cast<std::size_t>(gen)]; }
  const std::complex<double>& operator[](int gen) const {
    return value[static_cast<std::size_t>(gen)];
  }
};

}  // namespace hh
