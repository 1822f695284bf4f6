#pragma once
// Exact Gaussian-rational scalars: q = re + im*i with arbitrary-precision
// rational parts.  The coefficient field of every polynomial in the engine.

#include <gmpxx.h>

#include <complex>
#include <string>

namespace hh {

class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  // Parses an integer or integer/integer literal (base 10).
  static GaussianRational fromRationalLiteral(const std::string& text) {
    mpq_class q(text);
    q.canonicalize();
    return {q, mpq_class(0)};
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isOne() const { return re_ == 1 && im_ == 0; }
  bool isReal() const { return im_ == 0; }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;  // |o|^2, zero iff o == 0
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = i;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const { return GaussianRational(1) / *this; }

  GaussianRational pow(int n) const;

  std::complex<double> toComplex() const { return {re_.get_d(), im_.get_d()}; }

  // Total order (for canonical sorting only; no arithmetic meaning).
  int compare(const GaussianRational& o) const {
    int c = mpq_cmp(re_.get_mpq_t(), o.re_.get_mpq_t());
    if (c != 0) return c;
    return mpq_cmp(im_.get_mpq_t(), o.im_.get_mpq_t());
  }

  // Canonical text per the expression grammar: "3/2", "-1", "i", "-2*i",
  // "(1+i)"; `str()` of a mixed value is always parenthesized so it can be
  // used verbatim as a grammar factor.
  std::string str() const;

 private:
  mpq_class re_, im_;
};

}  // namespace hh
