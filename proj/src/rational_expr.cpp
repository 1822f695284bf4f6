#include "hh/rational_expr.hpp"

#include <algorithm>

namespace hh {

RationalExpr RationalExpr::generator(int gen, int power) {
  if (power >= 0) return RationalExpr(MultiPoly::generator(gen, power));
  RationalExpr e(MultiPoly::integer(1));
  e.den_.push_back({MultiPoly::generator(gen, 1), -power});
  return e;
}

MultiPoly RationalExpr::denominatorExpanded() const {
  MultiPoly d = MultiPoly::integer(1);
  for (const auto& f : den_) d = d * f.base.pow(static_cast<unsigned>(f.exponent));
  return d;
}

void RationalExpr::mergeFactor(const MultiPoly& base, int exponent) {
  if (exponent == 0) return;
  for (auto& f : den_) {
    if (f.base == base) {
      f.exponent += exponent;
      return;
    }
  }
  den_.push_back({base, exponent});
}

void RationalExpr::canonicalize() {
  if (num_.isZero()) {
    den_.clear();
    return;
  }
  // Normalize factor bases: monic, non-constant, merged.
  std::vector<DenFactor> raw;
  raw.swap(den_);
  for (auto& f : raw) {
    if (f.exponent == 0) continue;
    if (f.base.isZero()) throw std::invalid_argument("zero denominator factor");
    if (f.base.isConstant()) {
      num_ = num_.scaled(f.base.constantValue().pow(-f.exponent));
      continue;
    }
    MultiPoly base = f.base;
    GaussianRational lead = base.makeMonic();
    if (!lead.isOne()) num_ = num_.scaled(lead.pow(-f.exponent));
    mergeFactor(base, f.exponent);
  }
  // Cancel: trial-divide the numerator by each base as often as possible.
  for (auto& f : den_) {
    while (f.exponent > 0) {
      auto q = num_.divideExact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.exponent;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(),
                            [](const DenFactor& f) { return f.exponent <= 0; }),
             den_.end());
  std::sort(den_.begin(), den_.end(), [](const DenFactor& x, const DenFactor& y) {
    return x.base.compare(y.base) < 0;
  });
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  if (o.isZero()) return *this;
  if (isZero()) {
    *this = o;
    return *this;
  }
  // Least common denominator over the union of factor bases (max exponents).
  struct Entry {
    const MultiPoly* base;
    int lcm, mine, theirs;
  };
  std::vector<Entry> entries;
  for (const auto& f : den_) entries.push_back({&f.base, f.exponent, f.exponent, 0});
  for (const auto& f : o.den_) {
    bool found = false;
    for (auto& e : entries) {
      if (*e.base == f.base) {
        e.theirs = f.exponent;
        e.lcm = std::max(e.lcm, f.exponent);
        found = true;
        break;
      }
    }
    if (!found) entries.push_back({&f.base, f.exponent, 0, f.exponent});
  }
  MultiPoly left = num_;
  MultiPoly right = o.num_;
  std::vector<DenFactor> newDen;
  for (const auto& e : entries) {
    if (e.lcm > e.mine) left = left * e.base->pow(static_cast<unsigned>(e.lcm - e.mine));
    if (e.lcm > e.theirs) right = right * e.base->pow(static_cast<unsigned>(e.lcm - e.theirs));
    newDen.push_back({*e.base, e.lcm});
  }
  num_ = left + right;
  den_ = std::move(newDen);
  canonicalize();
  return *this;
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) { return *this += -o; }

RationalExpr& RationalExpr::operator*=(const RationalExpr& o) {
  num_ = num_ * o.num_;
  for (const auto& f : o.den_) den_.push_back(f);
  canonicalize();
  return *this;
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& o) {
  if (o.isZero()) throw std::invalid_argument("division by identically-zero expression");
  // Multiply by o's denominator, divide by o's numerator (kept as one base).
  for (const auto& f : o.den_) num_ = num_ * f.base.pow(static_cast<unsigned>(f.exponent));
  den_.push_back({o.num_, 1});
  canonicalize();
  return *this;
}

RationalExpr RationalExpr::inverse() const {
  if (isZero()) throw std::invalid_argument("division by identically-zero expression");
  RationalExpr out(denominatorExpanded());
  out.den_.push_back({num_, 1});
  out.canonicalize();
  return out;
}

RationalExpr RationalExpr::pow(int n) const {
  if (n == 0) {
    if (isZero()) throw std::invalid_argument("0^0 of the zero expression");
    return RationalExpr(1);
  }
  const RationalExpr base = n > 0 ? *this : inverse();
  unsigned e = static_cast<unsigned>(n > 0 ? n : -n);
  RationalExpr out(base.num_.pow(e));
  for (const auto& f : base.den_) out.den_.push_back({f.base, f.exponent * static_cast<int>(e)});
  out.canonicalize();
  return out;
}

RationalExpr RationalExpr::diff(int gen) const {
  // Quotient rule on the factored denominator:
  //   d(n / prod p_i^{e_i}) = [n' prod p_i - n sum_i e_i p_i' prod_{j!=i} p_j]
  //                           / prod p_i^{e_i+1}
  MultiPoly top = num_.diff(gen);
  for (const auto& f : den_) top = top * f.base;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    MultiPoly piece = num_.scaled(GaussianRational(-den_[i].exponent)) * den_[i].base.diff(gen);
    for (std::size_t j = 0; j < den_.size(); ++j) {
      if (j != i) piece = piece * den_[j].base;
    }
    top += piece;
  }
  RationalExpr out(std::move(top));
  for (const auto& f : den_) out.den_.push_back({f.base, f.exponent + 1});
  out.canonicalize();
  return out;
}

std::complex<double> RationalExpr::eval(const NumericPoint& p) const {
  std::complex<double> d = 1.0;
  for (const auto& f : den_) {
    std::complex<double> b = f.base.eval(p);
    for (int k = 0; k < f.exponent; ++k) d *= b;
  }
  if (std::abs(d) < 1e-12) throw PoleError("evaluation point within 1e-12 of a denominator zero");
  return num_.eval(p) / d;
}

double RationalExpr::denominatorMagnitude(const NumericPoint& p) const {
  std::complex<double> d = 1.0;
  for (const auto& f : den_) {
    std::complex<double> b = f.base.eval(p);
    for (int k = 0; k < f.exponent; ++k) d *= b;
  }
  return std::abs(d);
}

bool RationalExpr::denominatorDependsOn(int gen) const {
  for (const auto& f : den_) {
    if (f.base.dependsOn(gen)) return true;
  }
  return false;
}

int RationalExpr::polynomialDegreeIn(int gen) const {
  if (denominatorDependsOn(gen))
    throw std::logic_error("polynomialDegreeIn: denominator depends on generator");
  return num_.degreeIn(gen);
}

RationalExpr RationalExpr::coefficientOf(int gen, int power) const {
  if (denominatorDependsOn(gen))
    throw std::logic_error("coefficientOf: denominator depends on generator");
  auto split = num_.coefficientsIn(gen);
  auto it = split.find(power);
  if (it == split.end()) return RationalExpr();
  RationalExpr out(it->second);
  out.den_ = den_;
  out.canonicalize();
  return out;
}

RationalExpr RationalExpr::substituted(const std::map<int, RationalExpr>& subs) const {
  // Lazily cached powers of each substituted generator.
  std::array<std::vector<RationalExpr>, kGenCount> powers;
  auto powerOf = [&](int gen, int e) -> RationalExpr {
    auto& cache = powers[static_cast<std::size_t>(gen)];
    if (cache.empty()) {
      auto it = subs.find(gen);
      cache.push_back(it == subs.end() ? RationalExpr::generator(gen) : it->second);
    }
    if (e == 1) return cache[0];
    while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * cache[0]);
    return cache[static_cast<std::size_t>(e - 1)];
  };
  auto substPoly = [&](const MultiPoly& poly) {
    RationalExpr acc;
    for (const auto& [expo, coef] : poly.terms()) {
      RationalExpr term{coef};
      for (int g = 0; g < kGenCount; ++g) {
        int e = expo[static_cast<std::size_t>(g)];
        if (e > 0) term *= powerOf(g, e);
      }
      acc += term;
    }
    return acc;
  };
  RationalExpr out = substPoly(num_);
  for (const auto& f : den_) {
    RationalExpr b = substPoly(f.base);
    if (b.isZero())
      throw std::invalid_argument("substitution collapses a denominator factor to zero");
    out /= b.pow(f.exponent);
  }
  return out;
}

std::string RationalExpr::str() const {
  std::string numStr = num_.str();
  if (den_.empty()) return numStr;
  if (num_.termCount() > 1) numStr = "(" + numStr + ")";
  MultiPoly den = denominatorExpanded();
  std::string denStr = den.str();
  // Parenthesize unless the denominator is a single power of one generator.
  bool simple = false;
  if (den.termCount() == 1) {
    const auto& e = den.leading().first;
    int used = 0;
    for (int g = 0; g < kGenCount; ++g) used += e[static_cast<std::size_t>(g)] != 0 ? 1 : 0;
    simple = used == 1 && den.leading().second.isOne();
  }
  if (!simple) denStr = "(" + denStr + ")";
  return numStr + "/" + denStr;
}

}  // namespace hh
