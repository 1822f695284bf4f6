#include "hh/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

namespace {

// Coordinate index 0..3 <-> generator index (w, z, x, y occupy 0..3 already).
int coordOfGen(int gen) {
  if (gen < 0 || gen >= kCoordCount) throw std::logic_error("not a base coordinate");
  return gen;
}

// Sorts indices, returns the permutation sign, or 0 on a repeat.
int sortSign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign;
}

int comboIndex(int degree, const std::vector<int>& sorted) {
  const auto& table = DifferentialForm::combinations(degree);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == sorted) return static_cast<int>(i);
  throw std::logic_error("combination not found");
}

}  // namespace

VectorFieldOperator VectorFieldOperator::partial(int coordGen) {
  VectorFieldOperator v;
  v.coeff_[static_cast<std::size_t>(coordOfGen(coordGen))] = RationalExpr(1);
  return v;
}

RationalExpr VectorFieldOperator::apply(const RationalExpr& f) const {
  RationalExpr out;
  for (int c = 0; c < 4; ++c) {
    if (!coeff_[static_cast<std::size_t>(c)].isZero())
      out += coeff_[static_cast<std::size_t>(c)] * f.diff(c);
  }
  return out;
}

bool VectorFieldOperator::isZero() const {
  for (const auto& c : coeff_)
    if (!c.isZero()) return false;
  return true;
}

VectorFieldOperator VectorFieldOperator::operator-() const {
  VectorFieldOperator out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

VectorFieldOperator operator+(const VectorFieldOperator& a, const VectorFieldOperator& b) {
  VectorFieldOperator out = a;
  for (int c = 0; c < 4; ++c) out.coeff_[static_cast<std::size_t>(c)] += b.coeff(c);
  return out;
}

VectorFieldOperator operator-(const VectorFieldOperator& a, const VectorFieldOperator& b) {
  VectorFieldOperator out = a;
  for (int c = 0; c < 4; ++c) out.coeff_[static_cast<std::size_t>(c)] -= b.coeff(c);
  return out;
}

VectorFieldOperator VectorFieldOperator::scaled(const RationalExpr& c) const {
  VectorFieldOperator out = *this;
  for (auto& v : out.coeff_) v *= c;
  return out;
}

bool operator==(const VectorFieldOperator& a, const VectorFieldOperator& b) {
  for (int c = 0; c < 4; ++c)
    if (!(a.coeff(c) == b.coeff(c))) return false;
  return true;
}

VectorFieldOperator commutator(const VectorFieldOperator& v, const VectorFieldOperator& w) {
  VectorFieldOperator out;
  for (int c = 0; c < 4; ++c) out.coeff(c) = v.apply(w.coeff(c)) - w.apply(v.coeff(c));
  return out;
}

DifferentialForm::DifferentialForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 4) throw std::logic_error("form degree out of range");
  comp_.resize(static_cast<std::size_t>(dimension(degree)));
}

DifferentialForm DifferentialForm::scalar(RationalExpr f) {
  DifferentialForm a(0);
  a.comp_[0] = std::move(f);
  return a;
}

DifferentialForm DifferentialForm::d(int coordGen) {
  DifferentialForm a(1);
  a.comp_[static_cast<std::size_t>(coordOfGen(coordGen))] = RationalExpr(1);
  return a;
}

int DifferentialForm::dimension(int degree) {
  static const int dims[5] = {1, 4, 6, 4, 1};
  return dims[degree];
}

const std::vector<std::vector<int>>& DifferentialForm::combinations(int degree) {
  static const std::vector<std::vector<std::vector<int>>> tables = {
      {{}},
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      {{0, 1, 2, 3}}};
  return tables[static_cast<std::size_t>(degree)];
}

bool DifferentialForm::isZero() const {
  for (const auto& c : comp_)
    if (!c.isZero()) return false;
  return true;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm out = *this;
  for (auto& c : out.comp_) c = -c;
  return out;
}

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_) throw std::logic_error("form degree mismatch in addition");
  DifferentialForm out = a;
  for (std::size_t i = 0; i < out.comp_.size(); ++i) out.comp_[i] += b.comp_[i];
  return out;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_) throw std::logic_error("form degree mismatch in subtraction");
  DifferentialForm out = a;
  for (std::size_t i = 0; i < out.comp_.size(); ++i) out.comp_[i] -= b.comp_[i];
  return out;
}

DifferentialForm DifferentialForm::scaled(const RationalExpr& c) const {
  DifferentialForm out = *this;
  for (auto& v : out.comp_) v *= c;
  return out;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree_ != b.degree_) return false;
  for (std::size_t i = 0; i < a.comp_.size(); ++i)
    if (!(a.comp_[i] == b.comp_[i])) return false;
  return true;
}

std::string DifferentialForm::str() const {
  static const char* names[4] = {"dw", "dz", "dx", "dy"};
  if (degree_ == 0) return comp_[0].str();
  std::string out;
  const auto& table = combinations(degree_);
  for (std::size_t i = 0; i < comp_.size(); ++i) {
    if (comp_[i].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comp_[i].str() + ")*";
    for (std::size_t k = 0; k < table[i].size(); ++k) {
      if (k) out += "^";
      out += names[table[i][k]];
    }
  }
  return out.empty() ? "0" : out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  int degree = a.degree() + b.degree();
  if (degree > 4) throw std::logic_error("wedge degree exceeds base dimension");
  DifferentialForm out(degree);
  const auto& ta = DifferentialForm::combinations(a.degree());
  const auto& tb = DifferentialForm::combinations(b.degree());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (a.comp(static_cast<int>(i)).isZero()) continue;
    for (std::size_t j = 0; j < tb.size(); ++j) {
      if (b.comp(static_cast<int>(j)).isZero()) continue;
      std::vector<int> merged = ta[i];
      merged.insert(merged.end(), tb[j].begin(), tb[j].end());
      int sign = sortSign(merged);
      if (sign == 0) continue;
      RationalExpr term = a.comp(static_cast<int>(i)) * b.comp(static_cast<int>(j));
      if (sign < 0) term = -term;
      out.comp(comboIndex(degree, merged)) += term;
    }
  }
  return out;
}

DifferentialForm exteriorDerivative(const DifferentialForm& a) {
  if (a.degree() == 4)
    throw std::logic_error("exterior derivative of a top form exceeds base dimension");
  int degree = a.degree() + 1;
  DifferentialForm out(degree);
  const auto& ta = DifferentialForm::combinations(a.degree());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const RationalExpr& f = a.comp(static_cast<int>(i));
    if (f.isZero()) continue;
    for (int mu = 0; mu < 4; ++mu) {
      RationalExpr df = f.diff(mu);
      if (df.isZero()) continue;
      std::vector<int> merged;
      merged.push_back(mu);
      merged.insert(merged.end(), ta[i].begin(), ta[i].end());
      int sign = sortSign(merged);
      if (sign == 0) continue;
      if (sign < 0) df = -df;
      out.comp(comboIndex(degree, merged)) += df;
    }
  }
  return out;
}

DifferentialForm interiorProduct(const VectorFieldOperator& v, const DifferentialForm& a) {
  if (a.degree() == 0) return DifferentialForm();  // zero scalar
  int degree = a.degree() - 1;
  DifferentialForm out(degree);
  const auto& ta = DifferentialForm::combinations(a.degree());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const RationalExpr& f = a.comp(static_cast<int>(i));
    if (f.isZero()) continue;
    for (std::size_t p = 0; p < ta[i].size(); ++p) {
      const RationalExpr& vc = v.coeff(ta[i][p]);
      if (vc.isZero()) continue;
      std::vector<int> rest;
      for (std::size_t q = 0; q < ta[i].size(); ++q)
        if (q != p) rest.push_back(ta[i][q]);
      RationalExpr term = vc * f;
      if (p % 2 == 1) term = -term;
      out.comp(comboIndex(degree, rest)) += term;
    }
  }
  return out;
}

DifferentialForm lieDerivativeForm(const VectorFieldOperator& v, const DifferentialForm& a) {
  return interiorProduct(v, exteriorDerivative(a)) +
         exteriorDerivative(interiorProduct(v, a));
}

Mat4 zeroMat4() { return Mat4{}; }

bool mat4IsZero(const Mat4& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.isZero()) return false;
  return true;
}

Mat4 lieDerivativeMetric(const VectorFieldOperator& v, const Mat4& g) {
  Mat4 out = zeroMat4();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      RationalExpr acc = v.apply(g[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
      for (int s = 0; s < 4; ++s) {
        acc += g[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)] *
               v.coeff(s).diff(m);
        acc += g[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] *
               v.coeff(s).diff(n);
      }
      out[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = acc;
    }
  return out;
}

Mat4 lieDerivativeEndomorphism(const VectorFieldOperator& v, const Mat4& j) {
  Mat4 out = zeroMat4();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      RationalExpr acc = v.apply(j[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
      for (int s = 0; s < 4; ++s) {
        acc -= j[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)] *
               v.coeff(m).diff(s);
        acc += j[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] *
               v.coeff(s).diff(n);
      }
      out[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = acc;
    }
  return out;
}

}  // namespace hh
