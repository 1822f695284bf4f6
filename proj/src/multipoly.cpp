#include "hh/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hh {

MultiPoly MultiPoly::constant(GaussianRational c) {
  MultiPoly p;
  if (!c.isZero()) p.terms_.emplace(kZeroExpo, std::move(c));
  return p;
}

MultiPoly MultiPoly::generator(int gen, int power) {
  if (gen < 0 || gen >= kGenCount) throw std::invalid_argument("generator index out of range");
  if (power < 0) throw std::invalid_argument("negative power in MultiPoly::generator");
  MultiPoly p;
  if (power == 0) return integer(1);
  Expo e = kZeroExpo;
  e[static_cast<std::size_t>(gen)] = static_cast<std::int16_t>(power);
  p.terms_.emplace(e, GaussianRational(1));
  return p;
}

bool MultiPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExpo);
}

bool MultiPoly::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == kZeroExpo &&
         terms_.begin()->second.isOne();
}

GaussianRational MultiPoly::constantValue() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!isConstant()) throw std::logic_error("constantValue on non-constant polynomial");
  return terms_.begin()->second;
}

void MultiPoly::addTerm(const Expo& e, const GaussianRational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.isZero() || b.isZero()) return out;
  // Convolve against the smaller operand for fewer map passes.
  const MultiPoly& small = a.termCount() <= b.termCount() ? a : b;
  const MultiPoly& large = a.termCount() <= b.termCount() ? b : a;
  for (const auto& [ea, ca] : small.terms_) {
    for (const auto& [eb, cb] : large.terms_) {
      Expo e;
      for (int g = 0; g < kGenCount; ++g) {
        e[static_cast<std::size_t>(g)] = static_cast<std::int16_t>(
            ea[static_cast<std::size_t>(g)] + eb[static_cast<std::size_t>(g)]);
      }
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  MultiPoly out;
  if (c.isZero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly acc = integer(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

MultiPoly MultiPoly::diff(int gen) const {
  if (gen < 0 || gen >= kGenCount) throw std::invalid_argument("diff: bad generator");
  MultiPoly out;
  const auto g = static_cast<std::size_t>(gen);
  for (const auto& [e, c] : terms_) {
    if (e[g] == 0) continue;
    Expo d = e;
    d[g] = static_cast<std::int16_t>(d[g] - 1);
    out.addTerm(d, c * GaussianRational(e[g]));
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divideExact(const MultiPoly& divisor) const {
  if (divisor.isZero()) throw std::invalid_argument("division by zero polynomial");
  MultiPoly remainder = *this;
  MultiPoly quotient;
  const auto& [dExpo, dCoef] = divisor.leading();
  while (!remainder.isZero()) {
    const auto& [rExpo, rCoef] = remainder.leading();
    Expo q;
    for (int g = 0; g < kGenCount; ++g) {
      const auto gs = static_cast<std::size_t>(g);
      if (rExpo[gs] < dExpo[gs]) return std::nullopt;  // leading term not divisible
      q[gs] = static_cast<std::int16_t>(rExpo[gs] - dExpo[gs]);
    }
    MultiPoly qTerm;
    qTerm.terms_.emplace(q, rCoef / dCoef);
    quotient += qTerm;
    remainder -= qTerm * divisor;
  }
  return quotient;
}

int MultiPoly::degreeIn(int gen) const {
  int deg = 0;
  const auto g = static_cast<std::size_t>(gen);
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e[g]));
  return deg;
}

std::map<int, MultiPoly> MultiPoly::coefficientsIn(int gen) const {
  std::map<int, MultiPoly> out;
  const auto g = static_cast<std::size_t>(gen);
  for (const auto& [e, c] : terms_) {
    Expo stripped = e;
    int power = stripped[g];
    stripped[g] = 0;
    out[power].addTerm(stripped, c);
  }
  return out;
}

GaussianRational MultiPoly::makeMonic() {
  if (isZero()) throw std::logic_error("makeMonic on zero polynomial");
  GaussianRational lead = leading().second;
  if (lead.isOne()) return lead;
  GaussianRational inv = lead.inverse();
  for (auto& [e, c] : terms_) c *= inv;
  return lead;
}

std::complex<double> MultiPoly::eval(const NumericPoint& p) const {
  // Power-table evaluation: one pass of repeated multiplication per generator.
  std::array<std::vector<std::complex<double>>, kGenCount> powers;
  for (int g = 0; g < kGenCount; ++g) {
    const auto gs = static_cast<std::size_t>(g);
    int deg = degreeIn(g);
    powers[gs].resize(static_cast<std::size_t>(deg) + 1);
    powers[gs][0] = 1.0;
    for (int k = 1; k <= deg; ++k) powers[gs][static_cast<std::size_t>(k)] =
        powers[gs][static_cast<std::size_t>(k - 1)] * p[g];
  }
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.toComplex();
    for (int g = 0; g < kGenCount; ++g) {
      const auto gs = static_cast<std::size_t>(g);
      if (e[gs] != 0) term *= powers[gs][static_cast<std::size_t>(e[gs])];
    }
    acc += term;
  }
  return acc;
}

int MultiPoly::compare(const MultiPoly& o) const {
  auto it = terms_.rbegin();
  auto jt = o.terms_.rbegin();
  for (; it != terms_.rend() && jt != o.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    int c = it->second.compare(jt->second);
    if (c != 0) return c;
  }
  if (it != terms_.rend()) return 1;
  if (jt != o.terms_.rend()) return -1;
  return 0;
}

namespace {

std::string monomialStr(const Expo& e) {
  std::string out;
  for (int g = 0; g < kGenCount; ++g) {
    const auto gs = static_cast<std::size_t>(g);
    if (e[gs] == 0) continue;
    if (!out.empty()) out += "*";
    out += std::string(kGenNames[gs]);
    if (e[gs] != 1) out += "^" + std::to_string(e[gs]);
  }
  return out;
}

std::string termStr(const Expo& e, const GaussianRational& c) {
  std::string mono = monomialStr(e);
  if (mono.empty()) return c.str();
  if (c.isOne()) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  return c.str() + "*" + mono;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string t = termStr(it->first, it->second);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace hh
