#include "hh/gaussian_rational.hpp"

namespace hh {

GaussianRational GaussianRational::pow(int n) const {
  if (n == 0) return GaussianRational(1);
  GaussianRational base = n > 0 ? *this : inverse();
  int e = n > 0 ? n : -n;
  GaussianRational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {
std::string rationalStr(const mpq_class& q) { return q.get_str(); }
}  // namespace

std::string GaussianRational::str() const {
  if (im_ == 0) return rationalStr(re_);
  std::string imPart;
  if (im_ == 1) {
    imPart = "i";
  } else if (im_ == -1) {
    imPart = "-i";
  } else {
    imPart = rationalStr(im_) + "*i";
  }
  if (re_ == 0) return imPart;
  std::string out = "(" + rationalStr(re_);
  if (imPart[0] == '-') {
    out += "-" + imPart.substr(1);
  } else {
    out += "+" + imPart;
  }
  out += ")";
  return out;
}

}  // namespace hh
