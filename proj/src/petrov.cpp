#include "hh/petrov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hh {

namespace {

using Cplx = std::complex<double>;

// A quartic all of whose coefficients fall below this magnitude is treated as
// identically zero at the sample point.
constexpr double kZeroQuarticTol = 1e-12;
// Minimum relative size of the leading coefficient for root finding.
constexpr double kLeadingTol = 1e-8;
// Numeric roots of an exact multiplicity-m root scatter like eps^(1/m); for
// doubles and m = 4 that can reach a few times 1e-3, so candidate clusters are
// gathered at this coarser scale and then confirmed by the centroid derivative
// test (or split back apart at the caller's tolerance if the test fails).
constexpr double kScatterTol = 1e-2;

// Coefficients of sum_i a[i] ((al z + be)^i (ga z + de)^(4-i)); a projective
// change of frame that relocates any root sitting at infinity.
std::array<Cplx, 5> mobiusTransform(const std::array<Cplx, 5>& a, Cplx al, Cplx be,
                                    Cplx ga, Cplx de) {
  std::array<Cplx, 5> out{};
  for (int i = 0; i <= 4; ++i) {
    std::array<Cplx, 5> poly{};
    poly[0] = 1.0;
    int deg = 0;
    auto mulLinear = [&](Cplx p, Cplx q) {
      std::array<Cplx, 5> next{};
      for (int d = 0; d <= deg; ++d) {
        next[static_cast<std::size_t>(d)] += poly[static_cast<std::size_t>(d)] * q;
        next[static_cast<std::size_t>(d + 1)] += poly[static_cast<std::size_t>(d)] * p;
      }
      poly = next;
      ++deg;
    };
    for (int r = 0; r < i; ++r) mulLinear(al, be);
    for (int r = 0; r < 4 - i; ++r) mulLinear(ga, de);
    for (int d = 0; d <= 4; ++d)
      out[static_cast<std::size_t>(d)] +=
          a[static_cast<std::size_t>(i)] * poly[static_cast<std::size_t>(d)];
  }
  return out;
}

// Simultaneous-iteration root finder for a monic quartic
// z^4 + m[3] z^3 + m[2] z^2 + m[1] z + m[0].
std::array<Cplx, 4> quarticRoots(const std::array<Cplx, 4>& m) {
  auto eval = [&](Cplx z) {
    Cplx v = 1.0;
    for (int i = 3; i >= 0; --i) v = v * z + m[static_cast<std::size_t>(i)];
    return v;
  };
  std::array<Cplx, 4> r;
  const Cplx seed(0.4, 0.9);
  Cplx acc = 1.0;
  for (auto& root : r) {
    acc *= seed;
    root = acc;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double maxStep = 0.0, maxRoot = 0.0;
    for (int i = 0; i < 4; ++i) {
      Cplx denom = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)];
      if (std::abs(denom) == 0.0) denom = Cplx(1e-30, 0.0);
      Cplx step = eval(r[static_cast<std::size_t>(i)]) / denom;
      r[static_cast<std::size_t>(i)] -= step;
      maxStep = std::max(maxStep, std::abs(step));
      maxRoot = std::max(maxRoot, std::abs(r[static_cast<std::size_t>(i)]));
    }
    if (maxStep < 1e-15 * (1.0 + maxRoot)) break;
  }
  return r;
}

}  // namespace

std::string petrovLabelForPattern(const std::vector<int>& pattern) {
  if (pattern.empty()) return "O";
  if (pattern == std::vector<int>{1, 1, 1, 1}) return "I";
  if (pattern == std::vector<int>{2, 1, 1}) return "II";
  if (pattern == std::vector<int>{2, 2}) return "D";
  if (pattern == std::vector<int>{3, 1}) return "III";
  if (pattern == std::vector<int>{4}) return "N";
  throw std::invalid_argument("not a quartic multiplicity pattern");
}

std::vector<int> quarticRootPattern(const std::array<Cplx, 5>& coeffs, double clusterTol) {
  double maxMag = 0.0;
  for (const auto& c : coeffs) maxMag = std::max(maxMag, std::abs(c));
  if (maxMag < kZeroQuarticTol) return {};

  // Candidate frames; at most four directions can be roots, so some frame in
  // this list always separates the leading coefficient from zero.
  static const std::array<std::array<Cplx, 4>, 6> kFrames = {{
      {Cplx(1), Cplx(0), Cplx(0), Cplx(1)},
      {Cplx(0), Cplx(1), Cplx(1), Cplx(0)},
      {Cplx(1), Cplx(1), Cplx(-1), Cplx(1)},
      {Cplx(1), Cplx(-2), Cplx(2), Cplx(1)},
      {Cplx(3), Cplx(1), Cplx(1), Cplx(2)},
      {Cplx(1, 1), Cplx(0), Cplx(0.5), Cplx(1)},
  }};

  for (const auto& f : kFrames) {
    std::array<Cplx, 5> t = mobiusTransform(coeffs, f[0], f[1], f[2], f[3]);
    double tMax = 0.0;
    for (const auto& c : t) tMax = std::max(tMax, std::abs(c));
    if (std::abs(t[4]) < kLeadingTol * tMax) continue;

    std::array<Cplx, 4> monic;
    for (int i = 0; i < 4; ++i)
      monic[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)] / t[4];
    std::array<Cplx, 4> roots = quarticRoots(monic);

    double scale = 1.0;
    for (const auto& r : roots) scale = std::max(scale, std::abs(r));

    // Single-linkage components at a given relative tolerance.
    auto components = [&](const std::vector<int>& members, double tol) {
      std::map<int, int> comp;
      for (int i : members) comp[i] = i;
      for (int i : members)
        for (int j : members)
          if (i < j && std::abs(roots[static_cast<std::size_t>(i)] -
                                roots[static_cast<std::size_t>(j)]) <= tol * scale) {
            int a = comp[i], b = comp[j];
            for (auto& [key, c] : comp)
              if (c == b) c = a;
          }
      std::map<int, std::vector<int>> groups;
      for (const auto& [i, c] : comp) groups[c].push_back(i);
      std::vector<std::vector<int>> out;
      for (auto& [c, g] : groups) out.push_back(std::move(g));
      return out;
    };

    // Derivative coefficient arrays of the monic quartic, lowest degree first.
    const std::array<std::vector<Cplx>, 5> derivs = {{
        {monic[0], monic[1], monic[2], monic[3], Cplx(1.0)},
        {monic[1], 2.0 * monic[2], 3.0 * monic[3], Cplx(4.0)},
        {2.0 * monic[2], 6.0 * monic[3], Cplx(12.0)},
        {6.0 * monic[3], Cplx(24.0)},
        {Cplx(24.0)},
    }};
    auto horner = [](const std::vector<Cplx>& c, Cplx z) {
      Cplx v = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
      return v;
    };
    auto magnitudeScale = [](const std::vector<Cplx>& c, Cplx z) {
      double r = std::max(1.0, std::abs(z)), acc = 0.0, p = 1.0;
      for (const auto& coef : c) {
        acc += std::abs(coef) * p;
        p *= r;
      }
      return std::max(acc, 1e-300);
    };

    std::vector<int> pattern;
    std::vector<int> all{0, 1, 2, 3};
    for (const auto& cluster : components(all, kScatterTol)) {
      const int m = static_cast<int>(cluster.size());
      if (m == 1) {
        pattern.push_back(1);
        continue;
      }
      Cplx centroid = 0.0;
      for (int i : cluster) centroid += roots[static_cast<std::size_t>(i)];
      centroid /= static_cast<double>(m);
      // Root finding inside the rounding-noise ball of a multiple root leaves
      // the centroid too inaccurate to judge derivative magnitudes directly.
      // A multiplicity-m root is a simple (hence well-conditioned) root of the
      // (m-1)-th derivative, so polish the candidate there first.
      Cplx c = centroid;
      bool usable = true;
      for (int it = 0; it < 60; ++it) {
        const auto& f = derivs[static_cast<std::size_t>(m - 1)];
        const auto& fp = derivs[static_cast<std::size_t>(m)];
        Cplx slope = horner(fp, c);
        if (std::abs(slope) < 1e-14 * magnitudeScale(fp, c)) {
          usable = false;
          break;
        }
        Cplx step = horner(f, c) / slope;
        c -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(c))) break;
      }
      // The caller's tolerance now decides: a genuine multiplicity-m root
      // annihilates every lower derivative at the polished point.
      bool confirmed = usable && std::abs(c - centroid) < 10.0 * kScatterTol * scale;
      for (int j = 0; confirmed && j < m; ++j) {
        const auto& d = derivs[static_cast<std::size_t>(j)];
        if (std::abs(horner(d, c)) > clusterTol * magnitudeScale(d, c)) confirmed = false;
      }
      if (confirmed) {
        pattern.push_back(m);
      } else {
        // Not a genuine multiple root at this size: fall back to the caller's
        // tolerance inside the cluster.
        for (const auto& sub : components(cluster, clusterTol))
          pattern.push_back(static_cast<int>(sub.size()));
      }
    }
    std::sort(pattern.begin(), pattern.end(), std::greater<int>());
    return pattern;
  }
  throw std::runtime_error("quartic is numerically unusable in every frame");
}

PetrovVerdict petrovClassify(const PotentialPair& p, const std::vector<NumericPoint>& points,
                             double clusterTol) {
  if (points.size() < 3)
    throw std::invalid_argument("classification needs at least 3 sample points");
  const std::array<RationalExpr, 5> weyl = weylDirectComponents(p);
  const double kChoose[5] = {1.0, 4.0, 6.0, 4.0, 1.0};

  PetrovVerdict verdict;
  for (const auto& pt : points) {
    std::array<Cplx, 5> quartic;
    try {
      for (int j = 0; j <= 4; ++j)
        quartic[static_cast<std::size_t>(j)] =
            kChoose[j] * weyl[static_cast<std::size_t>(j)].eval(pt);
    } catch (const PoleError&) {
      continue;
    }
    std::vector<int> pattern;
    try {
      pattern = quarticRootPattern(quartic, clusterTol);
    } catch (const std::runtime_error&) {
      continue;  // unusable point; classify from the remaining samples
    }
    verdict.pointsUsed.push_back(pt);
    verdict.patterns.push_back(std::move(pattern));
  }
  if (verdict.pointsUsed.empty())
    throw std::runtime_error("every sample point hit a curvature pole");

  std::map<std::vector<int>, int> counts;
  for (const auto& pat : verdict.patterns) ++counts[pat];
  const auto modal =
      std::max_element(counts.begin(), counts.end(),
                       [](const auto& a, const auto& b) { return a.second < b.second; });
  verdict.label = petrovLabelForPattern(modal->first);
  verdict.consistent = counts.size() == 1;
  return verdict;
}

}  // namespace hh
