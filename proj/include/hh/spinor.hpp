#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hh/rational_expr.hpp"

namespace hh {

// Two-component spinor indices come in two kinds (unprimed / primed), each
// either upper or lower.  A tensor field is stored densely: rank n means 2^n
// expression components, slot 0 the most significant bit.
enum class IndexKind { Unprimed, Primed };
enum class Variance { Up, Down };

struct SlotSpec {
  IndexKind kind;
  Variance variance;
  friend bool operator==(const SlotSpec&, const SlotSpec&) = default;
};

class SpinorField {
 public:
  SpinorField() : comps_(1) {}  // rank-0 scalar, value zero
  explicit SpinorField(std::vector<SlotSpec> slots)
      : slots_(std::move(slots)), comps_(std::size_t{1} << slots_.size()) {}

  static SpinorField scalar(RationalExpr value) {
    SpinorField s;
    s.comps_[0] = std::move(value);
    return s;
  }

  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<SlotSpec>& slots() const { return slots_; }
  const SlotSpec& slot(int i) const { return slots_[static_cast<std::size_t>(i)]; }

  const RationalExpr& at(const std::vector<int>& idx) const { return comps_[flatten(idx)]; }
  RationalExpr& at(const std::vector<int>& idx) { return comps_[flatten(idx)]; }
  const RationalExpr& at(std::initializer_list<int> idx) const {
    return comps_[flatten(std::vector<int>(idx))];
  }
  RationalExpr& at(std::initializer_list<int> idx) {
    return comps_[flatten(std::vector<int>(idx))];
  }
  const std::vector<RationalExpr>& components() const { return comps_; }
  std::vector<RationalExpr>& components() { return comps_; }

  bool isZero() const {
    for (const auto& c : comps_)
      if (!c.isZero()) return false;
    return true;
  }

  // "^A_B'" style signature used in reports and error messages.
  std::string signature() const;

  friend SpinorField operator+(const SpinorField& a, const SpinorField& b);
  friend SpinorField operator-(const SpinorField& a, const SpinorField& b);
  SpinorField scaled(const RationalExpr& c) const;
  friend bool operator==(const SpinorField& a, const SpinorField& b);

 private:
  std::size_t flatten(const std::vector<int>& idx) const;
  std::vector<SlotSpec> slots_;
  std::vector<RationalExpr> comps_;
};

// The antisymmetric rank-2 invariant with component [0][1] = +1, [1][0] = -1
// for every kind/variance combination.
SpinorField epsilonSpinor(IndexKind kind, Variance variance);

// Moves one slot between upper and lower position using the invariant:
// raising contracts on the second epsilon index from the north-west
// (out^A = eps^{AB} t_B), lowering on the first from the south-east
// (out_A = t^B eps_{BA}).  Round trips are exact identities.
SpinorField raiseLowerSlot(const SpinorField& t, int slot, Variance target);

// Symmetrizes over the given slots (which must share kind and variance),
// averaging over all their permutations with exact rational weights.
SpinorField symmetrizeSlots(const SpinorField& t, const std::vector<int>& slots);

// Traces one upper slot against one lower slot of the same kind.
SpinorField contractSlots(const SpinorField& t, int slotA, int slotB);

// Tensor (outer) product; slots of `b` follow those of `a`.
SpinorField outerProduct(const SpinorField& a, const SpinorField& b);

// ---------------------------------------------------------------------------
// Coordinate chart: the four base coordinates arranged in a 2x2 spinor array
// x^{AA'}, with   x^{00'} = y,  x^{01'} = w,  x^{10'} = -x,  x^{11'} = z.
// ---------------------------------------------------------------------------
struct ChartEntry {
  int gen;    // which generator
  int sign;   // +1 or -1
};

class CoordinateChart {
 public:
  // Coordinate function x^{AA'} as an expression.
  static RationalExpr coordinate(int A, int Aprime);
  static ChartEntry entry(int A, int Aprime);
  // Inverse lookup: which (A, A', sign) a base generator occupies.
  static bool spinorPosition(int gen, int& A, int& Aprime, int& sign);
};

}  // namespace hh
