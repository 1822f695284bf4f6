#include "hh/spinor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hh {

std::size_t SpinorField::flatten(const std::vector<int>& idx) const {
  if (idx.size() != slots_.size()) throw std::logic_error("spinor index rank mismatch");
  std::size_t flat = 0;
  for (int v : idx) {
    if (v != 0 && v != 1) throw std::logic_error("spinor index out of range");
    flat = (flat << 1) | static_cast<std::size_t>(v);
  }
  return flat;
}

std::string SpinorField::signature() const {
  std::string s;
  for (const auto& slot : slots_) {
    s += slot.variance == Variance::Up ? '^' : '_';
    s += slot.kind == IndexKind::Unprimed ? "A" : "A'";
  }
  return s.empty() ? std::string("scalar") : s;
}

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
  if (a.slots_ != b.slots_) throw std::logic_error("spinor addition: signature mismatch");
  SpinorField out = a;
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] += b.comps_[i];
  return out;
}

SpinorField operator-(const SpinorField& a, const SpinorField& b) {
  if (a.slots_ != b.slots_) throw std::logic_error("spinor subtraction: signature mismatch");
  SpinorField out = a;
  for (std::size_t i = 0; i < out.comps_.size(); ++i) out.comps_[i] -= b.comps_[i];
  return out;
}

SpinorField SpinorField::scaled(const RationalExpr& c) const {
  SpinorField out = *this;
  for (auto& v : out.comps_) v *= c;
  return out;
}

bool operator==(const SpinorField& a, const SpinorField& b) {
  if (a.slots_ != b.slots_) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i)
    if (!(a.comps_[i] == b.comps_[i])) return false;
  return true;
}

SpinorField epsilonSpinor(IndexKind kind, Variance variance) {
  SpinorField e(std::vector<SlotSpec>{{kind, variance}, {kind, variance}});
  e.at({0, 1}) = RationalExpr(1);
  e.at({1, 0}) = RationalExpr(-1);
  return e;
}

namespace {

void eachIndex(int rank, const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  for (std::size_t flat = 0; flat < (std::size_t{1} << rank); ++flat) {
    for (int s = 0; s < rank; ++s)
      idx[static_cast<std::size_t>(s)] =
          static_cast<int>((flat >> (rank - 1 - s)) & 1u);
    fn(idx);
  }
}

}  // namespace

SpinorField raiseLowerSlot(const SpinorField& t, int slot, Variance target) {
  if (slot < 0 || slot >= t.rank()) throw std::logic_error("raiseLowerSlot: bad slot");
  if (t.slot(slot).variance == target) return t;
  std::vector<SlotSpec> slots = t.slots();
  slots[static_cast<std::size_t>(slot)].variance = target;
  SpinorField out(slots);
  const bool raising = target == Variance::Up;
  eachIndex(t.rank(), [&](std::vector<int>& idx) {
    std::vector<int> src = idx;
    int A = idx[static_cast<std::size_t>(slot)];
    // Raising:  out^0 = t_1,  out^1 = -t_0.
    // Lowering: out_0 = -t^1, out_1 = t^0.
    src[static_cast<std::size_t>(slot)] = 1 - A;
    RationalExpr v = t.at(src);
    bool negate = raising ? (A == 1) : (A == 0);
    out.at(idx) = negate ? -v : v;
  });
  return out;
}

SpinorField symmetrizeSlots(const SpinorField& t, const std::vector<int>& slots) {
  if (slots.size() < 2) return t;
  const SlotSpec& first = t.slot(slots.front());
  for (int s : slots) {
    if (s < 0 || s >= t.rank()) throw std::logic_error("symmetrizeSlots: bad slot");
    if (!(t.slot(s) == first))
      throw std::logic_error("symmetrizeSlots: slots differ in kind or variance");
  }
  std::vector<int> perm = slots;
  std::sort(perm.begin(), perm.end());
  SpinorField out(t.slots());
  long count = 0;
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  do {
    ++count;
    eachIndex(t.rank(), [&](std::vector<int>& idx) {
      src = idx;
      for (std::size_t k = 0; k < slots.size(); ++k)
        src[static_cast<std::size_t>(slots[k])] =
            idx[static_cast<std::size_t>(perm[k])];
      out.at(idx) += t.at(src);
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  RationalExpr weight = RationalExpr(1) / RationalExpr(count);
  return out.scaled(weight);
}

SpinorField contractSlots(const SpinorField& t, int slotA, int slotB) {
  if (slotA == slotB || slotA < 0 || slotB < 0 || slotA >= t.rank() || slotB >= t.rank())
    throw std::logic_error("contractSlots: bad slot pair");
  const SlotSpec &sa = t.slot(slotA), &sb = t.slot(slotB);
  if (sa.kind != sb.kind) throw std::logic_error("contractSlots: kind mismatch");
  if (sa.variance == sb.variance)
    throw std::logic_error("contractSlots: need one upper and one lower slot");
  int lo = std::min(slotA, slotB), hi = std::max(slotA, slotB);
  std::vector<SlotSpec> slots;
  for (int s = 0; s < t.rank(); ++s)
    if (s != lo && s != hi) slots.push_back(t.slot(s));
  SpinorField out(slots);
  eachIndex(out.rank(), [&](std::vector<int>& idx) {
    std::vector<int> src(static_cast<std::size_t>(t.rank()));
    for (int k = 0; k < 2; ++k) {
      std::size_t j = 0;
      for (int s = 0; s < t.rank(); ++s) {
        if (s == lo || s == hi)
          src[static_cast<std::size_t>(s)] = k;
        else
          src[static_cast<std::size_t>(s)] = idx[j++];
      }
      out.at(idx) += t.at(src);
    }
  });
  return out;
}

SpinorField outerProduct(const SpinorField& a, const SpinorField& b) {
  std::vector<SlotSpec> slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  SpinorField out(slots);
  eachIndex(out.rank(), [&](std::vector<int>& idx) {
    std::vector<int> ia(idx.begin(), idx.begin() + a.rank());
    std::vector<int> ib(idx.begin() + a.rank(), idx.end());
    out.at(idx) = a.at(ia) * b.at(ib);
  });
  return out;
}

RationalExpr CoordinateChart::coordinate(int A, int Aprime) {
  ChartEntry e = entry(A, Aprime);
  RationalExpr v = RationalExpr::generator(e.gen);
  return e.sign > 0 ? v : -v;
}

ChartEntry CoordinateChart::entry(int A, int Aprime) {
  if ((A != 0 && A != 1) || (Aprime != 0 && Aprime != 1))
    throw std::logic_error("chart index out of range");
  static const ChartEntry table[2][2] = {{{GY, +1}, {GW, +1}}, {{GX, -1}, {GZ, +1}}};
  return table[A][Aprime];
}

bool CoordinateChart::spinorPosition(int gen, int& A, int& Aprime, int& sign) {
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap) {
      ChartEntry e = entry(a, ap);
      if (e.gen == gen) {
        A = a;
        Aprime = ap;
        sign = e.sign;
        return true;
      }
    }
  return false;
}

}  // namespace hh
