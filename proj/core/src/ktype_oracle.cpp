#include "glhecke/ktype_oracle.hpp"

#include <cstdlib>
#include <stdexcept>

namespace glhecke {

O2Label O2Label::v(int j) {
  if (j < 1) throw std::invalid_argument("V(j) needs j >= 1; V(0) = Triv + Sgn");
  return O2Label(j);
}

std::vector<O2Label> O2Label::v_expanded(int j) {
  if (j == 0) return {triv(), sgn()};
  return {v(j)};
}

std::string O2Label::str() const {
  if (is_triv()) return "1";
  if (is_sgn()) return "sgn";
  return "V(" + std::to_string(code_) + ")";
}

std::vector<O2Label> tensor_o2(const O2Label& a, const O2Label& b) {
  if (a.is_triv()) return {b};
  if (b.is_triv()) return {a};
  if (a.is_sgn() && b.is_sgn()) return {O2Label::triv()};
  if (a.is_sgn()) return {b};
  if (b.is_sgn()) return {a};
  auto out = O2Label::v_expanded(std::abs(a.j() - b.j()));
  out.push_back(O2Label::v(a.j() + b.j()));
  return out;
}

std::int64_t ProductDecomposition::total_dimension() const {
  std::int64_t total = 0;
  for (const auto& [tuple, mult] : multiplicity) {
    std::int64_t d = 1;
    for (const auto& label : tuple) d *= label.dim();
    total += d * mult;
  }
  return total;
}

std::int64_t ProductDecomposition::at(const SlotTuple& t) const {
  auto it = multiplicity.find(t);
  return it == multiplicity.end() ? 0 : it->second;
}

ProductDecomposition tensor_power_standard(int s, int m, int k) {
  if (s < 0 || m < 0 || k < 0) throw std::invalid_argument("negative slot count or power");
  ProductDecomposition out;
  out.s = s;
  out.m = m;
  out.multiplicity[SlotTuple(s + m, O2Label::triv())] = 1;
  for (int step = 0; step < k; ++step) {
    std::map<SlotTuple, std::int64_t> next;
    for (const auto& [tuple, mult] : out.multiplicity) {
      // V(1) on one O(2) slot ...
      for (int slot = 0; slot < s; ++slot) {
        for (const auto& label : tensor_o2(tuple[slot], O2Label::v(1))) {
          auto t = tuple;
          t[slot] = label;
          next[t] += mult;
        }
      }
      // ... or sgn on one O(1) slot.
      for (int slot = s; slot < s + m; ++slot) {
        auto t = tuple;
        t[slot] = tensor_o2(tuple[slot], O2Label::sgn()).front();
        next[t] += mult;
      }
    }
    out.multiplicity = std::move(next);
  }
  return out;
}

SlotTuple lowest_type_tuple(const RealParam& param) {
  SlotTuple o2;
  SlotTuple o1;
  for (const auto& f : param.factors()) {
    if (f.is_gl2()) {
      o2.push_back(O2Label::v(f.l()));
    } else {
      o1.push_back(f.eps() == Eps::Trivial ? O2Label::sgn() : O2Label::triv());
    }
  }
  o2.insert(o2.end(), o1.begin(), o1.end());
  return o2;
}

std::int64_t hom_multiplicity(const RealParam& param, int k) {
  if (param.level() < k) {
    throw std::domain_error("oracle only valid for level >= k (level " +
                            std::to_string(param.level()) + ", k " + std::to_string(k) + ")");
  }
  const int s = param.gl2_count();
  const int m = param.rank() - 2 * s;
  return tensor_power_standard(s, m, k).at(lowest_type_tuple(param));
}

}  // namespace glhecke
