#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hopfcat/rational.hpp"

namespace hopfcat {

/* Linear combination over an indexed basis: sorted, no zero coefficients. */
using LinComb = std::vector<std::pair<std::uint32_t, Rational>>;

class LinAccum {
 public:
  void add(std::uint32_t i, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = m_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) m_.erase(it);
    }
  }
  void add(const LinComb& v, const Rational& scale = Rational(1)) {
    for (const auto& [i, c] : v) add(i, scale * c);
  }
  LinComb take() {
    LinComb out(m_.begin(), m_.end());
    m_.clear();
    return out;
  }

 private:
  std::map<std::uint32_t, Rational> m_;
};

inline LinComb lincomb_scaled(const LinComb& v, const Rational& c) {
  LinComb out;
  if (is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, c * x);
  return out;
}

inline LinComb lincomb_sum(const LinComb& a, const LinComb& b, const Rational& scale_b = Rational(1)) {
  LinAccum acc;
  acc.add(a);
  acc.add(b, scale_b);
  return acc.take();
}

}  // namespace hopfcat
