#include "hopfcat/catalog.hpp"

#include <array>
#include <algorithm>

namespace hopfcat::catalog {

namespace {

std::vector<std::vector<std::uint32_t>> table_from_op(
    std::uint32_t n, auto&& op) {
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = op(i, j);
  return t;
}

using Perm = std::array<std::uint32_t, 4>;

Perm compose(const Perm& f, const Perm& g, std::uint32_t n) {
  Perm out{};
  for (std::uint32_t i = 0; i < n; ++i) out[i] = f[g[i]];
  return out;
}

/* Group generated by r (rotation) and s (reflection) with elements listed as
   e, r, r^2, ..., s, rs, r^2 s, ... */
FiniteGroup rotation_reflection_group(std::uint32_t order_r, const Perm& r, const Perm& s,
                                      std::uint32_t points,
                                      const std::string& rname, const std::string& sname) {
  std::vector<Perm> elems;
  std::vector<std::string> labels;
  Perm id{};
  for (std::uint32_t i = 0; i < points; ++i) id[i] = i;
  Perm cur = id;
  for (std::uint32_t k = 0; k < order_r; ++k) {
    elems.push_back(cur);
    labels.push_back(k == 0 ? "e" : (k == 1 ? rname : rname + std::to_string(k)));
    cur = compose(r, cur, points);
  }
  for (std::uint32_t k = 0; k < order_r; ++k) {
    Perm rk = elems[k];
    elems.push_back(compose(rk, s, points));
    labels.push_back(k == 0 ? sname : (k == 1 ? rname + sname : rname + std::to_string(k) + sname));
  }
  auto index_of = [&](const Perm& p) -> std::uint32_t {
    auto it = std::find(elems.begin(), elems.end(), p);
    return static_cast<std::uint32_t>(it - elems.begin());
  };
  auto table = table_from_op(static_cast<std::uint32_t>(elems.size()), [&](auto i, auto j) {
    return index_of(compose(elems[i], elems[j], points));
  });
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

}  // namespace

FiniteGroup cyclic(std::uint32_t n) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  return FiniteGroup::from_table(std::move(labels),
                                 table_from_op(n, [n](auto i, auto j) { return (i + j) % n; }));
}

FiniteGroup symmetric3() {
  Perm r{1, 2, 0, 3};  // 3-cycle
  Perm s{1, 0, 2, 3};  // transposition
  return rotation_reflection_group(3, r, s, 3, "r", "s");
}

FiniteGroup dihedral4() {
  Perm r{1, 2, 3, 0};  // 4-cycle
  Perm s{0, 3, 2, 1};  // reflection fixing corner 0
  return rotation_reflection_group(4, r, s, 4, "r", "s");
}

FiniteGroup quaternion8() {
  /* elements (sign, axis) with axis 0=1, 1=i, 2=j, 3=k */
  std::vector<std::string> labels = {"e", "ne", "i", "ni", "j", "nj", "k", "nk"};
  auto enc = [](int sign, int axis) { return static_cast<std::uint32_t>(2 * axis + (sign < 0)); };
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    int sa = a % 2 ? -1 : 1, xa = static_cast<int>(a / 2);
    int sb = b % 2 ? -1 : 1, xb = static_cast<int>(b / 2);
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return enc(sa * sb * sign[xa][xb], axis[xa][xb]);
  };
  return FiniteGroup::from_table(std::move(labels), table_from_op(8, mul));
}

LieAlgebra abelian(std::uint32_t n) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return LieAlgebra::make(std::move(labels), {});
}

LieAlgebra aff2() {
  return LieAlgebra::make({"x", "y"}, {{{0, 1}, {{1, Rational(1)}}}});
}

LieAlgebra heis3() {
  return LieAlgebra::make({"x", "y", "z"}, {{{0, 1}, {{2, Rational(1)}}}});
}

LieAlgebra sl2() {
  return LieAlgebra::make({"E", "F", "H"},
                          {{{2, 0}, {{0, Rational(2)}}},    // [H,E] = 2E
                           {{2, 1}, {{1, Rational(-2)}}},   // [H,F] = -2F
                           {{0, 1}, {{2, Rational(1)}}}});  // [E,F] = H
}

HopfAction h2_action() {
  LieAlgebra L = LieAlgebra::make({"x"}, {});
  return HopfAction::make(cyclic(2), std::move(L), {{1, {{{0, Rational(-1)}}}}});
}

HopfAction aff2_flip_action() {
  return HopfAction::make(cyclic(2), aff2(),
                          {{1, {{{0, Rational(1)}}, {{1, Rational(-1)}}}}});
}

HopfAction heis3_rotation_action() {
  /* order-3 rotation: x -> y, y -> -x-y, z -> z (determinant 1) */
  std::vector<LinComb> rho_g = {{{1, Rational(1)}},
                                {{0, Rational(-1)}, {1, Rational(-1)}},
                                {{2, Rational(1)}}};
  std::vector<LinComb> rho_g2 = {{{0, Rational(-1)}, {1, Rational(-1)}},
                                 {{0, Rational(1)}},
                                 {{2, Rational(1)}}};
  return HopfAction::make(cyclic(3), heis3(), {{1, rho_g}, {2, rho_g2}});
}

HopfAction sl2_swap_action() {
  std::vector<LinComb> rho_g = {{{1, Rational(1)}}, {{0, Rational(1)}}, {{2, Rational(-1)}}};
  return HopfAction::make(cyclic(2), sl2(), {{1, rho_g}});
}

std::vector<NamedGroup> all_groups() {
  std::vector<NamedGroup> out;
  for (std::uint32_t n = 1; n <= 8; ++n)
    out.push_back({"C" + std::to_string(n), cyclic(n)});
  out.push_back({"S3", symmetric3()});
  out.push_back({"D4", dihedral4()});
  out.push_back({"Q8", quaternion8()});
  return out;
}

std::vector<NamedLie> all_lie_algebras() {
  return {{"ab1", abelian(1)}, {"ab2", abelian(2)}, {"ab3", abelian(3)},
          {"aff2", aff2()},    {"heis3", heis3()},  {"sl2", sl2()}};
}

std::vector<NamedAction> all_smash_actions() {
  return {{"H2", h2_action()},
          {"Haff", aff2_flip_action()},
          {"Hheis", heis3_rotation_action()},
          {"Hsl2", sl2_swap_action()}};
}

}  // namespace hopfcat::catalog
