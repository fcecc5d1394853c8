#include "hopfcat/axioms.hpp"

#include <array>
#include <utility>
#include <vector>

namespace hopfcat {

namespace {

using Failure = std::pair<std::size_t, std::string>;

CheckResult make_check(std::string name, std::size_t items,
                       const std::vector<Failure>& failures) {
  CheckResult out{std::move(name), failures.empty(), items, "", ""};
  if (!failures.empty()) {
    out.witness = failures.front().second;
    out.details = std::to_string(failures.size()) + " of " + std::to_string(items) +
                  " instances failed";
  }
  return out;
}

std::string diff_note(const Element& lhs, const Element& rhs) {
  return "lhs = " + lhs.str() + ", rhs = " + rhs.str();
}

}  // namespace

Tensor2 tensor2_multiply(const HopfPresentation& H, const Tensor2& s, const Tensor2& t) {
  Tensor2 out(s.left(), s.right());
  for (const auto& [ij, c] : s.terms())
    for (const auto& [kl, d] : t.terms()) {
      const Element& left = H.mult_basis(ij.first, kl.first);
      const Element& right = H.mult_basis(ij.second, kl.second);
      for (const auto& [a, ca] : left.terms())
        for (const auto& [b, cb] : right.terms()) out.add_scaled(a, b, c * d * ca * cb);
    }
  return out;
}

Verdict check_hopf_axioms(const HopfPresentation& H, ExecMode mode) {
  Verdict v;
  v.degree = H.degree_bound();
  const std::uint32_t n = H.dim();
  const int d = H.degree_bound();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (H.degree_of(i) + H.degree_of(j) > d) continue;
      pairs.push_back({i, j});
      for (std::uint32_t k = 0; k < n; ++k)
        if (H.degree_of(i) + H.degree_of(j) + H.degree_of(k) <= d)
          triples.push_back({i, j, k});
    }

  auto label3 = [&](const std::array<std::uint32_t, 3>& t) {
    return "(" + H.basis_label(t[0]) + ", " + H.basis_label(t[1]) + ", " +
           H.basis_label(t[2]) + ")";
  };
  auto label2 = [&](const std::pair<std::uint32_t, std::uint32_t>& p) {
    return "(" + H.basis_label(p.first) + ", " + H.basis_label(p.second) + ")";
  };

  v.add(make_check("associativity", triples.size(),
                   collect_failures(triples.size(), mode, [&](std::size_t t) {
                     const auto [i, j, k] = triples[t];
                     Element lhs = H.multiply(H.mult_basis(i, j), H.basis_element(k));
                     Element rhs = H.multiply(H.basis_element(i), H.mult_basis(j, k));
                     if (lhs == rhs) return std::optional<std::string>();
                     return std::optional<std::string>(label3(triples[t]) + ": " +
                                                       diff_note(lhs, rhs));
                   })));

  v.add(make_check(
      "unit", static_cast<std::size_t>(n) + 2,
      collect_failures(static_cast<std::size_t>(n) + 2, mode,
                       [&](std::size_t i) -> std::optional<std::string> {
                         if (i == n) {
                           if (H.comultiply(H.one()) == Tensor2::pure(H.one(), H.one()))
                             return std::nullopt;
                           return "comultiplication of the unit is not unit (x) unit";
                         }
                         if (i == n + 1) {
                           if (H.counit(H.one()) == Rational(1)) return std::nullopt;
                           return "counit of the unit is " + to_string(H.counit(H.one()));
                         }
                         Element e = H.basis_element(static_cast<std::uint32_t>(i));
                         Element l = H.multiply(H.one(), e);
                         Element r = H.multiply(e, H.one());
                         if (l == e && r == e) return std::nullopt;
                         return H.basis_label(static_cast<std::uint32_t>(i)) + ": " +
                                diff_note(l, r);
                       })));

  v.add(make_check("coassociativity", n,
                   collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
                     Tensor3 lhs(&H), rhs(&H);
                     for (const auto& [ab, c] : H.delta_basis(i).terms()) {
                       for (const auto& [xy, e] : H.delta_basis(ab.first).terms())
                         lhs.add_scaled(xy.first, xy.second, ab.second, c * e);
                       for (const auto& [xy, e] : H.delta_basis(ab.second).terms())
                         rhs.add_scaled(ab.first, xy.first, xy.second, c * e);
                     }
                     if (lhs == rhs) return std::nullopt;
                     return H.basis_label(static_cast<std::uint32_t>(i)) +
                            ": (Delta (x) id)Delta != (id (x) Delta)Delta";
                   })));

  v.add(make_check("counit", n,
                   collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
                     Element l(&H), r(&H);
                     for (const auto& [ab, c] : H.delta_basis(i).terms()) {
                       l.add_scaled(ab.second, c * H.counit_basis(ab.first));
                       r.add_scaled(ab.first, c * H.counit_basis(ab.second));
                     }
                     Element e = H.basis_element(static_cast<std::uint32_t>(i));
                     if (l == e && r == e) return std::nullopt;
                     return H.basis_label(static_cast<std::uint32_t>(i)) + ": " +
                            diff_note(l, r);
                   })));

  v.add(make_check("comultiplication is an algebra map", pairs.size(),
                   collect_failures(pairs.size(), mode,
                                    [&](std::size_t t) -> std::optional<std::string> {
                                      const auto [i, j] = pairs[t];
                                      Tensor2 lhs = H.comultiply(H.mult_basis(i, j));
                                      Tensor2 rhs = tensor2_multiply(H, H.delta_basis(i),
                                                                     H.delta_basis(j));
                                      if (lhs == rhs) return std::nullopt;
                                      return label2(pairs[t]) + ": lhs = " + lhs.str() +
                                             ", rhs = " + rhs.str();
                                    })));

  v.add(make_check("counit is an algebra map", pairs.size(),
                   collect_failures(pairs.size(), mode,
                                    [&](std::size_t t) -> std::optional<std::string> {
                                      const auto [i, j] = pairs[t];
                                      Rational lhs = H.counit(H.mult_basis(i, j));
                                      Rational rhs = H.counit_basis(i) * H.counit_basis(j);
                                      if (lhs == rhs) return std::nullopt;
                                      return label2(pairs[t]) + ": lhs = " + to_string(lhs) +
                                             ", rhs = " + to_string(rhs);
                                    })));

  v.add(make_check("antipode identity", n,
                   collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
                     Element l(&H), r(&H);
                     for (const auto& [ab, c] : H.delta_basis(i).terms()) {
                       l.add_scaled(H.multiply(H.antipode_basis(ab.first),
                                               H.basis_element(ab.second)),
                                    c);
                       r.add_scaled(H.multiply(H.basis_element(ab.first),
                                               H.antipode_basis(ab.second)),
                                    c);
                     }
                     Element target = H.one().scaled(H.counit_basis(i));
                     if (l == target && r == target) return std::nullopt;
                     return H.basis_label(static_cast<std::uint32_t>(i)) + ": " +
                            diff_note(l, r) + ", expected " + target.str();
                   })));

  v.add(make_check("cocommutativity", n,
                   collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
                     if (H.delta_basis(i).twisted() == H.delta_basis(i)) return std::nullopt;
                     return H.basis_label(static_cast<std::uint32_t>(i)) +
                            ": twist(Delta) != Delta";
                   })));

  return v;
}

}  // namespace hopfcat
