#include "hopfcat/action.hpp"

namespace hopfcat {

HopfAction HopfAction::make(FiniteGroup group, LieAlgebra lie,
                            std::map<std::uint32_t, std::vector<LinComb>> rho) {
  const std::uint32_t n = group.size();
  const std::uint32_t d = lie.dim();
  HopfAction a;
  a.rho_.assign(n, {});
  for (std::uint32_t j = 0; j < d; ++j)
    a.rho_[group.identity()].push_back(LinComb{{j, Rational(1)}});
  for (auto& [g, cols] : rho) {
    if (g >= n) throw ValidationError("action names an unknown group element");
    if (g == group.identity()) {
      for (std::uint32_t j = 0; j < d; ++j)
        if (cols.size() != d || cols[j] != a.rho_[g][j])
          throw ValidationError("action redefines the identity element");
      continue;
    }
    if (cols.size() != d)
      throw ValidationError("action for '" + group.label(g) + "' must map every basis vector");
    for (const auto& col : cols)
      for (const auto& [k, c] : col) {
        if (k >= d) throw ValidationError("action image index out of range");
        (void)c;
      }
    a.rho_[g] = std::move(cols);
  }
  for (std::uint32_t g = 0; g < n; ++g)
    if (a.rho_[g].empty() && d > 0)
      throw ValidationError("action missing matrix for '" + group.label(g) + "'");
    else if (a.rho_[g].empty())
      a.rho_[g] = {};
  a.group_ = std::move(group);
  a.lie_ = std::move(lie);

  Verdict v = a.validate();
  if (!v.pass) throw ValidationError("invalid action: " + v.first_failure());
  return a;
}

LinComb HopfAction::apply(std::uint32_t g, const LinComb& v) const {
  LinAccum acc;
  for (const auto& [j, c] : v) acc.add(rho_[g][j], c);
  return acc.take();
}

Verdict HopfAction::validate() const {
  Verdict verdict;
  const std::uint32_t n = group_.size();
  const std::uint32_t d = lie_.dim();

  CheckResult identity{"action identity", true, d, "", ""};
  for (std::uint32_t j = 0; j < d && identity.pass; ++j)
    if (apply(group_.identity(), j) != LinComb{{j, Rational(1)}}) {
      identity.pass = false;
      identity.witness = lie_.label(j);
    }
  verdict.add(identity);

  CheckResult hom{"action group homomorphism", true, std::size_t(n) * n * d, "", ""};
  for (std::uint32_t g = 0; g < n && hom.pass; ++g)
    for (std::uint32_t h = 0; h < n && hom.pass; ++h)
      for (std::uint32_t j = 0; j < d && hom.pass; ++j) {
        LinComb lhs = apply(g, apply(h, j));
        const LinComb& rhs = apply(group_.mul(g, h), j);
        if (lhs != rhs) {
          hom.pass = false;
          hom.witness = "(" + group_.label(g) + ", " + group_.label(h) + ", " +
                        lie_.label(j) + ")";
        }
      }
  verdict.add(hom);

  CheckResult bracket{"action preserves bracket", true, std::size_t(n) * d * d, "", ""};
  for (std::uint32_t g = 0; g < n && bracket.pass; ++g)
    for (std::uint32_t i = 0; i < d && bracket.pass; ++i)
      for (std::uint32_t j = 0; j < d && bracket.pass; ++j) {
        LinComb lhs = lie_.bracket(apply(g, i), apply(g, j));
        LinComb rhs = apply(g, lie_.bracket(i, j));
        if (lhs != rhs) {
          bracket.pass = false;
          bracket.witness = "(" + group_.label(g) + ", " + lie_.label(i) + ", " +
                            lie_.label(j) + ")";
        }
      }
  verdict.add(bracket);

  /* automorphism = invertible: rho(g)rho(g^-1) = id follows from the
     homomorphism and identity checks, so no extra rank test is needed. */
  return verdict;
}

Verdict validate_action(const HopfAction& action) { return action.validate(); }

}  // namespace hopfcat
