#include "hopfcat/lie.hpp"

namespace hopfcat {

LieAlgebra LieAlgebra::make(
    std::vector<std::string> labels,
    const std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb>& brackets) {
  const std::uint32_t n = static_cast<std::uint32_t>(labels.size());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw ValidationError("duplicate Lie basis label '" + labels[i] + "'");

  LieAlgebra L;
  L.labels_ = std::move(labels);
  L.table_.assign(n, std::vector<LinComb>(n));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& [key, value] : brackets) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw ValidationError("bracket index out of range");
    for (const auto& [k, c] : value) {
      if (k >= n) throw ValidationError("bracket value index out of range");
      (void)c;
    }
    L.table_[i][j] = value;
    given[i][j] = true;
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    if (given[i][i] && !L.table_[i][i].empty())
      throw ValidationError("[" + L.labels_[i] + ", " + L.labels_[i] + "] must vanish");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (given[i][j] && given[j][i]) {
        if (L.table_[i][j] != lincomb_scaled(L.table_[j][i], Rational(-1)))
          throw ValidationError("antisymmetry fails at (" + L.labels_[i] + ", " +
                                L.labels_[j] + ")");
      } else if (given[i][j]) {
        L.table_[j][i] = lincomb_scaled(L.table_[i][j], Rational(-1));
      }
    }
  }

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        LinAccum acc;
        acc.add(L.bracket(LinComb{{i, Rational(1)}}, L.table_[j][k]));
        acc.add(L.bracket(LinComb{{j, Rational(1)}}, L.table_[k][i]));
        acc.add(L.bracket(LinComb{{k, Rational(1)}}, L.table_[i][j]));
        if (!acc.take().empty())
          throw ValidationError("Jacobi identity fails at (" + L.labels_[i] + ", " +
                                L.labels_[j] + ", " + L.labels_[k] + ")");
      }
  return L;
}

LinComb LieAlgebra::bracket(const LinComb& a, const LinComb& b) const {
  LinAccum acc;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) acc.add(table_[i][j], ci * cj);
  return acc.take();
}

std::optional<std::uint32_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace hopfcat
