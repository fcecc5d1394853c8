#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/lincomb.hpp"

namespace hopfcat {

/* Finite-dimensional Lie algebra over Q given by structure constants.
   Construction verifies antisymmetry and the Jacobi identity and reports the
   first failing triple. */
class LieAlgebra {
 public:
  /* Brackets may be given for either or both orientations; missing entries
     default to zero, redundant entries must agree with antisymmetry. */
  static LieAlgebra make(
      std::vector<std::string> labels,
      const std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb>& brackets);

  std::uint32_t dim() const { return static_cast<std::uint32_t>(labels_.size()); }
  const LinComb& bracket(std::uint32_t i, std::uint32_t j) const { return table_[i][j]; }
  LinComb bracket(const LinComb& a, const LinComb& b) const;
  const std::string& label(std::uint32_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::uint32_t> index_of(const std::string& label) const;

  bool operator==(const LieAlgebra& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }

 private:
  LieAlgebra() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<LinComb>> table_;  // table_[i][j] = [x_i, x_j]
};

}  // namespace hopfcat
