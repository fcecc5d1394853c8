#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfcat {

/* Finite group given by its full multiplication table. Construction rejects
   anything that is not a group (Latin square, associativity, identity,
   inverses) and names the offending entry. */
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<std::uint32_t>> table);
  static FiniteGroup trivial();  // one element labeled "e"

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const std::string& label(std::uint32_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }
  std::optional<std::uint32_t> index_of(const std::string& label) const;

  bool operator==(const FiniteGroup& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace hopfcat
