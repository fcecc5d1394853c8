#include "hopfcat/group.hpp"

#include "hopfcat/rational.hpp"

namespace hopfcat {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<std::uint32_t>> table) {
  const std::uint32_t n = static_cast<std::uint32_t>(labels.size());
  if (n == 0) throw ValidationError("group must have at least one element");
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw ValidationError("duplicate group label '" + labels[i] + "'");
  if (table.size() != n) throw ValidationError("group table is not square");
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("group table is not square");
    for (auto v : row)
      if (v >= n) throw ValidationError("group table entry out of range");
  }

  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<bool> in_row(n, false), in_col(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (in_row[table[i][j]])
        throw ValidationError("group table row for '" + labels[i] + "' repeats '" +
                              labels[table[i][j]] + "'");
      in_row[table[i][j]] = true;
      if (in_col[table[j][i]])
        throw ValidationError("group table column for '" + labels[i] + "' repeats '" +
                              labels[table[j][i]] + "'");
      in_col[table[j][i]] = true;
    }
  }

  std::uint32_t identity = n;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t i = 0; i < n && ok; ++i)
      ok = table[e][i] == i && table[i][e] == i;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == n) throw ValidationError("group table has no identity element");

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("group table not associative at (" + labels[a] + ", " +
                                labels[b] + ", " + labels[c] + ")");

  FiniteGroup g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (g.table_[a][b] == identity && g.table_[b][a] == identity) {
        g.inverse_[a] = b;
        found = true;
        break;
      }
    if (!found)
      throw ValidationError("group element '" + g.labels_[a] + "' has no inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({"e"}, {{0}}); }

std::optional<std::uint32_t> FiniteGroup::index_of(const std::string& label) const {
  for (std::uint32_t i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace hopfcat
