#include "hopfcat/sparse_matrix.hpp"

#include <algorithm>
#include <map>

namespace hopfcat {

const Rational* row_find(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

SparseRow row_axpy(const SparseRow& target, const Rational& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -c * pivot[j].second);
      ++j;
    } else {
      Rational v = target[i].second - c * pivot[j].second;
      if (!is_zero(v)) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

struct ElimState {
  std::vector<SparseRow> reduced;  // rows with chosen pivots, fully reduced
  std::vector<int> pivots;         // parallel to reduced
  std::vector<SparseRow> rest;     // rows with no pivot candidate left
};

/* Gauss-Jordan elimination; pivots are only chosen in columns < pivot_cols,
   which lets solve() carry its right-hand side as a sentinel column. */
ElimState eliminate(std::vector<SparseRow> rows, int pivot_cols, ExecMode mode) {
  ElimState st;
  std::vector<SparseRow> active;
  active.reserve(rows.size());
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));

  for (;;) {
    std::size_t best = active.size();
    int best_col = pivot_cols;
    for (std::size_t i = 0; i < active.size(); ++i) {
      int lead = active[i].front().first;
      if (lead < best_col) {
        best_col = lead;
        best = i;
      }
    }
    if (best == active.size()) break;

    SparseRow pivot = std::move(active[best]);
    active.erase(active.begin() + best);
    Rational lead = pivot.front().second;
    if (!is_one(lead))
      for (auto& e : pivot) e.second /= lead;

    std::size_t n_active = active.size(), n_done = st.reduced.size();
    parallel_for(n_active + n_done, mode, [&](std::size_t i) {
      SparseRow& row = i < n_active ? active[i] : st.reduced[i - n_active];
      if (const Rational* c = row_find(row, best_col)) row = row_axpy(row, *c, pivot);
    });
    active.erase(std::remove_if(active.begin(), active.end(),
                                [](const SparseRow& r) { return r.empty(); }),
                 active.end());

    st.pivots.push_back(best_col);
    st.reduced.push_back(std::move(pivot));
  }

  std::vector<std::size_t> order(st.reduced.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return st.pivots[a] < st.pivots[b]; });
  ElimState out;
  out.rest = std::move(active);
  for (std::size_t i : order) {
    out.reduced.push_back(std::move(st.reduced[i]));
    out.pivots.push_back(st.pivots[i]);
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::from_entries(int rows, int cols, std::vector<MatrixEntry> entries) {
  SparseMatrix m(rows, cols);
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw ValidationError("matrix entry out of bounds");
    if (!m.entries_.empty() && m.entries_.back().row == e.row &&
        m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (is_zero(m.entries_.back().value)) m.entries_.pop_back();
    } else if (!is_zero(e.value)) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<SparseRow>& rows, int cols) {
  SparseMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r]) {
      if (c < 0 || c >= cols) throw ValidationError("matrix entry out of bounds");
      if (!is_zero(v)) m.entries_.push_back({r, c, v});
    }
  return m;
}

std::vector<SparseRow> SparseMatrix::row_list() const {
  std::vector<SparseRow> rows(rows_);
  for (const auto& e : entries_) rows[e.row].emplace_back(e.col, e.value);
  return rows;
}

DenseVec SparseMatrix::apply(const DenseVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw ValidationError("matrix-vector dimension mismatch");
  DenseVec out(rows_, Rational(0));
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

RrefResult rref(const SparseMatrix& m, ExecMode mode) {
  ElimState st = eliminate(m.row_list(), m.cols(), mode);
  RrefResult res;
  res.rank = static_cast<int>(st.reduced.size());
  res.pivots = st.pivots;
  st.reduced.resize(m.rows());
  res.matrix = SparseMatrix::from_rows(st.reduced, m.cols());
  return res;
}

std::vector<DenseVec> nullspace(const SparseMatrix& m, ExecMode mode) {
  ElimState st = eliminate(m.row_list(), m.cols(), mode);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : st.pivots) is_pivot[p] = true;
  std::vector<DenseVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < st.reduced.size(); ++i)
      if (const Rational* c = row_find(st.reduced[i], f)) v[st.pivots[i]] = -*c;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<DenseVec> solve(const SparseMatrix& m, const DenseVec& rhs, ExecMode mode) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw ValidationError("solve: rhs length does not match row count");
  std::vector<SparseRow> rows = m.row_list();
  for (int r = 0; r < m.rows(); ++r)
    if (!is_zero(rhs[r])) rows[r].emplace_back(m.cols(), rhs[r]);
  ElimState st = eliminate(std::move(rows), m.cols(), mode);
  for (const auto& row : st.rest)
    if (!row.empty()) return std::nullopt;  // 0 = nonzero residue
  DenseVec x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < st.reduced.size(); ++i)
    if (const Rational* b = row_find(st.reduced[i], m.cols())) x[st.pivots[i]] = *b;
  return x;
}

std::vector<std::optional<DenseVec>> solve_many(const SparseMatrix& m,
                                                const std::vector<DenseVec>& rhs,
                                                ExecMode mode) {
  const int n = m.cols();
  const int k = static_cast<int>(rhs.size());
  std::vector<SparseRow> rows = m.row_list();
  for (int t = 0; t < k; ++t) {
    if (static_cast<int>(rhs[t].size()) != m.rows())
      throw ValidationError("solve_many: rhs length does not match row count");
    for (int r = 0; r < m.rows(); ++r)
      if (!is_zero(rhs[t][r])) rows[r].emplace_back(n + t, rhs[t][r]);
  }
  ElimState st = eliminate(std::move(rows), n, mode);

  std::vector<bool> inconsistent(k, false);
  for (const auto& row : st.rest)
    for (const auto& [c, v] : row) inconsistent[c - n] = true;

  std::vector<std::optional<DenseVec>> out(k);
  for (int t = 0; t < k; ++t) {
    if (inconsistent[t]) continue;
    DenseVec x(n, Rational(0));
    for (std::size_t i = 0; i < st.reduced.size(); ++i)
      if (const Rational* b = row_find(st.reduced[i], n + t)) x[st.pivots[i]] = *b;
    out[t] = std::move(x);
  }
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
  std::vector<SparseRow> brows = b.row_list();
  std::vector<SparseRow> arows = a.row_list();
  std::vector<MatrixEntry> entries;
  for (int r = 0; r < a.rows(); ++r) {
    std::map<int, Rational> acc;
    for (const auto& [k, v] : arows[r])
      for (const auto& [c, w] : brows[k]) acc[c] += v * w;
    for (auto& [c, v] : acc)
      if (!is_zero(v)) entries.push_back({r, c, std::move(v)});
  }
  return SparseMatrix::from_entries(a.rows(), b.cols(), std::move(entries));
}

std::vector<SparseRow> canonical_span(const std::vector<SparseRow>& vectors, int cols) {
  ElimState st = eliminate(vectors, cols, ExecMode::Serial);
  return st.reduced;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m, ExecMode mode) {
  if (m.rows() != m.cols()) throw ValidationError("inverse: matrix is not square");
  const int n = m.rows();
  std::vector<SparseRow> rows = m.row_list();
  for (int r = 0; r < n; ++r) rows[r].emplace_back(n + r, Rational(1));
  ElimState st = eliminate(std::move(rows), n, mode);
  if (static_cast<int>(st.reduced.size()) != n) return std::nullopt;
  std::vector<MatrixEntry> entries;
  for (int r = 0; r < n; ++r) {
    if (st.pivots[r] != r) return std::nullopt;
    for (const auto& [c, v] : st.reduced[r])
      if (c >= n) entries.push_back({r, c - n, v});
  }
  return SparseMatrix::from_entries(n, n, std::move(entries));
}

}  // namespace hopfcat
