#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfcat/parallel.hpp"
#include "hopfcat/rational.hpp"

namespace hopfcat {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;
};

/* Row as sorted (col, value) pairs; no zeros, no duplicate columns. */
using SparseRow = std::vector<std::pair<int, Rational>>;
using DenseVec = std::vector<Rational>;

/* Immutable sparse matrix over the rationals. Entries are kept row-major
   sorted with no zero values and no duplicate positions. */
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  /* Duplicate positions are summed; zero sums are dropped. */
  static SparseMatrix from_entries(int rows, int cols, std::vector<MatrixEntry> entries);
  static SparseMatrix from_rows(const std::vector<SparseRow>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  std::vector<SparseRow> row_list() const;
  DenseVec apply(const DenseVec& v) const;  // m * v

  bool operator==(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].row != other.entries_[i].row ||
          entries_[i].col != other.entries_[i].col ||
          entries_[i].value != other.entries_[i].value)
        return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

struct RrefResult {
  int rank = 0;
  SparseMatrix matrix;      // the unique reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

/* Gauss-Jordan over Q. The RREF is unique, so the result is independent of
   the execution mode; Parallel fans the row updates out across workers. */
RrefResult rref(const SparseMatrix& m, ExecMode mode = default_exec_mode());

/* Kernel basis; the vector for free column f has coordinate 1 at f, free
   columns are visited in ascending column order. */
std::vector<DenseVec> nullspace(const SparseMatrix& m, ExecMode mode = default_exec_mode());

/* One solution of m x = rhs with all free variables set to zero, or nullopt
   when the system is inconsistent. Dimension mismatches throw. */
std::optional<DenseVec> solve(const SparseMatrix& m, const DenseVec& rhs,
                              ExecMode mode = default_exec_mode());

/* Batched solve against a shared coefficient matrix: one elimination pass,
   one answer per right-hand side (nullopt where inconsistent). */
std::vector<std::optional<DenseVec>> solve_many(const SparseMatrix& m,
                                                const std::vector<DenseVec>& rhs,
                                                ExecMode mode = default_exec_mode());

/* Sparse product a * b (used by tests comparing composed morphism matrices). */
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/* Inverse of a square matrix via rref of [m | I]; nullopt when singular. */
std::optional<SparseMatrix> inverse(const SparseMatrix& m,
                                    ExecMode mode = default_exec_mode());

/* Canonical basis of the row space: the nonzero rows of the RREF. Two spans
   are equal iff their canonical bases are equal. */
std::vector<SparseRow> canonical_span(const std::vector<SparseRow>& vectors, int cols);

/* Pointer to the value at column col, or nullptr when absent. */
const Rational* row_find(const SparseRow& row, int col);

/* target - c * pivot, merging sorted rows and dropping zero results. */
SparseRow row_axpy(const SparseRow& target, const Rational& c, const SparseRow& pivot);

}  // namespace hopfcat
