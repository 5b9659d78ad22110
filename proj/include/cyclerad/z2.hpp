#pragma once

// Sparse linear algebra over Z2.
//
// Columns are stored as strictly increasing lists of row indices, so a column
// is exactly the support of a Z2 vector and column addition is a symmetric
// difference of supports.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclerad {

using Index = std::size_t;
using Column = std::vector<Index>;

/// True iff `col` is strictly increasing with every entry below `n_rows`.
inline bool is_canonical(const Column& col, Index n_rows) {
  for (Index k = 0; k < col.size(); ++k) {
    if (col[k] >= n_rows) return false;
    if (k > 0 && col[k - 1] >= col[k]) return false;
  }
  return true;
}

/// target += source over Z2. `scratch` is reused between calls to avoid
/// reallocating in reduction loops.
inline void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(),
                                source.end(), std::back_inserter(scratch));
  target.swap(scratch);
}

inline void add_column(Column& target, const Column& source) {
  Column scratch;
  add_column(target, source, scratch);
}

/// Row index of the lowest nonzero entry; nullopt for a zero column.
inline std::optional<Index> low(const Column& col) {
  if (col.empty()) return std::nullopt;
  return col.back();
}

/// A 0-1 vector in a standard chain basis of size `ambient_size`.
class ChainVector {
 public:
  ChainVector() = default;
  explicit ChainVector(Index ambient_size) : ambient_size_(ambient_size) {}

  ChainVector(Index ambient_size, Column support)
      : ambient_size_(ambient_size), support_(std::move(support)) {
    if (!is_canonical(support_, ambient_size_)) {
      throw std::invalid_argument(
          "chain support must be strictly increasing and below the ambient size");
    }
  }

  /// Builds a chain from an arbitrary index list; repeated indices cancel.
  static ChainVector from_indices(Index ambient_size, std::vector<Index> indices) {
    std::sort(indices.begin(), indices.end());
    Column support;
    for (Index k = 0; k < indices.size();) {
      Index run = k;
      while (run < indices.size() && indices[run] == indices[k]) ++run;
      if ((run - k) % 2 == 1) support.push_back(indices[k]);
      k = run;
    }
    return ChainVector(ambient_size, std::move(support));
  }

  Index ambient_size() const { return ambient_size_; }
  const Column& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Index weight() const { return support_.size(); }

  bool contains(Index i) const {
    return std::binary_search(support_.begin(), support_.end(), i);
  }

  ChainVector& operator+=(const ChainVector& other) {
    if (other.ambient_size_ != ambient_size_) {
      throw std::invalid_argument("adding chains of different ambient size");
    }
    add_column(support_, other.support_);
    return *this;
  }

  friend ChainVector operator+(ChainVector a, const ChainVector& b) {
    a += b;
    return a;
  }

  friend bool operator==(const ChainVector&, const ChainVector&) = default;

 private:
  Index ambient_size_ = 0;
  Column support_;
};

/// Sparse column matrix over Z2.
class Z2Matrix {
 public:
  Z2Matrix() = default;
  explicit Z2Matrix(Index n_rows) : n_rows_(n_rows) {}

  Z2Matrix(Index n_rows, std::vector<Column> columns)
      : n_rows_(n_rows), columns_(std::move(columns)) {
    for (const Column& col : columns_) check(col);
  }

  static Z2Matrix identity(Index n) {
    Z2Matrix m(n);
    m.columns_.reserve(n);
    for (Index j = 0; j < n; ++j) m.columns_.push_back(Column{j});
    return m;
  }

  Index n_rows() const { return n_rows_; }
  Index n_cols() const { return columns_.size(); }
  const Column& column(Index j) const { return columns_.at(j); }
  const std::vector<Column>& columns() const { return columns_; }

  ChainVector column_chain(Index j) const {
    return ChainVector(n_rows_, columns_.at(j));
  }

  void push_back(Column col) {
    check(col);
    columns_.push_back(std::move(col));
  }

  void push_back(const ChainVector& chain) {
    if (chain.ambient_size() != n_rows_) {
      throw std::invalid_argument("chain size does not match matrix rows");
    }
    columns_.push_back(chain.support());
  }

  /// Sum of the selected columns.
  ChainVector combine(std::span<const Index> selection) const {
    Column acc;
    Column scratch;
    for (Index j : selection) add_column(acc, columns_.at(j), scratch);
    return ChainVector(n_rows_, std::move(acc));
  }

  friend bool operator==(const Z2Matrix&, const Z2Matrix&) = default;

 private:
  void check(const Column& col) const {
    if (!is_canonical(col, n_rows_)) {
      throw std::invalid_argument("matrix column of size " +
                                  std::to_string(col.size()) +
                                  " is not canonical for " +
                                  std::to_string(n_rows_) + " rows");
    }
  }

  Index n_rows_ = 0;
  std::vector<Column> columns_;
};

/// [a | b]
inline Z2Matrix hstack(const Z2Matrix& a, const Z2Matrix& b) {
  if (a.n_rows() != b.n_rows()) {
    throw std::invalid_argument("hstack: row counts differ");
  }
  std::vector<Column> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return Z2Matrix(a.n_rows(), std::move(cols));
}

inline Z2Matrix operator*(const Z2Matrix& a, const Z2Matrix& b) {
  if (a.n_cols() != b.n_rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  std::vector<Column> cols;
  cols.reserve(b.n_cols());
  for (const Column& sel : b.columns()) cols.push_back(a.combine(sel).support());
  return Z2Matrix(a.n_rows(), std::move(cols));
}

struct ReductionResult {
  Z2Matrix reduced;
  /// V with reduced = M * V; upper triangular with unit diagonal.
  Z2Matrix basis_change;
  /// (low row, column) for every nonzero reduced column, by column.
  std::vector<std::pair<Index, Index>> pairs;
  /// Zero reduced columns whose index is not the low of another column.
  std::vector<Index> unpaired;

  bool is_zero(Index j) const { return reduced.column(j).empty(); }
};

/// Left-to-right column reduction: whenever an earlier column has the same
/// low, add it (and its V column) until the low is unique or the column
/// vanishes.
inline ReductionResult standard_reduction(const Z2Matrix& m) {
  const Index n_rows = m.n_rows();
  const Index n_cols = m.n_cols();
  std::vector<Column> reduced = m.columns();
  std::vector<Column> basis(n_cols);
  std::vector<std::optional<Index>> owner(n_rows);
  Column scratch;

  for (Index j = 0; j < n_cols; ++j) {
    Column& col = reduced[j];
    Column& v = basis[j];
    v.push_back(j);
    while (!col.empty()) {
      const auto pivot = owner[col.back()];
      if (!pivot) break;
      add_column(col, reduced[*pivot], scratch);
      add_column(v, basis[*pivot], scratch);
    }
    if (!col.empty()) owner[col.back()] = j;
  }

  ReductionResult out;
  for (Index j = 0; j < n_cols; ++j) {
    if (!reduced[j].empty()) {
      out.pairs.emplace_back(reduced[j].back(), j);
    } else if (j >= n_rows || !owner[j]) {
      out.unpaired.push_back(j);
    }
  }
  out.reduced = Z2Matrix(n_rows, std::move(reduced));
  out.basis_change = Z2Matrix(n_cols, std::move(basis));
  return out;
}

/// Solves a x = b by reducing [a | b]. Returns the indices of x equal to one,
/// or nullopt when b is not in the column span of a.
inline std::optional<std::vector<Index>> solve_by_reduction(const Z2Matrix& a,
                                                            const ChainVector& b) {
  if (b.ambient_size() != a.n_rows()) {
    throw std::invalid_argument("solve_by_reduction: b does not match rows of A");
  }
  Z2Matrix augmented = a;
  augmented.push_back(b);
  const Index last = a.n_cols();
  const ReductionResult red = standard_reduction(augmented);
  if (!red.is_zero(last)) return std::nullopt;
  // V_s always has its diagonal entry s as the largest row; drop it.
  std::vector<Index> solution = red.basis_change.column(last);
  solution.pop_back();
  return solution;
}

inline bool in_span(const Z2Matrix& basis, const ChainVector& v) {
  return solve_by_reduction(basis, v).has_value();
}

/// A span kept in reduced form for repeated membership queries. Columns are
/// inserted one at a time; each stored column has a distinct low.
class ReducedSpan {
 public:
  explicit ReducedSpan(Index n_rows) : n_rows_(n_rows), owner_(n_rows) {}

  ReducedSpan(const Z2Matrix& generators) : ReducedSpan(generators.n_rows()) {
    for (const Column& col : generators.columns()) insert(col);
  }

  Index n_rows() const { return n_rows_; }
  Index rank() const { return basis_.size(); }

  /// Reduces `col` against the stored columns; zero iff col is in the span.
  Column reduce(Column col) const {
    Column scratch;
    while (!col.empty()) {
      const auto pivot = owner_[col.back()];
      if (!pivot) break;
      add_column(col, basis_[*pivot], scratch);
    }
    return col;
  }

  /// Returns true iff the column enlarged the span.
  bool insert(Column col) {
    if (!is_canonical(col, n_rows_)) {
      throw std::invalid_argument("ReducedSpan::insert: column not canonical");
    }
    col = reduce(std::move(col));
    if (col.empty()) return false;
    owner_[col.back()] = basis_.size();
    basis_.push_back(std::move(col));
    return true;
  }

  bool insert(const ChainVector& v) {
    check(v);
    return insert(v.support());
  }

  bool contains(const ChainVector& v) const {
    check(v);
    return reduce(v.support()).empty();
  }

 private:
  void check(const ChainVector& v) const {
    if (v.ambient_size() != n_rows_) {
      throw std::invalid_argument("ReducedSpan: chain size does not match rows");
    }
  }

  Index n_rows_;
  std::vector<Column> basis_;
  std::vector<std::optional<Index>> owner_;
};

}  // namespace cyclerad
