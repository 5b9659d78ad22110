#pragma once

// Dense Gaussian elimination over Z2. Deliberately naive: it is the
// reference the sparse reduction is checked against.

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/z2.hpp"

namespace testing {

using cyclerad::Index;

struct DenseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<std::uint8_t>> entry;  // entry[r][c]

  DenseMatrix(Index r, Index c) : rows(r), cols(c), entry(r, std::vector<std::uint8_t>(c, 0)) {}

  static DenseMatrix from(const cyclerad::Z2Matrix& m) {
    DenseMatrix d(m.n_rows(), m.n_cols());
    for (Index c = 0; c < m.n_cols(); ++c) {
      for (Index r : m.column(c)) d.entry[r][c] ^= 1;
    }
    return d;
  }

  void append_column(const std::vector<Index>& support) {
    for (Index r = 0; r < rows; ++r) entry[r].push_back(0);
    for (Index r : support) entry[r][cols] ^= 1;
    ++cols;
  }
};

inline Index rank(DenseMatrix m) {
  Index rank = 0;
  for (Index c = 0; c < m.cols && rank < m.rows; ++c) {
    Index pivot = rank;
    while (pivot < m.rows && !m.entry[pivot][c]) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.entry[pivot], m.entry[rank]);
    for (Index r = 0; r < m.rows; ++r) {
      if (r != rank && m.entry[r][c]) {
        for (Index k = c; k < m.cols; ++k) m.entry[r][k] ^= m.entry[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline bool solvable(const cyclerad::Z2Matrix& a, const cyclerad::ChainVector& b) {
  DenseMatrix d = DenseMatrix::from(a);
  const Index before = rank(d);
  d.append_column(b.support());
  return rank(d) == before;
}

/// Betti number of a face-closed set of simplices given by membership flags.
inline Index betti(const cyclerad::EmbeddedComplex& k,
                   const std::vector<std::vector<bool>>& members, Index p) {
  auto count = [&](Index d) {
    Index n = 0;
    if (d < members.size()) {
      for (bool b : members[d]) n += b;
    }
    return n;
  };
  // dense boundary matrix of dimension d over member simplices
  auto boundary_rank = [&](Index d) -> Index {
    if (d == 0 || d >= members.size()) return 0;
    std::vector<Index> row_of(k.size(d - 1), 0);
    Index rows = 0;
    for (Index i = 0; i < k.size(d - 1); ++i) {
      if (members[d - 1][i]) row_of[i] = rows++;
    }
    DenseMatrix m(rows, 0);
    for (Index i = 0; i < k.size(d); ++i) {
      if (!members[d][i]) continue;
      std::vector<Index> col;
      for (Index f : k.facets(d, i)) col.push_back(row_of[f]);
      m.append_column(col);
    }
    return rank(m);
  };
  return count(p) - boundary_rank(p) - boundary_rank(p + 1);
}

inline std::vector<std::vector<bool>> all_members(const cyclerad::EmbeddedComplex& k) {
  std::vector<std::vector<bool>> m(static_cast<Index>(k.max_dim() + 1));
  for (Index d = 0; d < m.size(); ++d) m[d].assign(k.size(d), true);
  return m;
}

inline std::vector<std::vector<bool>> prefix_members(const cyclerad::Filtration& f, Index last) {
  const cyclerad::EmbeddedComplex& k = f.complex();
  std::vector<std::vector<bool>> m(static_cast<Index>(k.max_dim() + 1));
  for (Index d = 0; d < m.size(); ++d) m[d].assign(k.size(d), false);
  for (Index pos = 0; pos <= last && pos < f.size(); ++pos) {
    const auto& id = f.order()[pos];
    m[id.dim][id.index] = true;
  }
  return m;
}

}  // namespace testing
