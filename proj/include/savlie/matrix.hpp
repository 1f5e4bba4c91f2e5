#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "savlie/sparse_vec.hpp"

namespace savlie {

// Dense matrix over Q. Row reduction is plain exact Gauss-Jordan; at the
// scales this project works at (a few hundred rows/columns) that is enough,
// and fraction-free tricks are deliberately out of scope.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const SparseVec<int>& row);

  bool operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix matadd(const RationalMatrix& a, const RationalMatrix& b,
                      const Rational& scale_b = Rational(1));
RationalMatrix matscale(const RationalMatrix& a, const Rational& s);

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // ascending
  std::size_t rank() const { return pivot_columns.size(); }
};

// Reduced row-echelon form over Q. Deterministic: pivots are chosen as the
// first nonzero entry scanning rows top-down per column.
RrefResult rref(const RationalMatrix& m);

// Basis of {x : m x = 0} in rref-canonical form: one vector per free column,
// with that free coordinate set to 1. Count equals cols - rank exactly.
std::vector<SparseVec<int>> nullspace_basis(const RationalMatrix& m);

struct SubspaceNotContained : std::runtime_error {
  explicit SubspaceNotContained(std::string witness_desc)
      : std::runtime_error("subspace vector not contained in span: " +
                           witness_desc),
        witness(std::move(witness_desc)) {}
  std::string witness;
};

// Incremental row-echelon basis over sparse integer-keyed rows. Used to absorb
// large equation streams (cocycle systems, spanning-set solves) one row at a
// time without materializing the full matrix.
class IncrementalEchelon {
 public:
  // Reduces `row` against the basis; if a nonzero remainder survives it is
  // normalized (leading coefficient 1) and inserted. Returns true if inserted.
  bool insert(SparseVec<int> row);

  // Reduces `row` without inserting; returns the remainder.
  SparseVec<int> reduce(SparseVec<int> row) const;

  bool contains(const SparseVec<int>& row) const {
    return reduce(row).empty();
  }

  std::size_t rank() const { return rows_.size(); }

  // Back-eliminates so every pivot column appears in exactly one row, then
  // returns the rows in ascending pivot order.
  std::vector<SparseVec<int>> canonical_rows();

  // Nullspace basis of the collected rows viewed as a matrix over columns
  // [0, num_cols), in the same rref-canonical form as nullspace_basis.
  std::vector<SparseVec<int>> nullspace(int num_cols);

  const std::map<int, SparseVec<int>>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec<int>> rows_;  // pivot column -> normalized row
};

namespace detail {
template <class K>
std::vector<K> collect_keys(const std::vector<SparseVec<K>>& space,
                            const std::vector<SparseVec<K>>& subspace) {
  std::set<K> keys;
  for (const auto& v : space)
    for (const auto& [k, c] : v) keys.insert(k);
  for (const auto& v : subspace)
    for (const auto& [k, c] : v) keys.insert(k);
  return std::vector<K>(keys.begin(), keys.end());
}

template <class K>
std::string describe_vector(const SparseVec<K>& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    os << rational_to_string(c) << "*[" << k << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace detail

// dim span(space) - dim span(subspace), with an exact containment check.
// Throws SubspaceNotContained (with a witness) if some subspace vector lies
// outside span(space).
template <class K>
std::size_t quotient_dimension(const std::vector<SparseVec<K>>& space,
                               const std::vector<SparseVec<K>>& subspace) {
  std::vector<K> keys = detail::collect_keys(space, subspace);
  std::map<K, int> column;
  for (std::size_t i = 0; i < keys.size(); ++i) column[keys[i]] = int(i);
  auto to_int_row = [&](const SparseVec<K>& v) {
    SparseVec<int> row;
    for (const auto& [k, c] : v) row.add_term(column.at(k), c);
    return row;
  };
  IncrementalEchelon span;
  for (const auto& v : space) span.insert(to_int_row(v));
  IncrementalEchelon sub;
  for (const auto& v : subspace) {
    SparseVec<int> row = to_int_row(v);
    if (!span.contains(row)) {
      throw SubspaceNotContained(detail::describe_vector(v));
    }
    sub.insert(std::move(row));
  }
  return span.rank() - sub.rank();
}

}  // namespace savlie
