#include "savlie/matrix.hpp"

namespace savlie {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(const SparseVec<int>& row) {
  data_.resize((rows_ + 1) * cols_, Rational(0));
  for (const auto& [c, v] : row) {
    data_[rows_ * cols_ + std::size_t(c)] = v;
  }
  ++rows_;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix matadd(const RationalMatrix& a, const RationalMatrix& b,
                      const Rational& scale_b) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) += scale_b * b.at(i, j);
  return out;
}

RationalMatrix matscale(const RationalMatrix& a, const Rational& s) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) *= s;
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult out;
  out.matrix = m;
  RationalMatrix& a = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && is_zero(a.at(sel, col))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(sel, c), a.at(pivot_row, c));
    }
    Rational inv = 1 / a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || is_zero(a.at(r, col))) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::vector<SparseVec<int>> nullspace_basis(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

  std::vector<SparseVec<int>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    SparseVec<int> v;
    v.add_term(int(free_col), Rational(1));
    for (std::size_t p = 0; p < r.pivot_columns.size(); ++p) {
      const Rational& entry = r.matrix.at(p, free_col);
      if (!is_zero(entry)) v.add_term(int(r.pivot_columns[p]), -entry);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool IncrementalEchelon::insert(SparseVec<int> row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int lead = row.entries().front().first;
  Rational inv = 1 / row.entries().front().second;
  row.scale_in_place(inv);
  rows_.emplace(lead, std::move(row));
  return true;
}

SparseVec<int> IncrementalEchelon::reduce(SparseVec<int> row) const {
  // Walk the row left to right. Eliminating at key k cancels that entry and
  // only introduces keys greater than k, so entries already passed stay
  // untouched and one sweep suffices.
  std::size_t idx = 0;
  while (idx < row.size()) {
    int key = row.entries()[idx].first;
    auto it = rows_.find(key);
    if (it == rows_.end()) {
      ++idx;
      continue;
    }
    Rational f = row.entries()[idx].second;
    row.add_scaled(it->second, -f);
  }
  return row;
}

std::vector<SparseVec<int>> IncrementalEchelon::canonical_rows() {
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (auto& [lead, row] : rows_) {
      if (lead == it->first) continue;
      const Rational* c = row.find(it->first);
      if (c != nullptr) {
        Rational f = *c;
        row.add_scaled(it->second, -f);
      }
    }
  }
  std::vector<SparseVec<int>> out;
  out.reserve(rows_.size());
  for (const auto& [lead, row] : rows_) out.push_back(row);
  return out;
}

}  // namespace savlie
