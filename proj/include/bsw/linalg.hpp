#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bsw/rational.hpp"

namespace bsw {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

namespace detail {

// Fraction-free (Bareiss) forward elimination on an integer matrix; rows are
// reordered in place, pivot columns recorded. All divisions are exact.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

// Reduced row echelon form with unit pivots. Elimination is fraction-free
// internally (rows cleared to integers, Bareiss forward pass), with rational
// normalization at the end. Returns the pivot column list; zero rows dropped.
inline std::vector<int> rref(QMat& a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  std::vector<std::vector<Int>> m;
  m.reserve(a.size());
  for (const QVec& row : a) {
    Int l = 1;
    for (const Rational& v : row) l = boost::multiprecision::lcm(l, denominator(v));
    std::vector<Int> irow(cols);
    for (int j = 0; j < cols; ++j) irow[j] = numerator(row[j]) * (l / denominator(row[j]));
    m.push_back(std::move(irow));
  }
  std::vector<int> pivots = detail::bareiss_echelon(m);
  const int rank = static_cast<int>(pivots.size());
  QMat out(rank, QVec(cols, Rational(0)));
  for (int r = 0; r < rank; ++r)
    for (int j = 0; j < cols; ++j) out[r][j] = Rational(m[r][j]) / Rational(m[r][pivots[r]]);
  // Back-substitution to clear entries above each pivot.
  for (int r = rank - 1; r >= 0; --r)
    for (int i = 0; i < r; ++i) {
      Rational f = out[i][pivots[r]];
      if (f == 0) continue;
      for (int j = pivots[r]; j < cols; ++j) out[i][j] -= f * out[r][j];
    }
  a = std::move(out);
  return pivots;
}

inline int rank(QMat a) { return static_cast<int>(rref(a).size()); }

// Reduced echelon basis of {v : Av = 0}; deterministic for fixed input.
inline QMat nullspace(QMat a, int cols) {
  for (const QVec& row : a)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("nullspace: ragged matrix");
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

// Reduced-echelon basis of a rational vector space, grown one vector at a
// time. rows_ maps pivot column -> row (pivot entry 1, other pivots' columns
// cleared), so iteration order is echelon order.
class SpanBasis {
 public:
  SpanBasis(int ambient_dim, int cap, int n) : ambient_(ambient_dim), cap_(cap), n_(n) {}

  int ambient_dim() const { return ambient_; }
  int cap() const { return cap_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  QVec reduce(QVec v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (int j = p; j < ambient_; ++j) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const QVec& v) const {
    check_dim(v);
    QVec r = reduce(v);
    for (const Rational& c : r)
      if (c != 0) return false;
    return true;
  }

  // Returns true iff the span grew.
  bool insert(QVec v) {
    check_dim(v);
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Rational lead = v[p];
    for (int j = p; j < ambient_; ++j) v[j] /= lead;
    for (auto& [q, row] : rows_) {
      if (row[p] == 0) continue;
      Rational f = row[p];
      for (int j = p; j < ambient_; ++j) row[j] -= f * v[j];
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  const std::map<int, QVec>& rows() const { return rows_; }

 private:
  void check_dim(const QVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("SpanBasis: bad vector length");
  }
  int ambient_, cap_, n_;
  std::map<int, QVec> rows_;
};

}  // namespace bsw
