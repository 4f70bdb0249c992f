#include "symcubic/linalg.hpp"

#include <algorithm>
#include <map>

#include "symcubic/errors.hpp"

namespace symcubic {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

MatrixQ MatrixQ::from_integers(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(rows[r][c]));
  }
  return m;
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

VectorQ MatrixQ::row(std::size_t r) const {
  return VectorQ(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<VectorQ> MatrixQ::row_list() const {
  std::vector<VectorQ> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool MatrixQ::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
  MatrixQ out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum dimension mismatch");
  MatrixQ out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference dimension mismatch");
  MatrixQ out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

VectorQ operator*(const MatrixQ& m, const VectorQ& v) {
  if (v.size() != m.cols()) throw InvalidInput("matrix-vector dimension mismatch");
  VectorQ out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

EchelonForm row_echelon(const MatrixQ& input) {
  MatrixQ m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  MatrixQ reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t matrix_rank(const MatrixQ& m) { return row_echelon(m).pivots.size(); }

Inertia symmetric_signature(const MatrixQ& gram) {
  if (!gram.is_symmetric()) throw InvalidInput("signature requires a symmetric matrix");
  MatrixQ a = gram;
  const std::size_t n = a.rows();
  Inertia out;
  // Symmetric elimination: each step applies the same operation to rows and
  // columns, so the diagonal entries collected are congruent to G.
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !a(i, i).is_zero()) {
        k = i;
        break;
      }
    }
    if (k == n) {
      // All remaining diagonals vanish: look for an off-diagonal entry and
      // replace e_i by e_i + e_j, which makes a(i, i) = 2 a(i, j) != 0.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && !done[j] && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      k = pi;
    }
    const Rational d = a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / d;
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    done[k] = true;
    if (d.sign() > 0) {
      ++out.pos;
    } else {
      ++out.neg;
    }
  }
  out.zero = n - out.pos - out.neg;
  return out;
}

Rational pairing(const MatrixQ& gram, const VectorQ& x, const VectorQ& y) {
  const VectorQ gy = gram * y;
  if (x.size() != gy.size()) throw InvalidInput("pairing dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !gy[i].is_zero()) s += x[i] * gy[i];
  }
  return s;
}

Subspace Subspace::span(const std::vector<VectorQ>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  s.basis_ = row_echelon(MatrixQ::from_rows(vectors, ambient)).reduced;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = MatrixQ::identity(ambient);
  return s;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector dimension does not match subspace");
  std::vector<VectorQ> rows = vectors();
  rows.push_back(v);
  return matrix_rank(MatrixQ::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspace ambient dimension mismatch");
  return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspace ambient dimension mismatch");
  std::vector<VectorQ> rows = vectors();
  for (auto& v : other.vectors()) rows.push_back(std::move(v));
  return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspace ambient dimension mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  // Solve a^T A = b^T B via the kernel of [A^T | -B^T].
  const std::size_t k1 = dim();
  const std::size_t k2 = other.dim();
  MatrixQ stacked(ambient_, k1 + k2);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t c = 0; c < ambient_; ++c) stacked(c, i) = basis_(i, c);
  }
  for (std::size_t j = 0; j < k2; ++j) {
    for (std::size_t c = 0; c < ambient_; ++c) stacked(c, k1 + j) = -other.basis_(j, c);
  }
  const Subspace coeffs = kernel(stacked);
  std::vector<VectorQ> out;
  for (const auto& coef : coeffs.vectors()) {
    VectorQ v(ambient_, Rational(0));
    for (std::size_t i = 0; i < k1; ++i) {
      if (coef[i].is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c) v[c] += coef[i] * basis_(i, c);
    }
    out.push_back(std::move(v));
  }
  return span(out, ambient_);
}

Subspace Subspace::orthogonal_complement(const MatrixQ& gram) const {
  if (gram.rows() != ambient_ || gram.cols() != ambient_) {
    throw InvalidInput("Gram matrix does not match subspace ambient dimension");
  }
  if (dim() == 0) return whole(ambient_);
  return kernel(basis_ * gram);
}

bool Subspace::is_isotropic(const MatrixQ& gram) const {
  const auto vs = vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      if (!pairing(gram, vs[i], vs[j]).is_zero()) return false;
    }
  }
  return true;
}

Subspace kernel(const MatrixQ& m) {
  const std::size_t n = m.cols();
  const EchelonForm ef = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ef.pivots) is_pivot[c] = true;
  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(n, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

namespace {

// row <- row - factor * pivot, both sorted by column.
SparseRowQ axpy(const SparseRowQ& row, const Rational& factor, const SparseRowQ& pivot) {
  SparseRowQ out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRowQ> rows) {
  std::map<std::size_t, SparseRowQ> pivots;  // leading column -> monic row
  // Sparse rows first keeps fill-in low.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRowQ& a, const SparseRowQ& b) { return a.size() < b.size(); });
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second.is_zero(); }),
              row.end());
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, row.front().second, it->second);
    }
    if (row.empty()) continue;
    const Rational inv = Rational(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

}  // namespace symcubic
