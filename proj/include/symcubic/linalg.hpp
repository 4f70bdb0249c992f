#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symcubic/rational.hpp"

namespace symcubic {

using VectorQ = std::vector<Rational>;

/// Dense row-major rational matrix.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);
  /// Rows must share a common length.
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);
  static MatrixQ from_integers(const std::vector<std::vector<long long>>& rows);
  static MatrixQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  VectorQ row(std::size_t r) const;
  std::vector<VectorQ> row_list() const;
  MatrixQ transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

VectorQ operator*(const MatrixQ& m, const VectorQ& v);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
struct EchelonForm {
  MatrixQ reduced;                 // only the nonzero rows
  std::vector<std::size_t> pivots;
};
EchelonForm row_echelon(const MatrixQ& m);

std::size_t matrix_rank(const MatrixQ& m);

/// Inertia of a symmetric form.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact congruence diagonalization. Throws InvalidInput if G is not symmetric.
Inertia symmetric_signature(const MatrixQ& gram);

/// Bilinear pairing x^T G y.
Rational pairing(const MatrixQ& gram, const VectorQ& x, const VectorQ& y);

/// Linear subspace of Q^n, stored as a basis in reduced row echelon form, so
/// equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(const std::vector<VectorQ>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  std::vector<VectorQ> vectors() const { return basis_.row_list(); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// {x : x^T G s = 0 for all s in this}.
  Subspace orthogonal_complement(const MatrixQ& gram) const;
  /// True when x^T G y vanishes on all pairs from this subspace.
  bool is_isotropic(const MatrixQ& gram) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  MatrixQ basis_;
};

/// Right kernel {x : M x = 0}.
Subspace kernel(const MatrixQ& m);

/// Sparse row for exact elimination: (column, value), sorted by column.
using SparseRowQ = std::vector<std::pair<std::size_t, Rational>>;

/// Exact rank by incremental sparse echelon insertion. Cheap for the nearly
/// monomial matrices that arise from sparse forms.
std::size_t sparse_rank(std::vector<SparseRowQ> rows);

}  // namespace symcubic
