#include "symcubic/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "symcubic/errors.hpp"
#include "symcubic/modp.hpp"

namespace symcubic {

namespace {

// Unimodular row echelon over the first `pivot_cols` columns. Returns the
// number of pivot rows; they come first.
std::size_t echelonize(IntMatrix& rows, std::size_t pivot_cols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < pivot_cols && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const Integer q = rows[r][c] / rows[top][c];
        for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[top][j];
    }
    ++top;
  }
  return top;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t rank = echelonize(rows, rows.front().size());
  rows.resize(rank);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
  const std::size_t m = a.size();
  IntMatrix aug(ncols, IntVector(m + ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      if (a[r].size() != ncols) throw InvalidInput("ragged integer matrix");
      aug[i][r] = a[r][i];
    }
    aug[i][m + i] = 1;
  }
  const std::size_t rank = echelonize(aug, m);
  IntMatrix basis;
  for (std::size_t i = rank; i < ncols; ++i) basis.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end());
  return hermite_normal_form(std::move(basis));
}

IntMatrix to_integer_matrix(const MatrixQ& m) {
  IntMatrix out(m.rows(), IntVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_integer()) throw InvalidInput("matrix entry " + m(r, c).to_string() + " is not an integer");
      out[r][c] = m(r, c).numerator();
    }
  }
  return out;
}

MatrixQ to_rational_matrix(const IntMatrix& m, std::size_t ncols) {
  MatrixQ out(m.size(), ncols);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = Rational(m[r][c]);
  }
  return out;
}

IntegralLattice::IntegralLattice(MatrixQ gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidInput("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix must be symmetric");
  to_integer_matrix(gram_);
}

IntegralLattice IntegralLattice::from_integers(const std::vector<std::vector<long long>>& gram) {
  return IntegralLattice(MatrixQ::from_integers(gram));
}

IntegralLattice IntegralLattice::direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  MatrixQ g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  }
  return IntegralLattice(std::move(g));
}

namespace {

void require_endomorphism(const IntegralLattice& lattice, const MatrixQ& g) {
  if (g.rows() != lattice.rank() || g.cols() != lattice.rank()) {
    throw InvalidInput("isometry must be a square matrix of the lattice rank");
  }
  to_integer_matrix(g);
}

Sublattice restrict_to(const IntegralLattice& lattice, const IntMatrix& basis) {
  Sublattice s;
  s.basis = to_rational_matrix(basis, lattice.rank());
  s.gram = s.basis * lattice.gram() * s.basis.transpose();
  s.signature = symmetric_signature(s.gram);
  return s;
}

}  // namespace

IsometryCheck verify_isometry(const IntegralLattice& lattice, const MatrixQ& g, std::size_t order_cap) {
  require_endomorphism(lattice, g);
  if (!(g.transpose() * lattice.gram() * g == lattice.gram())) return {false, 0};
  const MatrixQ id = MatrixQ::identity(lattice.rank());
  MatrixQ power = g;
  for (std::size_t k = 1; k <= order_cap; ++k) {
    if (power == id) return {true, k};
    power = power * g;
  }
  throw SearchExhausted("isometry order exceeds cap " + std::to_string(order_cap));
}

Sublattice eigenlattice(const IntegralLattice& lattice, const MatrixQ& g, int sign) {
  require_endomorphism(lattice, g);
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  MatrixQ shifted = g;
  for (std::size_t i = 0; i < lattice.rank(); ++i) shifted(i, i) -= Rational(sign);
  return restrict_to(lattice, integer_kernel(to_integer_matrix(shifted), lattice.rank()));
}

namespace {

// Q(zeta_p) as Q[t] / Phi_p, elements stored as p - 1 coefficients.
class CyclotomicField {
 public:
  using Elem = std::vector<Rational>;

  explicit CyclotomicField(int p) : p_(p) {}

  Elem zero() const { return Elem(static_cast<std::size_t>(p_ - 1), Rational(0)); }
  Elem constant(const Rational& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
  }
  Elem root_power(int j) const {
    Elem full(static_cast<std::size_t>(p_), Rational(0));
    full[static_cast<std::size_t>(((j % p_) + p_) % p_)] = 1;
    return reduce(std::move(full));
  }
  static bool is_zero(const Elem& e) {
    return std::all_of(e.begin(), e.end(), [](const Rational& x) { return x.is_zero(); });
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem full(static_cast<std::size_t>(p_), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        full[(i + j) % static_cast<std::size_t>(p_)] += a[i] * b[j];
      }
    }
    return reduce(std::move(full));
  }
  Elem inverse(const Elem& a) const {
    // Solve a * x = 1 through the multiplication matrix.
    const std::size_t n = a.size();
    MatrixQ aug(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      Elem basis = zero();
      basis[j] = 1;
      const Elem col = mul(a, basis);
      for (std::size_t i = 0; i < n; ++i) aug(i, j) = col[i];
    }
    aug(0, n) = 1;
    const EchelonForm ef = row_echelon(aug);
    if (ef.pivots.size() != n || ef.pivots.back() == n) throw InvalidInput("zero has no inverse");
    Elem x = zero();
    for (std::size_t r = 0; r < n; ++r) x[ef.pivots[r]] = ef.reduced(r, n);
    return x;
  }

 private:
  // From Q[t]/(t^p - 1): subtract c_{p-1} * Phi_p.
  Elem reduce(Elem full) const {
    const Rational top = full.back();
    full.pop_back();
    if (!top.is_zero()) {
      for (auto& x : full) x -= top;
    }
    return full;
  }

  int p_;
};

using KMatrix = std::vector<std::vector<CyclotomicField::Elem>>;

// Right kernel basis over the cyclotomic field.
std::vector<std::vector<CyclotomicField::Elem>> kernel_over(const CyclotomicField& k, KMatrix m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < m.size(); ++c) {
    std::size_t r = top;
    while (r < m.size() && CyclotomicField::is_zero(m[r][c])) ++r;
    if (r == m.size()) continue;
    std::swap(m[top], m[r]);
    const auto inv = k.inverse(m[top][c]);
    for (auto& x : m[top]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == top || CyclotomicField::is_zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] = k.sub(m[i][j], k.mul(factor, m[top][j]));
    }
    pivots.push_back(c);
    ++top;
  }
  std::vector<std::vector<CyclotomicField::Elem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<CyclotomicField::Elem> v(ncols, k.zero());
    v[free] = k.constant(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.sub(k.zero(), m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CyclotomicEigenlattice cyclotomic_eigenlattice(const IntegralLattice& lattice, const MatrixQ& g, int p) {
  if (p < 3 || !is_prime(static_cast<std::uint32_t>(p))) throw InvalidInput("p must be an odd prime");
  const IsometryCheck check = verify_isometry(lattice, g);
  if (!check.ok) throw InvalidInput("matrix is not an isometry of the lattice");
  if (check.order % static_cast<std::size_t>(p) != 0) {
    throw InvalidInput(std::to_string(p) + " does not divide the isometry order " + std::to_string(check.order));
  }
  const std::size_t n = lattice.rank();
  MatrixQ phi = MatrixQ::identity(n);
  MatrixQ power = MatrixQ::identity(n);
  for (int i = 1; i < p; ++i) {
    power = power * g;
    phi = phi + power;
  }
  CyclotomicEigenlattice out;
  out.kernel = restrict_to(lattice, integer_kernel(to_integer_matrix(phi), n));

  const CyclotomicField k(p);
  out.isotropic = true;
  for (int j = 1; j < p; ++j) {
    const auto root = k.root_power(j);
    KMatrix m(n, std::vector<CyclotomicField::Elem>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = k.constant(g(r, c));
        if (r == c) m[r][c] = k.sub(m[r][c], root);
      }
    }
    const auto basis = kernel_over(k, std::move(m), n);
    out.eigenspace_dims.push_back(basis.size());
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        auto acc = k.zero();
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (lattice.gram()(a, b).is_zero()) continue;
            acc = k.add(acc, k.mul(k.constant(lattice.gram()(a, b)), k.mul(x[a], y[b])));
          }
        }
        if (!CyclotomicField::is_zero(acc)) out.isotropic = false;
      }
    }
  }
  return out;
}

std::vector<IntVector> isotropic_vectors(const IntegralLattice& lattice, int height) {
  if (height < 1) throw InvalidInput("height must be >= 1");
  const std::size_t n = lattice.rank();
  if (n == 0) return {};
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= 2.0 * height + 1;
  if (count > 5e8) throw InvalidInput("search box too large; lower the height");
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& e = lattice.gram()(i, j).numerator();
      if (!e.fits_slong_p()) throw InvalidInput("Gram entries too large for enumeration");
      g[i][j] = e.get_si();
    }
  }
  std::vector<IntVector> out;
  std::vector<long long> v(n, -height);
  while (true) {
    // First nonzero entry positive.
    const auto lead = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (lead != v.end() && *lead > 0) {
      long long q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        long long row = 0;
        for (std::size_t j = 0; j < n; ++j) row += g[i][j] * v[j];
        q += v[i] * row;
      }
      if (q == 0) {
        long long d = 0;
        for (long long x : v) d = std::gcd(d, x);
        if (d == 1) {
          IntVector w;
          for (long long x : v) w.emplace_back(static_cast<long>(x));
          out.push_back(std::move(w));
        }
      }
    }
    std::size_t i = n;
    while (i > 0 && v[i - 1] == height) {
      v[i - 1] = -height;
      --i;
    }
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

namespace {

Subspace boundary_cut(const Subspace& s, std::size_t expected_dim, const std::vector<VectorQ>& arrangement,
                      const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  if (s.ambient_dim() != n) throw InvalidInput("subspace does not live in the lattice");
  if (s.dim() != expected_dim) throw InvalidInput("expected a subspace of dimension " + std::to_string(expected_dim));
  if (!s.is_isotropic(lattice.gram())) throw InvalidInput("subspace is not isotropic");
  std::vector<VectorQ> normals = s.vectors();
  for (const auto& h : arrangement) {
    if (h.size() != n) throw InvalidInput("arrangement normal has the wrong length");
    const bool contains = std::all_of(normals.begin(), normals.begin() + static_cast<std::ptrdiff_t>(expected_dim),
                                      [&](const VectorQ& e) { return lattice.pair(h, e).is_zero(); });
    if (contains) normals.push_back(h);
  }
  return Subspace::span(normals, n).orthogonal_complement(lattice.gram());
}

}  // namespace

Subspace boundary_subspace_j(const Subspace& line, const std::vector<VectorQ>& arrangement,
                             const IntegralLattice& lattice) {
  return boundary_cut(line, 1, arrangement, lattice);
}

Subspace boundary_subspace_vsigma(const Subspace& plane, const std::vector<VectorQ>& arrangement,
                                  const IntegralLattice& lattice) {
  return boundary_cut(plane, 2, arrangement, lattice);
}

std::optional<Subspace> cm_line_to_plane(const VectorQ& e, const VectorQ& f, const Integer& d,
                                         const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  if (e.size() != n || f.size() != n) throw InvalidInput("vectors must match the lattice rank");
  if (d < 1) throw InvalidInput("D must be a positive integer");
  Subspace plane = Subspace::span({e, f}, n);
  if (plane.dim() != 2) throw InvalidInput("e and f must be independent");
  if (!lattice.pair(e, e).is_zero() || !lattice.pair(f, f).is_zero() || !lattice.pair(e, f).is_zero()) {
    return std::nullopt;
  }
  return plane;
}

}  // namespace symcubic
