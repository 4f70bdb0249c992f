#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symcubic/linalg.hpp"
#include "symcubic/rational.hpp"

namespace symcubic {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row Hermite normal form: positive pivots, entries above each pivot reduced
/// into [0, pivot), zero rows dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Saturated basis (in Hermite normal form) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Throws InvalidInput if some entry is not an integer.
IntMatrix to_integer_matrix(const MatrixQ& m);
MatrixQ to_rational_matrix(const IntMatrix& m, std::size_t ncols);

class IntegralLattice {
 public:
  /// Throws InvalidInput unless gram is square, symmetric and integral.
  explicit IntegralLattice(MatrixQ gram);
  static IntegralLattice from_integers(const std::vector<std::vector<long long>>& gram);
  static IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

  const MatrixQ& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  Inertia signature() const { return symmetric_signature(gram_); }
  Rational pair(const VectorQ& x, const VectorQ& y) const { return pairing(gram_, x, y); }

 private:
  MatrixQ gram_;
};

struct IsometryCheck {
  bool ok = false;
  std::size_t order = 0;  // 0 when not an isometry
};

inline constexpr std::size_t kDefaultOrderCap = 1000;

/// g^T G g == G and the multiplicative order of g. Throws InvalidInput on
/// shape mismatch or non-integral g, SearchExhausted past the cap.
IsometryCheck verify_isometry(const IntegralLattice& lattice, const MatrixQ& g,
                              std::size_t order_cap = kDefaultOrderCap);

struct Sublattice {
  MatrixQ basis;  // integral rows, Hermite normal form
  MatrixQ gram;   // restricted form
  Inertia signature;
  std::size_t rank() const { return basis.rows(); }
};

/// Primitive sublattice where g acts by sign (+1 or -1).
Sublattice eigenlattice(const IntegralLattice& lattice, const MatrixQ& g, int sign);

struct CyclotomicEigenlattice {
  Sublattice kernel;  // ker Phi_p(g)
  /// Dimension over Q(zeta_p) of each eigenspace of g for zeta_p^j, j = 1..p-1.
  std::vector<std::size_t> eigenspace_dims;
  /// phi(x, y) = 0 for all x, y in every such eigenspace.
  bool isotropic = false;
};

/// Throws InvalidInput unless p is an odd prime dividing the order of g.
CyclotomicEigenlattice cyclotomic_eigenlattice(const IntegralLattice& lattice, const MatrixQ& g, int p);

/// Primitive v with v^T G v = 0 and |v_i| <= height, first nonzero entry
/// positive, in lexicographic order.
std::vector<IntVector> isotropic_vectors(const IntegralLattice& lattice, int height);

/// Hyperplanes are given by normals h and cut out as {x : phi(h, x) = 0}.
/// j(I): intersection of the hyperplanes containing the isotropic line I, and I^perp.
Subspace boundary_subspace_j(const Subspace& line, const std::vector<VectorQ>& arrangement,
                             const IntegralLattice& lattice);
/// V_sigma: intersection of the hyperplanes containing the isotropic plane J, and J^perp.
Subspace boundary_subspace_vsigma(const Subspace& plane, const std::vector<VectorQ>& arrangement,
                                  const IntegralLattice& lattice);

/// <e, f> when e + sqrt(-d) f spans an isotropic line orthogonal to its
/// conjugate, i.e. phi(e,e) = phi(f,f) = phi(e,f) = 0. Throws InvalidInput if
/// e and f are dependent or d < 1.
std::optional<Subspace> cm_line_to_plane(const VectorQ& e, const VectorQ& f, const Integer& d,
                                         const IntegralLattice& lattice);

}  // namespace symcubic
