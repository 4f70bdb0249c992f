#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "symcubic/monomial.hpp"

namespace symcubic {

inline constexpr std::size_t kVars = 6;
inline constexpr int kCubicDegree = 3;

/// Diagonal cyclic action on C^6 with a character: the generator acts by
/// x_i -> omega^{m_i} x_i (omega = exp(2 pi i / order)) and the invariant
/// forms F satisfy F(rho^{-1} x) = omega^{lambda_exp} F(x).
///
/// The scalar subgroup is handled projectively: shifting every weight by c and
/// lambda_exp by -3c describes the same family of cubics.
struct SymmetryType {
  int order = 1;
  std::array<int, kVars> weights{};
  int lambda_exp = 0;

  /// Reduces weights and lambda_exp into [0, order). Throws InvalidInput for
  /// order < 1.
  SymmetryType normalized() const;
  /// True when the projective action is trivial (all weights congruent).
  bool acts_trivially() const;
  std::string to_string() const;

  friend auto operator<=>(const SymmetryType&, const SymmetryType&) = default;
};

/// <m, alpha> mod order.
int monomial_weight(const SymmetryType& sym, const Monomial& m);

/// Basis of the lambda-eigenspace of Sym^d: monomials with
/// <m, alpha> == -lambda_exp (mod order), in graded-lex order.
struct EigenspaceBasis {
  SymmetryType sym;
  int degree = 0;
  std::vector<Monomial> monomials;
};

EigenspaceBasis eigenspace_basis(const SymmetryType& sym, int d = kCubicDegree);

/// Lexicographically minimal (sorted weights, lambda_exp) over weight shifts,
/// generator powers coprime to the order and coordinate permutations.
SymmetryType canonicalize(const SymmetryType& sym, int d = kCubicDegree);

/// Dimension of the trace-zero block-diagonal centralizer: sum b_i^2 - 1 over
/// weight multiplicities b_i.
int centralizer_dimension(const SymmetryType& sym);

/// Multiplicities of the distinct weight values, in order of first weight value.
std::vector<int> weight_blocks(const SymmetryType& sym);

/// Necessary condition for a smooth generic member: every variable x_i occurs
/// in the eigenspace as x_i^3 or x_i^2 x_j.
bool quasismooth_screen(const SymmetryType& sym);

int mod_floor(long long a, int n);
int gcd_int(int a, int b);

}  // namespace symcubic
