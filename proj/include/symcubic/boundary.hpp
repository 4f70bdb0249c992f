#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symcubic/polynomial.hpp"
#include "symcubic/symmetry.hpp"

namespace symcubic {

/// The two degenerate stabilizers: the determinantal one (GL_3 acting on
/// Sym^2, character det^4) and the chordal one (GL_2 x scalars acting on
/// Sym^4 plus a line, character u^3).
enum class FactorTarget { determinantal, chordal };
std::string to_string(FactorTarget t);

/// An order-M element of one of the stabilizer groups whose image in PGL_6
/// matches the generator power rho^power, character included.
///
/// determinantal: exponents = (t1, t2, t3), weights shift + t_i + t_j (i <= j),
///   character exponent -3 shift - 2 (t1 + t2 + t3).
/// chordal: exponents = (s1, s2, u), weights shift + {4s1, 3s1+s2, 2s1+2s2,
///   s1+3s2, 4s2, u}, character exponent -3 shift - 3u, subject to
///   3 (2 (s1 + s2) - u) == 0 mod M.
struct FactorizationWitness {
  FactorTarget target = FactorTarget::determinantal;
  int modulus = 0;
  int shift = 0;
  std::array<int, 3> exponents{};
  int power = 1;
};

struct WitnessImage {
  std::array<int, kVars> weights{};  // in Z/M, unsorted
  int character = 0;                 // in Z/M
  bool admissible = true;            // chordal det^2/u constraint
};

/// 6p for odd p, 12 for p = 2.
int search_modulus(int p);
WitnessImage witness_image(const FactorizationWitness& w);
/// Re-expands the witness and checks it against sym from scratch.
bool replay_witness(const SymmetryType& sym, const FactorizationWitness& w);

/// Lexicographically first witness in (shift, e1, e2, e3), or nullopt after
/// the exhaustive search. Throws InvalidInput unless the order is prime.
std::optional<FactorizationWitness> g1_factorization(const SymmetryType& sym);
std::optional<FactorizationWitness> g2_factorization(const SymmetryType& sym);

struct BBVerdict {
  bool is_bb = true;
  std::vector<FactorizationWitness> witnesses;
};
BBVerdict bb_verdict(const SymmetryType& sym);

/// det [[x0, x1, x2 + 2a x5], [x1, x2 - a x5, x3], [x2 + 2a x5, x3, x4]] + b x5^3.
Polynomial chi_form(const Rational& a, const Rational& b);

/// Images of x0..x5 under the rank-one parametrization, quadrics in (u, v, w).
std::vector<Polynomial> veronese_parametrization();
/// True when g and all its partials vanish identically on the parametrization.
bool vanishes_on_veronese(const Polynomial& g);
bool verify_veronese_singularity();

}  // namespace symcubic
