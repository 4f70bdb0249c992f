#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcubic/modp.hpp"
#include "symcubic/polynomial.hpp"
#include "symcubic/symmetry.hpp"

namespace symcubic {

/// How ranks are computed. Mod-p ranks are lower bounds for rational ranks, so
/// a full mod-p rank is a certificate; `exact` switches to rational elimination.
struct RankOptions {
  std::uint32_t modulus = kDefaultPrime;
  bool exact = false;
  /// On a mod-p deficiency, retry at kSecondPrime before giving up.
  bool recheck_second_prime = true;
};

/// Socle degree of the Jacobian ring of a smooth cubic fourfold.
inline constexpr int kSocleDegree = 6;
/// Graded pieces R_0 .. R_7 are tracked.
inline constexpr int kTrackedDegrees = 8;

enum class Verdict { smooth, singular, inconclusive };
std::string to_string(Verdict v);

struct SmoothnessCertificate {
  Verdict verdict = Verdict::inconclusive;
  /// Primes whose ranks were computed; empty when only exact ranks were used.
  std::vector<std::uint32_t> primes_used;
  bool exact = false;
  /// dim R_7 as computed by the last (most trusted) rank pass.
  std::size_t r7_dimension = 0;
};

/// Graded dimensions of R = Q[x_0..x_5] / (dF/dx_i), and, when a symmetry is
/// supplied, the split of each piece by monomial weight <m, beta> mod N.
struct JacobianProfile {
  std::array<std::size_t, kTrackedDegrees> hilbert{};
  std::optional<SymmetryType> sym;
  std::array<std::map<int, std::size_t>, kTrackedDegrees> by_weight;
  std::uint32_t modulus = 0;  // 0 when exact
};

/// Throws InvalidInput unless F is a nonzero cubic in 6 variables.
void require_cubic_form(const Polynomial& f);

/// Throws InvalidInput unless every monomial of F has weight -lambda_exp.
void require_in_eigenspace(const Polynomial& f, const SymmetryType& sym);

/// dim R_k for k = 0..7 (rank of Sym^{k-2} (x) <dF> -> Sym^k).
JacobianProfile hilbert_function(const Polynomial& f, const std::optional<SymmetryType>& sym,
                                 const RankOptions& options = {});

/// dim R_k for a single degree k (any k >= 0), same conventions.
std::size_t jacobian_piece_dimension(const Polynomial& f, int k, const RankOptions& options = {});

SmoothnessCertificate smoothness_certificate(const Polynomial& f, const RankOptions& options = {});

/// Perfect pairing R_t x R_{6-t} -> R_6 seen on weight blocks:
/// dim R_t^{(u)} == dim R_{6-t}^{(s-u)} with s the socle weight.
bool gorenstein_duality_holds(const JacobianProfile& profile);

struct HodgeNumbers {
  std::size_t h31 = 0;
  std::size_t h22 = 0;
  std::size_t h13 = 0;
  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

/// Character decomposition of primitive H^4. Keys are exponents t in Z/N with
/// the character a -> omega^t; zeta_exp is the character on H^{3,1}.
/// The square of the hyperplane class (trivial character) is not included.
struct HodgeEigenData {
  int order = 1;
  std::map<int, HodgeNumbers> by_character;
  int zeta_exp = 0;

  HodgeNumbers at(int t) const;
  bool zeta_real() const { return zeta_exp == 0 || 2 * zeta_exp == order; }
};

/// Pullback convention: classes of R_{3q-3} of weight u land in h^{4-q,q} at
/// exponent u + sum(m) + (q+1) w.
int residue_character(const SymmetryType& sym, int q, int monomial_weight);

HodgeEigenData hodge_from_profile(const JacobianProfile& profile);
HodgeEigenData hodge_eigen(const Polynomial& f, const SymmetryType& sym,
                           const RankOptions& options = {});

/// n' and the signature of the Hermitian form on the zeta-eigenspace.
struct NPrime {
  std::size_t n_prime = 0;
  std::size_t sig_pos = 0;
  std::size_t sig_neg = 0;
};
NPrime nprime(const HodgeEigenData& hodge);

/// "1", "-1" or "exp(2*pi*i*t/N)" in lowest terms.
std::string zeta_string(int zeta_exp, int order);

struct SamplingOptions {
  int coefficient_bound = 20;
  int max_attempts = 8;
};

/// Uniform integer coefficients in [-bound, bound] on the eigenspace basis.
/// The stream depends only on (seed, attempt).
Polynomial random_member(const EigenspaceBasis& basis, std::uint64_t seed, int attempt,
                         int coefficient_bound);

struct SampledMember {
  Polynomial form;
  int attempts = 0;
  JacobianProfile profile;
  SmoothnessCertificate certificate;
};

/// Draws members until one is certified smooth; nullopt after max_attempts.
std::optional<SampledMember> sample_smooth_member(const SymmetryType& sym, std::uint64_t seed,
                                                  const SamplingOptions& sampling = {},
                                                  const RankOptions& options = {});

SmoothnessCertificate certificate_from_profile(const JacobianProfile& profile);

}  // namespace symcubic
