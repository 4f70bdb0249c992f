#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcubic/boundary.hpp"
#include "symcubic/jacobian.hpp"
#include "symcubic/polynomial.hpp"
#include "symcubic/symmetry.hpp"

namespace symcubic {

/// Rank of the tangent map of the block-diagonal centralizer (scalars
/// included) at F: span{x_j dF/dx_i : m_i == m_j}. Exact.
/// Throws InvalidInput if F is outside the eigenspace or not certified smooth.
std::size_t orbit_rank(const Polynomial& f, const SymmetryType& sym,
                       const RankOptions& options = {});

struct ModuliDimension {
  std::size_t dim_v = 0;
  std::size_t orbit_rank = 0;
  std::size_t n = 0;
  std::vector<std::uint64_t> seeds_used;
};

/// Number of independent generic members to compare.
inline constexpr int kModuliSeeds = 2;

/// dim V - orbit rank at kModuliSeeds independent smooth members. Throws
/// VerificationFailure if they disagree, SearchExhausted if no smooth member
/// is found.
ModuliDimension moduli_dimension(const SymmetryType& sym, std::uint64_t seed,
                                 const SamplingOptions& sampling = {},
                                 const RankOptions& options = {});

enum class DomainKind { point, ball, type_iv };

struct DomainDescriptor {
  DomainKind kind = DomainKind::point;
  std::size_t dim = 0;
  std::string to_string() const;
  friend bool operator==(const DomainDescriptor&, const DomainDescriptor&) = default;
};

DomainDescriptor classify_domain(const HodgeEigenData& hodge);

struct ModuliReport {
  SymmetryType input;
  SymmetryType sym;  // canonical
  std::size_t dim_v = 0;
  std::size_t orbit_rank = 0;
  std::size_t n = 0;
  HodgeEigenData hodge;
  NPrime n_prime;
  DomainDescriptor domain;
  BBVerdict bb;
  Polynomial member;
  SmoothnessCertificate certificate;
  JacobianProfile profile;
  std::vector<std::uint64_t> seeds_used;
};

/// Full pipeline on the canonical representative. Throws VerificationFailure
/// when n and n' disagree.
ModuliReport analyze(const SymmetryType& sym, std::uint64_t seed,
                     const SamplingOptions& sampling = {}, const RankOptions& options = {});

/// Entries of the known prime-order classification, with the Baily-Borel
/// verdict where one is recorded.
struct ReferenceType {
  std::string label;
  SymmetryType sym;
  std::size_t n = 0;
  std::optional<bool> bb;
};
const std::vector<ReferenceType>& reference_types();
/// Reference entry whose canonical form equals canonicalize(sym).
std::optional<ReferenceType> find_reference(const SymmetryType& sym);

struct ClassificationRow {
  ModuliReport report;
  std::optional<std::string> label;
  std::optional<bool> reference_bb;
  /// Set when no reference verdict exists or it disagrees with the computed one.
  std::optional<std::string> flag;
};

/// All canonical (weights, lambda) classes of each order with a smooth
/// generic member, sorted by canonical type.
std::vector<ClassificationRow> classify_all(const std::vector<int>& orders, std::uint64_t seed,
                                            const SamplingOptions& sampling = {},
                                            const RankOptions& options = {});

/// Seed used for a class inside classify_all.
std::uint64_t class_seed(std::uint64_t seed, const SymmetryType& canonical);

}  // namespace symcubic
