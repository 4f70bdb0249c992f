#include "symcubic/moduli.hpp"

#include <algorithm>
#include <set>

#include "symcubic/errors.hpp"
#include "symcubic/linalg.hpp"

namespace symcubic {

std::size_t orbit_rank(const Polynomial& f, const SymmetryType& sym, const RankOptions& options) {
  require_cubic_form(f);
  const SymmetryType s = sym.normalized();
  require_in_eigenspace(f, s);
  if (smoothness_certificate(f, options).verdict != Verdict::smooth) {
    throw InvalidInput("orbit rank needs a smooth form");
  }
  const MonomialIndex index(monomials_of_degree(kVars, kCubicDegree));
  const auto grad = f.gradient();
  std::vector<SparseRowQ> rows;
  for (std::size_t i = 0; i < kVars; ++i) {
    for (std::size_t j = 0; j < kVars; ++j) {
      if (s.weights[i] != s.weights[j] || grad[i].is_zero()) continue;
      const Polynomial image = Polynomial::variable(kVars, j) * grad[i];
      SparseRowQ row;
      for (const auto& [m, c] : image.terms()) row.emplace_back(index.find(m), c);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return sparse_rank(std::move(rows));
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

SampledMember require_member(const SymmetryType& sym, std::uint64_t seed, const SamplingOptions& sampling,
                             const RankOptions& options) {
  auto member = sample_smooth_member(sym, seed, sampling, options);
  if (!member) {
    throw SearchExhausted("no smooth member found for " + sym.to_string() + " after " +
                          std::to_string(sampling.max_attempts) + " draws (probabilistic)");
  }
  return std::move(*member);
}

std::uint64_t nth_seed(std::uint64_t seed, int i) { return i == 0 ? seed : mix(seed + static_cast<std::uint64_t>(i)); }

}  // namespace

ModuliDimension moduli_dimension(const SymmetryType& sym, std::uint64_t seed, const SamplingOptions& sampling,
                                 const RankOptions& options) {
  const SymmetryType s = sym.normalized();
  if (!quasismooth_screen(s)) throw SearchExhausted("no smooth member: " + s.to_string() + " fails the screen");
  ModuliDimension out;
  out.dim_v = eigenspace_basis(s).monomials.size();
  for (int i = 0; i < kModuliSeeds; ++i) {
    const std::uint64_t sd = nth_seed(seed, i);
    const SampledMember member = require_member(s, sd, sampling, options);
    const std::size_t rank = orbit_rank(member.form, s, options);
    if (i > 0 && rank != out.orbit_rank) {
      throw VerificationFailure("orbit rank differs between seeds for " + s.to_string() + ": " +
                                std::to_string(out.orbit_rank) + " vs " + std::to_string(rank));
    }
    out.orbit_rank = rank;
    out.seeds_used.push_back(sd);
  }
  out.n = out.dim_v - out.orbit_rank;
  return out;
}

std::string DomainDescriptor::to_string() const {
  switch (kind) {
    case DomainKind::point:
      return "Point";
    case DomainKind::ball:
      return "Ball(" + std::to_string(dim) + ")";
    case DomainKind::type_iv:
      return "TypeIV(" + std::to_string(dim) + ")";
  }
  return "Point";
}

DomainDescriptor classify_domain(const HodgeEigenData& hodge) {
  const NPrime np = nprime(hodge);
  if (np.n_prime == 0) return {DomainKind::point, 0};
  return {hodge.zeta_real() ? DomainKind::type_iv : DomainKind::ball, np.n_prime};
}

ModuliReport analyze(const SymmetryType& sym, std::uint64_t seed, const SamplingOptions& sampling,
                     const RankOptions& options) {
  ModuliReport r;
  r.input = sym.normalized();
  r.sym = canonicalize(r.input);
  if (r.sym.acts_trivially() && r.sym.order > 1) {
    throw InvalidInput("action is trivial on projective space; use order 1");
  }
  const ModuliDimension dim = moduli_dimension(r.sym, seed, sampling, options);
  SampledMember member = require_member(r.sym, seed, sampling, options);
  r.dim_v = dim.dim_v;
  r.orbit_rank = dim.orbit_rank;
  r.n = dim.n;
  r.seeds_used = dim.seeds_used;
  r.hodge = hodge_from_profile(member.profile);
  r.n_prime = nprime(r.hodge);
  r.domain = classify_domain(r.hodge);
  r.member = std::move(member.form);
  r.certificate = std::move(member.certificate);
  r.profile = std::move(member.profile);
  if (is_prime(static_cast<std::uint32_t>(r.sym.order))) r.bb = bb_verdict(r.sym);
  if (r.n != r.n_prime.n_prime) {
    throw VerificationFailure("n = " + std::to_string(r.n) + " but n' = " + std::to_string(r.n_prime.n_prime) +
                              " for " + r.sym.to_string());
  }
  return r;
}

const std::vector<ReferenceType>& reference_types() {
  static const std::vector<ReferenceType> table = {
      {"T2_1", {2, {0, 0, 0, 0, 0, 1}, 0}, 14, true},
      {"T2_2", {2, {0, 0, 0, 0, 1, 1}, 0}, 12, false},
      {"T2_3", {2, {0, 0, 0, 1, 1, 1}, 0}, 10, true},
      {"T3_1", {3, {0, 0, 0, 0, 0, 1}, 0}, 10, std::nullopt},
      {"T3_2", {3, {0, 0, 0, 0, 1, 1}, 0}, 4, true},
      {"T3_3", {3, {0, 0, 0, 0, 1, 2}, 0}, 8, true},
      {"T3_4", {3, {0, 0, 0, 1, 1, 1}, 0}, 2, true},
      {"T3_5", {3, {0, 0, 0, 1, 1, 2}, 0}, 7, false},
      {"T3_6", {3, {0, 0, 1, 1, 2, 2}, 0}, 8, false},
      {"T3_7", {3, {0, 0, 1, 1, 2, 2}, 2}, 6, true},
      {"T5_1", {5, {0, 0, 1, 2, 3, 4}, 0}, 4, false},
      {"T7_1", {7, {1, 2, 3, 4, 5, 6}, 0}, 2, false},
      {"T11_1", {11, {0, 1, 3, 4, 5, 9}, 0}, 0, true},
  };
  return table;
}

std::optional<ReferenceType> find_reference(const SymmetryType& sym) {
  const SymmetryType c = canonicalize(sym);
  for (const auto& ref : reference_types()) {
    if (canonicalize(ref.sym) == c) return ref;
  }
  return std::nullopt;
}

std::uint64_t class_seed(std::uint64_t seed, const SymmetryType& canonical) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ static_cast<std::uint64_t>(canonical.order));
  for (int m : canonical.weights) h = mix(h ^ static_cast<std::uint64_t>(m));
  return mix(h ^ static_cast<std::uint64_t>(canonical.lambda_exp));
}

namespace {

void collect_classes(int order, std::array<int, kVars>& weights, std::size_t pos, int lo,
                     std::set<SymmetryType>& out) {
  if (pos == kVars) {
    for (int w = 0; w < order; ++w) {
      const SymmetryType s{order, weights, w};
      if (s.acts_trivially()) continue;
      out.insert(canonicalize(s));
    }
    return;
  }
  for (int v = lo; v < order; ++v) {
    weights[pos] = v;
    collect_classes(order, weights, pos + 1, v, out);
  }
}

}  // namespace

std::vector<ClassificationRow> classify_all(const std::vector<int>& orders, std::uint64_t seed,
                                            const SamplingOptions& sampling, const RankOptions& options) {
  std::set<SymmetryType> classes;
  for (int p : orders) {
    if (p < 2) throw InvalidInput("orders must be at least 2");
    // A weight shift makes the first weight zero.
    std::array<int, kVars> weights{};
    collect_classes(p, weights, 1, 0, classes);
  }
  std::vector<ClassificationRow> rows;
  for (const auto& sym : classes) {
    if (!quasismooth_screen(sym)) continue;
    const std::uint64_t sd = class_seed(seed, sym);
    if (!sample_smooth_member(sym, sd, sampling, options)) continue;
    ClassificationRow row;
    row.report = analyze(sym, sd, sampling, options);
    if (const auto ref = find_reference(sym)) {
      row.label = ref->label;
      row.reference_bb = ref->bb;
      if (!ref->bb) {
        row.flag = "no reference Baily-Borel verdict; computed value reported";
      } else if (*ref->bb != row.report.bb.is_bb) {
        row.flag = "computed Baily-Borel verdict disagrees with the reference";
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace symcubic
