#include <gtest/gtest.h>

#include <algorithm>

#include "symcubic/errors.hpp"
#include "symcubic/moduli.hpp"

using namespace symcubic;

namespace {

const SymmetryType kT21{2, {0, 0, 0, 0, 0, 1}, 0};
const SymmetryType kT31{3, {0, 0, 0, 0, 0, 1}, 0};
const SymmetryType kT35{3, {0, 0, 0, 1, 1, 2}, 0};
const SymmetryType kT37{3, {0, 0, 1, 1, 2, 2}, 2};
const SymmetryType kT51{5, {0, 0, 1, 2, 3, 4}, 0};
const SymmetryType kT111{11, {0, 1, 3, 4, 5, 9}, 0};

Polynomial fermat() {
  Polynomial f(6, 3);
  for (std::size_t i = 0; i < 6; ++i) f += Polynomial::variable(6, i).pow(3);
  return f;
}

}  // namespace

TEST(OrbitRank, Examples) {
  EXPECT_EQ(orbit_rank(sample_smooth_member(kT21, 8)->form, kT21), 26u);
  EXPECT_EQ(orbit_rank(sample_smooth_member(kT111, 8)->form, kT111), 6u);
  EXPECT_EQ(orbit_rank(fermat(), {1, {0, 0, 0, 0, 0, 0}, 0}), 36u);
}

TEST(OrbitRank, BoundedByCentralizer) {
  for (const auto& ref : reference_types()) {
    const auto member = sample_smooth_member(ref.sym, 21);
    ASSERT_TRUE(member);
    const std::size_t r = orbit_rank(member->form, ref.sym);
    EXPECT_LE(r, static_cast<std::size_t>(centralizer_dimension(ref.sym) + 1)) << ref.label;
    EXPECT_LT(r, eigenspace_basis(ref.sym).monomials.size() + 1) << ref.label;
  }
}

TEST(OrbitRank, RejectsSingularForm) {
  Polynomial cone(6, 3);
  for (std::size_t i = 0; i < 5; ++i) cone += Polynomial::variable(6, i).pow(3);
  EXPECT_THROW(orbit_rank(cone, {1, {0, 0, 0, 0, 0, 0}, 0}), InvalidInput);
  EXPECT_THROW(orbit_rank(fermat(), {3, {0, 0, 0, 0, 0, 1}, 1}), InvalidInput);
}

TEST(ModuliDimension, Examples) {
  EXPECT_EQ(moduli_dimension(kT21, 1).n, 14u);
  EXPECT_EQ(moduli_dimension(kT31, 1).n, 10u);
  EXPECT_EQ(moduli_dimension(kT35, 1).n, 7u);
  const auto d = moduli_dimension(kT21, 1);
  EXPECT_EQ(d.seeds_used.size(), static_cast<std::size_t>(kModuliSeeds));
  EXPECT_EQ(d.dim_v - d.orbit_rank, d.n);
}

TEST(ModuliDimension, NoSmoothMember) {
  EXPECT_THROW(moduli_dimension({3, {0, 0, 0, 0, 0, 1}, 1}, 1), SearchExhausted);
}

TEST(Domain, Examples) {
  EXPECT_EQ(analyze(kT31, 1).domain, (DomainDescriptor{DomainKind::ball, 10}));
  EXPECT_EQ(analyze(kT21, 1).domain.to_string(), "TypeIV(14)");
  EXPECT_EQ(analyze(kT111, 1).domain.to_string(), "Point");
  HodgeEigenData h;
  h.order = 3;
  h.zeta_exp = 1;
  h.by_character[1] = {1, 0, 0};
  EXPECT_EQ(classify_domain(h).kind, DomainKind::point);
}

TEST(Analyze, Examples) {
  const auto t21 = analyze(kT21, 42);
  EXPECT_EQ(t21.dim_v, 40u);
  EXPECT_EQ(t21.n, 14u);
  EXPECT_EQ(zeta_string(t21.hodge.zeta_exp, 2), "-1");
  EXPECT_EQ(t21.n_prime.n_prime, 14u);
  EXPECT_TRUE(t21.bb.is_bb);

  const auto t37 = analyze(kT37, 42);
  EXPECT_EQ(t37.n, 6u);
  EXPECT_FALSE(t37.hodge.zeta_real());
  EXPECT_EQ(t37.domain.to_string(), "Ball(6)");
  EXPECT_TRUE(t37.bb.is_bb);

  const auto t51 = analyze(kT51, 42);
  EXPECT_EQ(t51.n, 4u);
  EXPECT_EQ(t51.hodge.zeta_exp, 0);
  EXPECT_EQ(t51.domain.to_string(), "TypeIV(4)");
  EXPECT_FALSE(t51.bb.is_bb);
}

TEST(Analyze, InvariantUnderEquivalentRepresentatives) {
  const auto base = analyze(kT35, 5);
  const std::vector<SymmetryType> reps = {
      {3, {2, 1, 1, 0, 0, 0}, 0},  // permuted
      {3, {1, 1, 1, 2, 2, 0}, 0},  // shifted by 1
      {3, {0, 0, 0, 2, 2, 1}, 0},  // squared generator
  };
  for (const auto& r : reps) {
    const auto other = analyze(r, 5);
    EXPECT_EQ(other.sym, base.sym);
    EXPECT_EQ(other.n, base.n);
    EXPECT_EQ(other.dim_v, base.dim_v);
    EXPECT_EQ(other.hodge.by_character, base.hodge.by_character);
    EXPECT_EQ(other.domain, base.domain);
    EXPECT_EQ(other.bb.is_bb, base.bb.is_bb);
    EXPECT_EQ(other.member, base.member);
  }
}

TEST(Analyze, RejectsTrivialAction) {
  EXPECT_THROW(analyze({3, {1, 1, 1, 1, 1, 1}, 0}, 1), InvalidInput);
}

TEST(Classify, OrderTwo) {
  const auto rows = classify_all({2}, 0);
  ASSERT_EQ(rows.size(), 3u);
  std::vector<std::size_t> ns;
  for (const auto& r : rows) ns.push_back(r.report.n);
  std::sort(ns.begin(), ns.end());
  EXPECT_EQ(ns, (std::vector<std::size_t>{10, 12, 14}));
}

TEST(Classify, OrderFiveHasOneRow) {
  const auto rows = classify_all({5}, 0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].report.n, 4u);
  EXPECT_EQ(rows[0].label, "T5_1");
}

TEST(Classify, OrderThreeFlagsMissingReference) {
  const auto rows = classify_all({3}, 0);
  ASSERT_EQ(rows.size(), 7u);
  std::size_t flagged = 0;
  for (const auto& r : rows) {
    ASSERT_TRUE(r.label.has_value());
    if (r.flag) {
      ++flagged;
      EXPECT_EQ(*r.label, "T3_1");
      EXPECT_FALSE(r.reference_bb.has_value());
      EXPECT_FALSE(r.report.bb.is_bb);
    }
  }
  EXPECT_EQ(flagged, 1u);
}

TEST(Classify, SeedIndependentRows) {
  const auto a = classify_all({2, 3}, 0);
  const auto b = classify_all({3, 2}, 12345);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].report.sym, b[i].report.sym);
    EXPECT_EQ(a[i].report.n, b[i].report.n);
    EXPECT_EQ(a[i].report.hodge.by_character, b[i].report.hodge.by_character);
  }
}

TEST(Reference, LookupIsCanonical) {
  EXPECT_EQ(find_reference({7, {0, 1, 2, 3, 4, 5}, 3})->label, "T7_1");
  EXPECT_FALSE(find_reference({3, {0, 0, 0, 0, 0, 1}, 1}).has_value());
  EXPECT_EQ(reference_types().size(), 13u);
}
