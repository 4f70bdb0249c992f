#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "symcubic/errors.hpp"
#include "symcubic/lattice.hpp"
#include "oracles.hpp"

using namespace symcubic;

namespace {

IntegralLattice hyperbolic() { return IntegralLattice::from_integers({{0, 1}, {1, 0}}); }
IntegralLattice a2() { return IntegralLattice::from_integers({{2, -1}, {-1, 2}}); }
IntegralLattice diag(std::initializer_list<long long> d) {
  std::vector<std::vector<long long>> g(d.size(), std::vector<long long>(d.size(), 0));
  std::size_t i = 0;
  for (long long x : d) g[i][i] = x, ++i;
  return IntegralLattice::from_integers(g);
}

MatrixQ block_diag(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

const MatrixQ kSwap = MatrixQ::from_integers({{0, 1}, {1, 0}});
const MatrixQ kRotation = MatrixQ::from_integers({{0, -1}, {1, -1}});

struct Fixture {
  std::string name;
  IntegralLattice lattice;
  MatrixQ g;
};

// Order-2 fixtures.
std::vector<Fixture> involutions() {
  const IntegralLattice u = hyperbolic();
  const IntegralLattice uu = IntegralLattice::direct_sum(u, u);
  MatrixQ block_swap(4, 4);
  block_swap(0, 2) = block_swap(2, 0) = block_swap(1, 3) = block_swap(3, 1) = 1;
  const IntegralLattice u_a1 = IntegralLattice::direct_sum(u, diag({-2}));
  MatrixQ neg_last = MatrixQ::identity(3);
  neg_last(2, 2) = -1;
  const IntegralLattice a2_u = IntegralLattice::direct_sum(a2(), u);
  // Reflection of A2 exchanging the simple roots, together with the swap on U.
  const MatrixQ a2_flip = block_diag(kSwap, kSwap);
  return {
      {"U swap", u, kSwap},
      {"U minus identity", u, MatrixQ::identity(2) - MatrixQ::identity(2) - MatrixQ::identity(2)},
      {"UU block swap", uu, block_swap},
      {"U+<-2> sign flip", u_a1, neg_last},
      {"A2+U flip", a2_u, a2_flip},
      {"<1,-1,2> sign flip", diag({1, -1, 2}), block_diag(MatrixQ::identity(1), MatrixQ::from_integers({{-1, 0}, {0, 1}}))},
  };
}

VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(IntegerAlgebra, HermiteAndKernel) {
  const IntMatrix h = hermite_normal_form({{2, 4}, {3, 5}});
  EXPECT_EQ(h, (IntMatrix{{1, 1}, {0, 2}}));
  // 2x + 4y = 0 has saturated kernel (2, -1) up to sign.
  const IntMatrix k = integer_kernel({{2, 4}}, 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (IntVector{2, -1}));
  EXPECT_TRUE(integer_kernel({{1, 0}, {0, 1}}, 2).empty());
}

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(IntegralLattice::from_integers({{0, 1}, {2, 0}}), InvalidInput);
  EXPECT_THROW(IntegralLattice(MatrixQ::from_rows({{Rational(Integer(1), Integer(2))}}, 1)), InvalidInput);
}

TEST(Isometry, Examples) {
  EXPECT_EQ(verify_isometry(a2(), MatrixQ::identity(2)).order, 1u);
  const auto swap = verify_isometry(hyperbolic(), kSwap);
  EXPECT_TRUE(swap.ok);
  EXPECT_EQ(swap.order, 2u);
  const MatrixQ minus = MatrixQ(2, 2) - MatrixQ::identity(2);
  EXPECT_EQ(verify_isometry(hyperbolic(), minus).order, 2u);
  EXPECT_EQ(verify_isometry(a2(), kRotation).order, 3u);
  EXPECT_TRUE(verify_isometry(a2(), kSwap * kRotation * kRotation).ok);
  const MatrixQ shear = MatrixQ::from_integers({{1, 1}, {0, 1}});
  EXPECT_FALSE(verify_isometry(diag({1, 1}), shear).ok);
  // Pell unit 3 + 2 sqrt(2) preserves x^2 - 2y^2 and has infinite order.
  const MatrixQ pell = MatrixQ::from_integers({{3, 4}, {2, 3}});
  EXPECT_THROW(verify_isometry(diag({1, -2}), pell, 50), SearchExhausted);
  EXPECT_THROW(verify_isometry(hyperbolic(), MatrixQ::identity(3)), InvalidInput);
}

TEST(Eigenlattice, Examples) {
  const auto plus = eigenlattice(hyperbolic(), kSwap, 1);
  EXPECT_EQ(plus.rank(), 1u);
  EXPECT_EQ(plus.gram, MatrixQ::from_integers({{2}}));
  EXPECT_EQ(plus.signature, (Inertia{1, 0, 0}));
  const auto minus = eigenlattice(hyperbolic(), kSwap, -1);
  EXPECT_EQ(minus.gram, MatrixQ::from_integers({{-2}}));
  EXPECT_EQ(minus.signature, (Inertia{0, 1, 0}));
  const auto fx = involutions()[2];
  const auto uu = eigenlattice(fx.lattice, fx.g, 1);
  EXPECT_EQ(uu.rank(), 2u);
  EXPECT_EQ(uu.gram, MatrixQ::from_integers({{0, 2}, {2, 0}}));
  EXPECT_EQ(uu.signature, (Inertia{1, 1, 0}));
  EXPECT_THROW(eigenlattice(hyperbolic(), kSwap, 2), InvalidInput);
}

TEST(Eigenlattice, OrthogonalityAndAdditivity) {
  for (const auto& fx : involutions()) {
    ASSERT_EQ(verify_isometry(fx.lattice, fx.g).order, 2u) << fx.name;
    const auto plus = eigenlattice(fx.lattice, fx.g, 1);
    const auto minus = eigenlattice(fx.lattice, fx.g, -1);
    EXPECT_TRUE((plus.basis * fx.lattice.gram() * minus.basis.transpose()).is_zero()) << fx.name;
    EXPECT_EQ(plus.rank() + minus.rank(), fx.lattice.rank()) << fx.name;
    const Inertia total = fx.lattice.signature();
    EXPECT_EQ(plus.signature.pos + minus.signature.pos, total.pos) << fx.name;
    EXPECT_EQ(plus.signature.neg + minus.signature.neg, total.neg) << fx.name;
    // Canonical basis.
    EXPECT_EQ(hermite_normal_form(to_integer_matrix(plus.basis)), to_integer_matrix(plus.basis));
  }
}

TEST(Cyclotomic, A2Rotation) {
  const auto c = cyclotomic_eigenlattice(a2(), kRotation, 3);
  EXPECT_EQ(c.kernel.rank(), 2u);
  EXPECT_EQ(c.eigenspace_dims, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(c.isotropic);
  EXPECT_THROW(cyclotomic_eigenlattice(a2(), MatrixQ::identity(2), 3), InvalidInput);
  EXPECT_THROW(cyclotomic_eigenlattice(hyperbolic(), kSwap, 3), InvalidInput);
}

TEST(Cyclotomic, MixedFixtures) {
  // U + A2 with the rotation on A2 only: the U part is the kernel of g - 1.
  const IntegralLattice u_a2 = IntegralLattice::direct_sum(hyperbolic(), a2());
  const MatrixQ g = block_diag(MatrixQ::identity(2), kRotation);
  const auto c = cyclotomic_eigenlattice(u_a2, g, 3);
  EXPECT_EQ(c.kernel.rank(), 2u);
  EXPECT_EQ(c.kernel.gram, a2().gram());
  EXPECT_TRUE(c.isotropic);
  // A2 + A2 with both rotated, and U + A2 + A2 with an order-6 element.
  const IntegralLattice a2a2 = IntegralLattice::direct_sum(a2(), a2());
  const auto d = cyclotomic_eigenlattice(a2a2, block_diag(kRotation, kRotation * kRotation), 3);
  EXPECT_EQ(d.kernel.rank(), 4u);
  EXPECT_EQ(d.eigenspace_dims, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(d.isotropic);
  const IntegralLattice big = IntegralLattice::direct_sum(u_a2, a2());
  const MatrixQ swap_rot = block_diag(block_diag(kSwap, kRotation), kRotation);
  ASSERT_EQ(verify_isometry(big, swap_rot).order, 6u);
  const auto e = cyclotomic_eigenlattice(big, swap_rot, 3);
  EXPECT_EQ(e.kernel.rank(), 4u);
  EXPECT_TRUE(e.isotropic);
}

TEST(Cyclotomic, OrderFiveOnRootLattice) {
  // Coxeter element of A4 acting on the A4 root lattice.
  const IntegralLattice a4 = IntegralLattice::from_integers({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  // s1 s2 s3 s4 in the simple-root basis.
  MatrixQ c = MatrixQ::identity(4);
  for (std::size_t i = 0; i < 4; ++i) {
    MatrixQ s = MatrixQ::identity(4);
    for (std::size_t j = 0; j < 4; ++j) s(i, j) -= a4.gram()(i, j);
    c = c * s;
  }
  ASSERT_EQ(verify_isometry(a4, c).order, 5u);
  const auto k = cyclotomic_eigenlattice(a4, c, 5);
  EXPECT_EQ(k.kernel.rank(), 4u);
  EXPECT_EQ(k.eigenspace_dims, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_TRUE(k.isotropic);
}

TEST(Isotropic, Examples) {
  EXPECT_EQ(isotropic_vectors(hyperbolic(), 3), (std::vector<IntVector>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(isotropic_vectors(diag({2, 2}), 5).empty());
  const auto u_a1 = IntegralLattice::direct_sum(hyperbolic(), diag({-2}));
  const auto vs = isotropic_vectors(u_a1, 2);
  for (const IntVector& want : {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, 1}}) {
    EXPECT_NE(std::find(vs.begin(), vs.end(), want), vs.end());
  }
  EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
  EXPECT_THROW(isotropic_vectors(hyperbolic(), 0), InvalidInput);
}

TEST(Isotropic, AgreesWithQuadraticOracle) {
  const std::vector<IntegralLattice> fixtures = {
      hyperbolic(),
      a2(),
      diag({1, -1}),
      diag({1, 1, -1}),
      IntegralLattice::direct_sum(hyperbolic(), diag({-2})),
      IntegralLattice::direct_sum(hyperbolic(), a2()),
      IntegralLattice::direct_sum(hyperbolic(), hyperbolic()),
      diag({1, 1, -1, -1}),
      IntegralLattice::from_integers({{2, 1, 0}, {1, -4, 3}, {0, 3, -6}}),
  };
  for (const auto& l : fixtures) {
    EXPECT_EQ(oracle::as_set(isotropic_vectors(l, 10)), oracle::isotropic_by_quadratic(l, 10));
  }
}

TEST(Boundary, LineExamples) {
  const auto l = IntegralLattice::direct_sum(hyperbolic(), diag({-2}));
  const Subspace line = Subspace::span({vec({1, 0, 0})}, 3);
  const Subspace perp = line.orthogonal_complement(l.gram());
  EXPECT_EQ(boundary_subspace_j(line, {}, l), perp);
  const VectorQ containing = vec({0, 0, 1});  // phi(h, e) = 0
  const VectorQ missing = vec({0, 1, 0});     // phi(h, e) = 1
  const Subspace cut = boundary_subspace_j(line, {containing}, l);
  EXPECT_EQ(cut, perp.intersect(Subspace::span({containing}, 3).orthogonal_complement(l.gram())));
  EXPECT_EQ(boundary_subspace_j(line, {missing}, l), perp);
  EXPECT_TRUE(cut.contains(line));
  EXPECT_TRUE(perp.contains(cut));
  EXPECT_THROW(boundary_subspace_j(Subspace::span({vec({1, 1, 0})}, 3), {}, l), InvalidInput);
}

TEST(Boundary, PlaneExamples) {
  const auto l = IntegralLattice::direct_sum(IntegralLattice::direct_sum(hyperbolic(), hyperbolic()), diag({-2, -2}));
  const Subspace plane = Subspace::span({vec({1, 0, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0})}, 6);
  const Subspace perp = plane.orthogonal_complement(l.gram());
  EXPECT_EQ(perp.dim(), 4u);
  EXPECT_EQ(boundary_subspace_vsigma(plane, {}, l), perp);
  const VectorQ h1 = vec({0, 0, 0, 0, 1, 0});
  const VectorQ h2 = vec({0, 0, 0, 0, 0, 1});
  const Subspace one = boundary_subspace_vsigma(plane, {h1}, l);
  const Subspace two = boundary_subspace_vsigma(plane, {h1, h2}, l);
  EXPECT_EQ(one.dim(), 3u);
  EXPECT_EQ(two.dim(), 2u);
  EXPECT_EQ(two, plane);
  EXPECT_TRUE(perp.contains(one));
  EXPECT_TRUE(one.contains(two));
  // A hyperplane not containing the plane is ignored.
  EXPECT_EQ(boundary_subspace_vsigma(plane, {h1, vec({0, 1, 0, 0, 0, 0})}, l), one);
  EXPECT_THROW(boundary_subspace_vsigma(Subspace::span({vec({1, 0, 0, 0, 0, 0})}, 6), {}, l), InvalidInput);
  EXPECT_THROW(boundary_subspace_vsigma(Subspace::span({vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0})}, 6), {}, l),
               InvalidInput);
}

TEST(Boundary, MonotoneInArrangement) {
  const auto l = IntegralLattice::direct_sum(IntegralLattice::direct_sum(hyperbolic(), hyperbolic()), diag({-2, -2}));
  const Subspace line = Subspace::span({vec({1, 0, 0, 0, 0, 0})}, 6);
  const std::vector<VectorQ> hs = {vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 0, 1, 1}), vec({0, 1, 0, 0, 0, 0}),
                                   vec({0, 0, 0, 1, 0, 0})};
  Subspace prev = boundary_subspace_j(line, {}, l);
  std::vector<VectorQ> arr;
  for (const auto& h : hs) {
    arr.push_back(h);
    const Subspace next = boundary_subspace_j(line, arr, l);
    EXPECT_TRUE(prev.contains(next));
    EXPECT_TRUE(next.contains(line));
    prev = next;
  }
}

TEST(CM, Examples) {
  const auto uu = IntegralLattice::direct_sum(hyperbolic(), hyperbolic());
  for (long d : {1, 2, 3, 7}) {
    const auto plane = cm_line_to_plane(vec({1, 0, 0, 0}), vec({0, 0, 1, 0}), Integer(d), uu);
    ASSERT_TRUE(plane);
    EXPECT_TRUE(plane->is_isotropic(uu.gram()));
  }
  EXPECT_FALSE(cm_line_to_plane(vec({1, 1, 0, 0}), vec({0, 0, 1, 0}), Integer(1), uu));
  EXPECT_FALSE(cm_line_to_plane(vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), Integer(1), uu));
  EXPECT_THROW(cm_line_to_plane(vec({1, 0, 0, 0}), vec({2, 0, 0, 0}), Integer(1), uu), InvalidInput);
  EXPECT_THROW(cm_line_to_plane(vec({1, 0, 0, 0}), vec({0, 0, 1, 0}), Integer(0), uu), InvalidInput);
}
