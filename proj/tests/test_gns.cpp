#include <gtest/gtest.h>

#include <cmath>

#include "pa/gns.hpp"
#include "pa/tl.hpp"
#include "support.hpp"

using namespace pa;
using pa::testing::random_element;
using pa::testing::Rng;

namespace {

const Ring kF = Ring::floating(2.5);

Element random_float(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Element x(kF, n);
  for (const auto& d : enumerate_diagrams(n)) x.add_term(d, Scalar(FloatAt{g(rng), 2.5}));
  return x;
}

}  // namespace

TEST(Gns, GramSmall) {
  auto g1 = gram(kF, 1);
  EXPECT_NEAR(g1(0, 0), 1.0, 1e-12);
  auto g2 = gram(kF, 2);
  // basis order: identity first
  const auto& basis = enumerate_diagrams(2);
  const int id = static_cast<int>(diagram_index(Diagram::identity(2)));
  const int cap = 1 - id;
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_NEAR(g2(id, id), 1.0, 1e-12);
  EXPECT_NEAR(g2(cap, cap), 1.0, 1e-12);
  EXPECT_NEAR(g2(id, cap), 1 / 2.5, 1e-12);
  EXPECT_NEAR(g2(cap, id), 1 / 2.5, 1e-12);
}

TEST(Gns, GramSymbolicRejected) { EXPECT_THROW(gram(Ring::symbolic(), 2), ModeMismatch); }

TEST(Gns, GramPositiveDefinite) {
  for (double d : {2.0, 2.5}) {
    Ring r = Ring::floating(d);
    for (int n = 0; n <= 6; ++n) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(gram(r, n), Eigen::EigenvaluesOnly);
      EXPECT_GT(es.eigenvalues().minCoeff(), 0.0) << "delta " << d << " n " << n;
    }
  }
}

TEST(Gns, Homomorphism) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    auto x = random_float(n, rng), y = random_float(n, rng);
    Matrix lhs = gns_matrix(multiply(x, y));
    Matrix rhs = gns_matrix(x) * gns_matrix(y);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
    // Gram adjoint: G^{-1} M^T G
    Matrix g = gram(kF, n);
    Matrix adj = g.inverse() * gns_matrix(x).transpose() * g;
    EXPECT_LT((adj - gns_matrix(star(x))).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Gns, OpNormExamples) {
  for (int n = 0; n <= 4; ++n) EXPECT_NEAR(op_norm(unit(kF, n)), 1.0, 1e-9);
  EXPECT_NEAR(op_norm(jones_projection(kF, 2)), 1.0, 1e-9);
  EXPECT_NEAR(op_norm(jones_projection(kF, 4)), 1.0, 1e-9);
  EXPECT_THROW(op_norm(unit(Ring::symbolic(), 2)), ModeMismatch);
}

TEST(Gns, CStarIdentity) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_float(pa::testing::uniform(rng, 1, 4), rng);
    double nx = op_norm(x);
    EXPECT_NEAR(op_norm(multiply(star(x), x)), nx * nx, 1e-9 * std::max(1.0, nx * nx));
  }
}

TEST(Gns, PsdSqrtExamples) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(psd_sqrt(unit(kF, n)), unit(kF, n));
  auto e = jones_projection(kF, 2);
  EXPECT_EQ(psd_sqrt(e.times_delta_pow(1)), e * Scalar(FloatAt{std::sqrt(2.5), 2.5}));
  EXPECT_THROW(psd_sqrt(unit(kF, 2) * kF.integer(-1)), PreconditionError);
}

TEST(Gns, PsdSqrtSquares) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto y = random_float(pa::testing::uniform(rng, 1, 4), rng);
    auto x = multiply(star(y), y);
    ASSERT_TRUE(is_psd(x));
    auto c = psd_sqrt(x);
    EXPECT_EQ(star(c), c);
    EXPECT_LT(Element::distance(multiply(c, c), x), 1e-9 * std::max(1.0, op_norm(x)));
    EXPECT_GE(min_eigenvalue(c), -1e-9);
  }
}

TEST(Gns, HkNorm) {
  Rng rng(14);
  auto x = random_float(3, rng);
  EXPECT_NEAR(hk_norm_sq(x, 1), 2.5 * 2.5 * tau(multiply(star(x), x)).to_double(), 1e-9);
}
