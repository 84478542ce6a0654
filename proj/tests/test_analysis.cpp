#include <gtest/gtest.h>

#include <cmath>

#include "pa/analysis.hpp"
#include "pa/gns.hpp"
#include "pa/tl.hpp"
#include "support.hpp"

using namespace pa;

namespace {

const Ring kSym = Ring::symbolic();
const Ring kF = Ring::floating(2.5);

::testing::AssertionResult Passed(const Report& r) {
  if (r.pass) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << r.to_json().dump(2);
}

}  // namespace

TEST(Estimate, SpecExample) {
  Rng rng(1);
  auto a = rand_dense(kF, 2, rng);
  auto r = estimate_lemma_verify(a, 1, 1, 1);
  EXPECT_TRUE(Passed(r));
  const double ratio = r.details["c_norm_sq"].get<double>() / hk_norm_sq(a, 1);
  EXPECT_NEAR(ratio, 2.5, 1e-9);
}

TEST(Estimate, ScalarClosure) {
  Rng rng(2);
  auto a = rand_dense(kF, 2, rng);
  EXPECT_EQ(estimate_element(a, 4, 0).n(), 0);
  EXPECT_TRUE(Passed(estimate_lemma_verify(a, 0, 4, 0)));
  EXPECT_TRUE(psd_sqrt(estimate_element(Element(kF, 2), 2, 0)).is_zero());
}

TEST(Estimate, Grid) {
  Rng rng(3);
  for (double d : {2.0, 2.5}) {
    Ring r = Ring::floating(d);
    for (int p = 1; p <= 3; ++p) {
      for (int q = 0; q <= 2 * p; ++q) {
        for (int i = 0; i <= std::min(2, 2 * p - q); ++i) {
          auto a = rand_dense(r, p, rng);
          EXPECT_TRUE(Passed(estimate_lemma_verify(a, std::min(p, 1), q, i)));
        }
      }
    }
  }
}

TEST(Boundedness, UnitIsTight) {
  auto a = unit(kF, 1);
  EXPECT_NEAR(boundedness_constant(a, 1) * 1, std::sqrt(2.5) * op_norm(psd_sqrt(estimate_element(a, 0, 0))), 1e-9);
  EXPECT_TRUE(Passed(boundedness_verify(a, 1, 20, 5)));
}

TEST(Boundedness, RandomP2) {
  Rng rng(4);
  auto a = rand_dense(Ring::floating(2.0), 2, rng);
  EXPECT_TRUE(Passed(boundedness_verify(a, 0, 100, 6)));
}

TEST(Boundedness, SumSquare) { EXPECT_TRUE(Passed(sum_square_verify(kF, 3, 5, 50, 7))); }

TEST(Cnk, ProjectionIsOrthogonalIdempotent) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    int k = rand_int(rng, 0, 2), n = k + rand_int(rng, 0, 3);
    auto x = rand_element(kSym, n, rng, 4);
    auto p = cnk_project(x, k);
    EXPECT_EQ(cnk_project(p, k), p);
    EXPECT_TRUE(inner(p, x - p).is_zero());
  }
}

TEST(Cnk, MembershipRoutes) {
  Rng rng(9);
  int members = 0, perps = 0, neither = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int k = rand_int(rng, 0, 2), n = k + rand_int(rng, 1, 3);
    Element x;
    switch (trial % 3) {
      case 0: x = evaluate(x_tangle(n, k), rand_element(kSym, k, rng)); break;
      case 1: x = random_perp(kSym, n, k, rng); break;
      default: x = rand_element(kSym, n, rng, 4); break;
    }
    auto m = cnk_membership(x, k);
    EXPECT_TRUE(m.routes_agree) << x.str();
    if (trial % 3 == 0) EXPECT_EQ(m.status, CnkStatus::member);
    if (trial % 3 == 1 && !x.is_zero()) EXPECT_EQ(m.status, CnkStatus::perp);
    members += m.status == CnkStatus::member;
    perps += m.status == CnkStatus::perp;
    neither += m.status == CnkStatus::neither;
  }
  EXPECT_GT(neither, 0);
  EXPECT_GT(perps, 0);
  EXPECT_GT(members, 0);
}

TEST(Cnk, FullAtEqualColour) {
  Rng rng(10);
  for (int k = 0; k <= 3; ++k) {
    auto x = rand_element(kSym, k, rng);
    EXPECT_EQ(cnk_membership(x, k).status, CnkStatus::member);
  }
}

TEST(CComm, ZeroRoundTrip) { EXPECT_TRUE(ccommlem_invert(Element(kSym, 3), 2, 1).is_zero()); }

TEST(CComm, RoundTrip) {
  Rng rng(11);
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {2, 0}, {3, 0}}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto x = random_perp(kSym, n, k, rng);
      EXPECT_TRUE(Passed(ccommlem_verify(x, k))) << n << " " << k;
    }
  }
}

TEST(DComm, ReplayPinsPlacement) {
  for (int k = 0; k <= 2; ++k) {
    auto r = dcomm_replay(k);
    ASSERT_TRUE(Passed(r)) << k;
    const auto& win = r.details["passing"][0];
    EXPECT_EQ(win["Y"], "first");
    EXPECT_EQ(win["Z"], "last");
    EXPECT_EQ(win["d"], "identity");
  }
}

TEST(Xnxm, DefiningRelation) {
  EXPECT_TRUE(Passed(xnxm_verify(kSym, 1, 2, 42)));
  EXPECT_TRUE(Passed(xnxm_verify(kSym, 1, 3, 43)));
  EXPECT_TRUE(Passed(xnxm_verify(kSym, 0, 2, 44)));
}

TEST(Xnxm, Telescoping) {
  EXPECT_TRUE(Passed(telescoping_verify(kSym, 1, 2, 2, 42)));
  EXPECT_TRUE(Passed(telescoping_verify(kSym, 0, 1, 2, 43)));
}

TEST(Positivity, ExactAndFloat) {
  for (int k = 0; k <= 1; ++k) {
    EXPECT_TRUE(Passed(positivity_verify(k, mpq_class(2), 6)));
    EXPECT_TRUE(Passed(positivity_verify(k, mpq_class(5, 2), 6)));
  }
}

TEST(Positivity, DetectsSmallDelta) {
  // below the index threshold some Gram matrix degenerates
  auto r = positivity_verify(0, mpq_class(1), 3);
  EXPECT_FALSE(r.pass);
}

TEST(Commutant, FixedPointAndRank) {
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i <= k; ++i) EXPECT_TRUE(Passed(el_fixed_point_verify(kSym, k, i, 12)));
  }
}

TEST(Commutant, Extremality) {
  EXPECT_TRUE(Passed(extremality_verify(kSym)));
  EXPECT_TRUE(Passed(extremality_verify(Ring::rational(mpq_class(5, 2)))));
}

TEST(Commutant, PkCommutesWithCD) {
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(Passed(commutant_verify(kSym, k)));
}

TEST(Rank, Small) {
  std::vector<std::vector<mpq_class>> m = {{1, 2}, {2, 4}};
  EXPECT_EQ(rational_rank(m), 1);
  m = {{1, 0}, {0, 1}};
  EXPECT_EQ(rational_rank(m), 2);
}
