#include <gtest/gtest.h>

#include "pa/tl.hpp"
#include "support.hpp"

using namespace pa;
using pa::testing::random_element;
using pa::testing::Rng;
using pa::testing::Stack;

namespace {

const Ring kSym = Ring::symbolic();

Element X2() { return Element::of(kSym, Diagram::from_pairs(2, {{1, 2}, {3, 4}})); }

}  // namespace

TEST(TL, CapSquared) {
  EXPECT_EQ(multiply(X2(), X2()), X2().times_delta_pow(1));
  EXPECT_EQ(evaluate(mult_tangle(2), X2(), X2()), X2().times_delta_pow(1));
}

TEST(TL, UnitTangle) {
  auto one = evaluate(unit_tangle(1), kSym);
  EXPECT_EQ(one, Element::of(kSym, Diagram::from_pairs(1, {{1, 2}})));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(evaluate(unit_tangle(n), kSym), unit(kSym, n));
}

TEST(TL, TraceNormalized) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(tau(unit(kSym, n)), kSym.one());
  EXPECT_EQ(tau(jones_projection(kSym, 2)), kSym.delta_pow(-2));
}

TEST(TL, JonesTangleGivesProjection) {
  for (int n = 2; n <= 6; ++n) {
    auto e = jones_projection(kSym, n);
    EXPECT_EQ(multiply(e, e), e) << n;
    EXPECT_EQ(star(e), e);
    EXPECT_EQ(evaluate(jones_tangle(n), kSym), e.times_delta_pow(1));
  }
  EXPECT_EQ(jones_projection(kSym, 2), X2().times_delta_pow(-1));
}

TEST(TL, JonesRelations) {
  // e_i e_{i±1} e_i = δ^{-2} e_i, read inside P_4.
  auto lift = [](Element x, int to) {
    while (x.n() < to) x = include_tl(x);
    return x;
  };
  auto e2 = lift(jones_projection(kSym, 2), 4);
  auto e3 = lift(jones_projection(kSym, 3), 4);
  auto e4 = jones_projection(kSym, 4);
  EXPECT_EQ(multiply(multiply(e2, e3), e2), e2.times_delta_pow(-2));
  EXPECT_EQ(multiply(multiply(e3, e4), e3), e3.times_delta_pow(-2));
  EXPECT_EQ(multiply(e2, e4), multiply(e4, e2));
}

TEST(TL, StarIsInvolutionAndAntiMultiplicative) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    EXPECT_EQ(star(star(x)), x);
    EXPECT_EQ(star(multiply(x, y)), multiply(star(y), star(x)));
  }
}

TEST(TL, ProductMatchesStackingOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = pa::testing::uniform(rng, 1, 5);
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    ASSERT_EQ(multiply(x, y), Stack::product(x, y)) << x.str() << " * " << y.str();
  }
}

TEST(TL, AssociativeAndUnital) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    auto z = random_element(kSym, n, rng);
    EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    EXPECT_EQ(multiply(unit(kSym, n), x), x);
    EXPECT_EQ(multiply(x, unit(kSym, n)), x);
  }
}

TEST(TL, TraceProperties) {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    EXPECT_EQ(tau(multiply(x, y)), tau(multiply(y, x)));
    EXPECT_EQ(tau(star(x)), tau(x));
  }
}

TEST(TL, TraceMatchesLoopCountOracle) {
  // τ(D) = δ^{loops(D glued to the identity's closure) - n}: the closure pairs
  // column c top with bottom, so the loops are the cycles of D ∪ {c, 2n+1-c}.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      std::vector<char> seen(2 * n, 0);
      int loops = 0;
      for (int p = 1; p <= 2 * n; ++p) {
        if (seen[p - 1]) continue;
        ++loops;
        int cur = p;
        while (!seen[cur - 1]) {
          seen[cur - 1] = 1;
          int q = d.partner(cur);
          seen[q - 1] = 1;
          cur = 2 * n + 1 - q;
        }
      }
      EXPECT_EQ(tau(Element::of(kSym, d)), kSym.delta_pow(loops - n)) << d.str();
    }
  }
}

TEST(TL, RotationUnitary) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    EXPECT_EQ(inner(evaluate(rotation_tangle(n), x), evaluate(rotation_tangle(n), y)), inner(x, y));
    EXPECT_EQ(evaluate(rotation_tangle(n), x), rotate(x));
    EXPECT_EQ(rotate(rotate(x, 3), -3), x);
  }
}

TEST(TL, RotationHasOrderN) {
  Rng rng(19);
  for (int n = 1; n <= 5; ++n) {
    auto x = random_element(kSym, n, rng);
    EXPECT_EQ(rotate(x, n), x);
  }
}

TEST(TL, SphericalityOnP1) {
  // Closing on the left or on the right yields the same scalar.
  auto x = Element::of(kSym, Diagram::identity(1), Scalar::monomial(3, 1));
  auto left = evaluate(left_expectation_tangle(1, 1), x);
  auto right = evaluate(right_expectation_tangle(0, 1), x);
  EXPECT_EQ(left.coeff(Diagram::identity(1)), right.coeff(Diagram::identity(0)));
}

TEST(TL, AdjointCompatibility) {
  Rng rng(23);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Tangle> ts = {incl_tangle(n), trace_tangle(n), rotation_tangle(n), right_expectation_tangle(n, 1),
                              right_expectation_tangle(n - 1, 1), left_expectation_tangle(n, 1),
                              left_expectation_tangle(n, n), identity_tangle(n)};
    for (const auto& t : ts) {
      ASSERT_FALSE(validate(t)) << t.to_dsl();
      auto x = random_element(kSym, t.box_colour(1).n(), rng);
      EXPECT_EQ(evaluate(adjoint(t), star(x)), star(evaluate(t, x))) << t.to_dsl();
    }
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    std::vector<Element> in{star(x), star(y)};
    EXPECT_EQ(evaluate(adjoint(mult_tangle(n)), in), star(multiply(x, y)));
  }
}

TEST(TL, ExpectationsAreIdempotentUpToDelta) {
  Rng rng(29);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      auto x = random_element(kSym, n, rng);
      auto el = left_expectation_tangle(n, i);
      EXPECT_EQ(evaluate(el, evaluate(el, x)), evaluate(el, x).times_delta_pow(i));
    }
    auto x = random_element(kSym, n, rng);
    auto er = right_expectation_tangle(n - 1, 1);
    auto back = include_tl(evaluate(er, x));
    EXPECT_EQ(evaluate(er, back), evaluate(er, x).times_delta_pow(1));
  }
}

TEST(TL, RightExpectationOfIncludedElement) {
  // ER applied after inclusion multiplies by δ.
  Rng rng(31);
  for (int n = 0; n <= 4; ++n) {
    auto x = n == 0 ? unit(kSym, 0) : random_element(kSym, n, rng);
    EXPECT_EQ(evaluate(right_expectation_tangle(n, 1), include_tl(x)), x.times_delta_pow(1));
  }
}

TEST(TL, StandardTanglesValidate) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_FALSE(validate(mult_tangle(n)));
    EXPECT_FALSE(validate(incl_tangle(n)));
    EXPECT_FALSE(validate(trace_tangle(n)));
    EXPECT_FALSE(validate(unit_tangle(n)));
    EXPECT_FALSE(validate(identity_tangle(n)));
    for (int i = 0; i <= n; ++i) {
      EXPECT_FALSE(validate(left_expectation_tangle(n, i)));
      EXPECT_FALSE(validate(right_expectation_tangle(n, i)));
    }
    if (n >= 1) EXPECT_FALSE(validate(rotation_tangle(n)));
    if (n >= 2) EXPECT_FALSE(validate(jones_tangle(n)));
  }
  EXPECT_THROW(left_expectation_tangle(2, 3), PreconditionError);
}

TEST(TL, FloatModePositivityOfExpectations) {
  // Z_EL(i)(x* x) has non-negative trace against every y* y.
  const Ring f = Ring::floating(2.5);
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    int n = pa::testing::uniform(rng, 1, 4);
    int i = pa::testing::uniform(rng, 0, n);
    auto x = random_element(f, n, rng);
    auto y = random_element(f, n, rng);
    auto img = evaluate(left_expectation_tangle(n, i), multiply(star(x), x));
    EXPECT_GE(tau(multiply(multiply(star(y), img), y)).to_double(), -1e-9);
  }
}
