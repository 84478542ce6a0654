#include <gtest/gtest.h>

#include "pa/tl.hpp"
#include "support.hpp"

using namespace pa;
using pa::testing::random_element;
using pa::testing::Rng;
using pa::testing::uniform;

namespace {

const Ring kSym = Ring::symbolic();

// Pool of single-box tangles from colour n to colour n.
std::vector<Tangle> endo_pool(int n) {
  std::vector<Tangle> pool = {identity_tangle(n), rotation_tangle(n), adjoint(rotation_tangle(n))};
  for (int i = 0; i <= n; ++i) pool.push_back(left_expectation_tangle(n, i));
  Tangle down_up = substitute(incl_tangle(n - 1), {{1, right_expectation_tangle(n - 1, 1)}});
  pool.push_back(down_up);
  return pool;
}

}  // namespace

TEST(Parse, Examples) {
  auto one = parse_tangle("ext 1; strand e1-e2");
  EXPECT_EQ(one.ext(), Colour(1));
  EXPECT_EQ(one.mate({0, 1}), (Point{0, 2}));
  EXPECT_EQ(evaluate(one, kSym), unit(kSym, 1));

  auto id = parse_tangle("ext 2; box b1 2; strand e1-b1.1 e2-b1.2 e3-b1.3 e4-b1.4");
  EXPECT_EQ(id.strands(), identity_tangle(2).strands());
  EXPECT_FALSE(validate(id));
  Rng rng(1);
  auto x = random_element(kSym, 2, rng);
  EXPECT_EQ(evaluate(id, x), x);
}

TEST(Parse, MultiLineWithComments) {
  auto t = parse_tangle(
      "# trace of a 1-box\n"
      "ext 0\n"
      "box x 1\n"
      "strand x.1-x.2\n"
      "loops 2\n");
  EXPECT_EQ(t.loops(), 2);
  EXPECT_EQ(t.box_name(1), "x");
  EXPECT_EQ(evaluate(t, unit(kSym, 1)), Element::of(kSym, Diagram::identity(0), kSym.delta_pow(3)));
}

TEST(Parse, RoundTrip) {
  for (const auto& t : {mult_tangle(3), incl_tangle(2), jones_tangle(4), left_expectation_tangle(3, 2)}) {
    EXPECT_EQ(parse_tangle(t.to_dsl()).strands(), t.strands());
  }
}

TEST(Parse, Errors) {
  try {
    parse_tangle("ext 1\nstrand e1-");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_THROW(parse_tangle("ext 1\nstrand e1-e1"), ParseError);
  EXPECT_THROW(parse_tangle("ext 2\nstrand e1-e2"), ParseError);          // unmatched e3, e4
  EXPECT_THROW(parse_tangle("ext 1\nstrand e1-e2 e2-e1"), ParseError);    // reuse
  EXPECT_THROW(parse_tangle("ext 1\nbox b 1\nstrand e1-b.3 e2-b.1 b.2-x.1"), ParseError);
  EXPECT_THROW(parse_tangle("box b 1"), ParseError);
  EXPECT_THROW(parse_tangle("ext 1\nwobble"), ParseError);
  EXPECT_THROW(parse_tangle("ext q"), ParseError);
}

TEST(Validate, Crossing) {
  auto t = parse_tangle("ext 2; strand e1-e3 e2-e4");
  auto ed = euler_data(t);
  EXPECT_EQ(ed.chi(), 0);
  auto v = validate(t);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::planarity);
  auto t3 = parse_tangle("ext 3; strand e1-e4 e2-e5 e3-e6");
  ASSERT_TRUE(validate(t3));
  EXPECT_EQ(validate(t3)->kind, Violation::Kind::planarity);
}

TEST(Validate, Parity) {
  // A planar picture whose box is rotated by one point: shading breaks.
  auto t = parse_tangle("ext 2; box b1 2; strand e1-b1.2 e2-b1.3 e3-b1.4 e4-b1.1");
  auto v = validate(t);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::parity);
  ASSERT_TRUE(v->strand);
  // Odd external points to odd internal points is the identity shading.
  EXPECT_FALSE(validate(parse_tangle("ext 1; box b1 1; strand e1-b1.1 e2-b1.2")));
}

TEST(Validate, NestedBoxes) {
  // A box drawn inside a cap region of another tangle.
  auto t = parse_tangle(
      "ext 2\nbox a 1\nbox b 1\n"
      "strand e1-a.1 e2-a.2 e3-b.1 e4-b.2\n");
  EXPECT_FALSE(validate(t));
  auto bad = parse_tangle(
      "ext 2\nbox a 1\nbox b 1\n"
      "strand e1-a.1 e3-a.2 e2-b.1 e4-b.2\n");
  EXPECT_TRUE(validate(bad));
}

TEST(Substitute, IdentityIsNeutral) {
  for (const auto& t : {mult_tangle(2), incl_tangle(3), rotation_tangle(3)}) {
    std::map<int, Tangle> a;
    for (int b = 1; b <= t.num_boxes(); ++b) a.emplace(b, identity_tangle(t.box_colour(b).n()));
    EXPECT_EQ(substitute(t, a).strands(), t.strands());
    EXPECT_EQ(substitute(t, a).loops(), 0);
    EXPECT_EQ(substitute(identity_tangle(t.ext().n()), {{1, t}}).strands(), t.strands());
  }
}

TEST(Substitute, TraceOfUnitGivesLoops) {
  for (int n = 0; n <= 6; ++n) {
    auto t = substitute(trace_tangle(n), {{1, unit_tangle(n)}});
    EXPECT_EQ(t.num_boxes(), 0);
    EXPECT_EQ(t.loops(), n);
    EXPECT_FALSE(validate(t));
  }
}

TEST(Substitute, ColourMismatch) {
  EXPECT_THROW(substitute(trace_tangle(2), {{1, unit_tangle(3)}}), PreconditionError);
  EXPECT_THROW(substitute(trace_tangle(2), {{2, unit_tangle(2)}}), PreconditionError);
}

TEST(SubstituteProperty, AssociativeOnRandomTriples) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = uniform(rng, 1, 4);
    auto pool = endo_pool(n);
    auto pick = [&] { return pool[static_cast<size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]; };
    Tangle a = pick(), b = pick(), c = pick();
    Tangle left = substitute(substitute(a, {{1, b}}), {{1, c}});
    Tangle right = substitute(a, {{1, substitute(b, {{1, c}})}});
    EXPECT_EQ(left.strands(), right.strands());
    EXPECT_EQ(left.loops(), right.loops());
    EXPECT_FALSE(validate(left));
  }
}

TEST(SubstituteProperty, CompatibleWithEvaluation) {
  Rng rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    int n = uniform(rng, 1, 4);
    auto pool = endo_pool(n);
    auto pick = [&] { return pool[static_cast<size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]; };
    Tangle s = pick(), u = pick();
    auto x = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    EXPECT_EQ(evaluate(substitute(s, {{1, u}}), x), evaluate(s, evaluate(u, x)));
    // Two-box outer with one box filled.
    Tangle m = substitute(mult_tangle(n), {{2, u}});
    std::vector<Element> in{x, y};
    EXPECT_EQ(evaluate(m, in), multiply(x, evaluate(u, y)));
    Tangle tr = substitute(trace_tangle(n), {{1, mult_tangle(n)}});
    EXPECT_EQ(evaluate(tr, in).coeff(Diagram::identity(0)), tau(multiply(x, y)).times_delta_pow(n));
  }
}

TEST(Evaluate, PreconditionsAndZero) {
  EXPECT_THROW(evaluate(mult_tangle(2), unit(kSym, 2)), PreconditionError);
  EXPECT_THROW(evaluate(mult_tangle(2), unit(kSym, 2), unit(kSym, 3)), PreconditionError);
  EXPECT_THROW(evaluate(mult_tangle(2), unit(kSym, 2), unit(Ring::rational(2), 2)), ModeMismatch);
  EXPECT_TRUE(evaluate(identity_tangle(2), Element(kSym, 2)).is_zero());
}

TEST(Evaluate, CrossingTangleIsInternalError) {
  auto t = parse_tangle("ext 2; strand e1-e3 e2-e4");
  EXPECT_THROW(evaluate(t, kSym), InternalError);
}

TEST(Evaluate, Multilinear) {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    int n = uniform(rng, 1, 3);
    auto x = random_element(kSym, n, rng);
    auto x2 = random_element(kSym, n, rng);
    auto y = random_element(kSym, n, rng);
    Scalar c = pa::testing::random_scalar(kSym, rng);
    EXPECT_EQ(multiply(x + x2 * c, y), multiply(x, y) + multiply(x2, y) * c);
  }
}
