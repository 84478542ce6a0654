#include <gtest/gtest.h>

#include "pa/io.hpp"
#include "pa/tl.hpp"
#include "support.hpp"

using namespace pa;
using pa::testing::random_element;

TEST(Io, ScalarForms) {
  auto s = Scalar::monomial(mpq_class(3, 2), -1) + Scalar::monomial(mpq_class(1), 2);
  auto j = to_json(s);
  EXPECT_EQ(j["mode"], "symbolic");
  EXPECT_EQ(j["terms"][0][0], -1);
  EXPECT_EQ(j["terms"][0][1], "3/2");
  EXPECT_EQ(scalar_from_json(j), s);
  Scalar r(RationalAt{mpq_class(1, 3), mpq_class(5, 2)});
  EXPECT_EQ(to_json(r).dump(), R"({"mode":"rational","value":"1/3","delta":"5/2"})");
  EXPECT_EQ(scalar_from_json(to_json(r)), r);
  Scalar f(FloatAt{0.25, 2.0});
  EXPECT_EQ(scalar_from_json(to_json(f)), f);
}

TEST(Io, ElementRoundTrip) {
  pa::testing::Rng rng(3);
  for (const Ring& ring : {Ring::symbolic(), Ring::rational(mpq_class(5, 2)), Ring::floating(2.0)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_element(ring, pa::testing::uniform(rng, 0, 4), rng);
      EXPECT_EQ(element_from_json(to_json(x)), x);
    }
  }
}

TEST(Io, ElementSchema) {
  auto x = Element::of(Ring::symbolic(), Diagram::from_pairs(2, {{1, 4}, {2, 3}}));
  auto j = to_json(x);
  EXPECT_EQ(j["colour"], 2);
  EXPECT_EQ(j["terms"][0]["pairs"].dump(), "[[1,4],[2,3]]");
}

TEST(Io, Malformed) {
  EXPECT_THROW(element_from_json(json::parse(R"({"colour":2})")), FormatError);
  EXPECT_THROW(element_from_json(json::parse(R"({"colour":2,"terms":[{"pairs":[[1,3],[2,4]],"coeff":{"mode":"symbolic","terms":[[0,"1"]]}}]})")),
               FormatError);
  EXPECT_THROW(scalar_from_json(json::parse(R"({"mode":"weird"})")), FormatError);
  EXPECT_THROW(parse_delta("abc"), PreconditionError);
}

TEST(Io, GradedRoundTrip) {
  pa::testing::Rng rng(4);
  auto g = pa::testing::random_graded(Ring::symbolic(), 1, 2, rng);
  auto j = to_json(g);
  EXPECT_EQ(j["level"], 1);
  EXPECT_EQ(graded_from_json(j), g);
}

TEST(Io, TangleRoundTrip) {
  for (const auto& t : {mult_tangle(2), trace_tangle(3), jones_tangle(3), left_expectation_tangle(3, 1)}) {
    auto back = tangle_from_json(to_json(t));
    EXPECT_EQ(back, t);
  }
}

TEST(Io, Delta) {
  EXPECT_EQ(parse_delta("sym").mode(), Mode::symbolic);
  EXPECT_EQ(parse_delta("5/2"), Ring::rational(mpq_class(5, 2)));
  EXPECT_EQ(parse_delta("2.5"), Ring::floating(2.5));
}
