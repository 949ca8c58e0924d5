#include "fixtures.hpp"

#include "galois/error.hpp"

#include <gtest/gtest.h>

using namespace galois;
using galois::testing::courses;

TEST(ParseContext, TableOneCsv) {
  const auto ctx = courses();
  EXPECT_EQ(ctx.num_individuals(), 6u);
  EXPECT_EQ(ctx.num_properties(), 6u);
  const std::vector<bool> expected{true, true, true, true, true, false};
  for (std::size_t p = 0; p < 6; ++p) EXPECT_EQ(ctx.has(0, p), expected[p]) << p;
  EXPECT_EQ(ctx.properties().front(), "Algèbre");
  EXPECT_EQ(ctx.individuals().back(), "I6");
}

TEST(ParseContext, MinimalDocument) {
  const auto ctx = parse_context(",p\ni,1\n", ContextFormat::csv);
  EXPECT_EQ(ctx.num_individuals(), 1u);
  EXPECT_EQ(ctx.num_properties(), 1u);
  EXPECT_TRUE(ctx.has(0, 0));
}

TEST(ParseContext, CxtDocument) {
  const auto ctx = parse_context("B\n\n2\n3\n\na\nb\nx\ny\nz\nX.X\n.XX\n", ContextFormat::cxt);
  EXPECT_EQ(ctx.num_individuals(), 2u);
  EXPECT_EQ(ctx.num_properties(), 3u);
  EXPECT_TRUE(ctx.has(0, 2));
  EXPECT_FALSE(ctx.has(1, 0));
  EXPECT_EQ(parse_context(serialize_context(ctx, ContextFormat::cxt), ContextFormat::cxt), ctx);
}

TEST(ParseContext, CxtWithContextName) {
  const auto ctx = parse_context("B\nmy context\n1\n1\n\na\nx\nX\n", ContextFormat::cxt);
  EXPECT_TRUE(ctx.has(0, 0));
}

TEST(ParseContext, ErrorsNameLineAndColumn) {
  try {
    parse_context("R,a,b\ni1,1,0\ni2,1,2\n", ContextFormat::csv);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_context("R,a,b\ni1,1\n", ContextFormat::csv);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_context("X,a\ni,1\n", ContextFormat::csv), ParseError);
  EXPECT_THROW(parse_context("R,a,a\ni,1,1\n", ContextFormat::csv), ParseError);
  EXPECT_THROW(parse_context("R,a\ni,1\ni,0\n", ContextFormat::csv), ParseError);
  EXPECT_THROW(parse_context("R,a\n", ContextFormat::csv), ParseError);
  EXPECT_THROW(parse_context("", ContextFormat::csv), ParseError);
  EXPECT_THROW(parse_context("B\n\n1\n2\n\na\nx\ny\nX\n", ContextFormat::cxt), ParseError);
  EXPECT_THROW(parse_context("B\n\n1\n1\n\na\nx\nO\n", ContextFormat::cxt), ParseError);
  EXPECT_THROW(parse_context("C\n", ContextFormat::cxt), ParseError);
}

TEST(ParseContext, RandomRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ctx = galois::testing::random_context(rng, 5, 5);
    EXPECT_EQ(parse_context(serialize_context(ctx, ContextFormat::csv), ContextFormat::csv), ctx);
    EXPECT_EQ(parse_context(serialize_context(ctx, ContextFormat::cxt), ContextFormat::cxt), ctx);
  }
}

TEST(ParseContext, QuotedNamesSurviveRoundTrip) {
  const FormalContext ctx({"a, b", "c"}, {"x\"y", "z"}, {{true, false}, {false, true}});
  EXPECT_EQ(parse_context(serialize_context(ctx, ContextFormat::csv), ContextFormat::csv), ctx);
}

TEST(FormalContext, RejectsInvalidShapes) {
  EXPECT_THROW(FormalContext({}, {"p"}, {}), ValidationError);
  EXPECT_THROW(FormalContext({"i"}, {}, {{}}), ValidationError);
  EXPECT_THROW(FormalContext({"i", "i"}, {"p"}, {{true}, {false}}), ValidationError);
  EXPECT_THROW(FormalContext({"i"}, {"p"}, {{true, false}}), ValidationError);
}

TEST(Image, TableOne) {
  const auto ctx = courses();
  EXPECT_EQ(image(ctx, ctx.motif({"Algèbre"})), ctx.individual_set({"I1", "I2", "I5"}));
  EXPECT_EQ(image(ctx, ctx.no_properties()), ctx.all_individuals());
  EXPECT_EQ(image(ctx, ctx.motif({"Probabilité", "Algorithmique"})), ctx.individual_set({"I1", "I4", "I5"}));
  EXPECT_THROW(ctx.motif({"Chimie"}), LookupError);
  EXPECT_THROW(image(ctx, Motif(3)), LookupError);
}

TEST(IntentOf, TableOne) {
  const auto ctx = courses();
  EXPECT_EQ(intent_of(ctx, ctx.individual_set({"I1", "I2", "I5"})), ctx.motif({"Algèbre", "Algorithmique"}));
  EXPECT_EQ(intent_of(ctx, ctx.no_individuals()), ctx.all_properties());
  EXPECT_EQ(intent_of(ctx, ctx.individual_set({"I3"})), ctx.motif({"Probabilité"}));
  EXPECT_THROW(ctx.individual_set({"I9"}), LookupError);
}

TEST(Closure, TableOne) {
  const auto ctx = courses();
  EXPECT_EQ(closure(ctx, ctx.motif({"Algèbre"})), ctx.motif({"Algèbre", "Algorithmique"}));
  EXPECT_EQ(closure(ctx, ctx.motif({"QoS"})), ctx.motif({"Algèbre", "Algorithmique", "Probabilité", "QoS"}));
}

TEST(MotifSupport, TableOne) {
  const auto ctx = courses();
  EXPECT_EQ(motif_support(ctx, ctx.motif({"Algorithmique"})), Rational(4, 6));
  EXPECT_EQ(motif_support(ctx, ctx.no_properties()), Rational(1));
  EXPECT_EQ(motif_support(ctx, ctx.motif({"Algèbre", "Algorithmique", "Probabilité"})), Rational(2, 6));
}

TEST(ContextProperties, GaloisConnectionOnRandomContexts) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ctx = galois::testing::random_context(rng, 7, 7);
    const auto a = galois::testing::random_motif(rng, 7);
    const auto b = a | galois::testing::random_motif(rng, 7);
    EXPECT_TRUE(image(ctx, b).is_subset_of(image(ctx, a)));
    EXPECT_GE(motif_support(ctx, a), motif_support(ctx, b));
    const auto ca = closure(ctx, a);
    EXPECT_TRUE(a.is_subset_of(ca));
    EXPECT_EQ(closure(ctx, ca), ca);
    EXPECT_TRUE(ca.is_subset_of(closure(ctx, b)));
    EXPECT_EQ(image(ctx, a), image(ctx, ca));
    const auto e1 = image(ctx, b);
    const auto e2 = e1 | image(ctx, a);
    EXPECT_TRUE(intent_of(ctx, e2).is_subset_of(intent_of(ctx, e1)));
  }
}
