#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcat/grid.hpp"
#include "qcat/tnorm.hpp"

using namespace qcat;

namespace {

Value q(const char* s) { return Value::parse_exact(s); }
Value q(std::int64_t n, std::int64_t d) { return Value(Rational(n, d)); }

TNorm luk_block_quarter_half() {
  return TNorm::ordinal_sum({{Rational(1, 4), Rational(1, 2), Archimedean::Lukasiewicz}});
}

// Oracle: the ordinal-sum conjunction written directly from its definition
// for a single Łukasiewicz block [a,b], in doubles.
double ordinal_luk_conj(double a, double b, double x, double y) {
  if (a < x && x < b && a < y && y < b) return a + (b - a) * std::max(0.0, (x - a) / (b - a) + (y - a) / (b - a) - 1.0);
  return std::min(x, y);
}

// Oracle: residuum as the largest grid z with x ⊗ z ≤ y.
Value brute_residual(const TNorm& t, const std::vector<Value>& pts, const Value& x, const Value& y) {
  Value best = pts.front();
  for (const auto& z : pts)
    if (leq(conj(t, x, z), y) && best < z) best = z;
  return best;
}

}  // namespace

TEST(TNorm, LukasiewiczConj) {
  EXPECT_EQ(conj(TNorm::lukasiewicz(), q("0.7"), q("0.6")), q("3/10"));
  EXPECT_EQ(conj(TNorm::lukasiewicz(), q("0.2"), q("0.7")), q("0"));
}

TEST(TNorm, UnitLaw) {
  for (const auto& t : {TNorm::godel(), TNorm::product(), TNorm::lukasiewicz(), luk_block_quarter_half()})
    for (const char* x : {"0", "1/7", "1/4", "3/8", "1/2", "9/10", "1"}) EXPECT_EQ(conj(t, q(x), q("1")), q(x)) << t.str();
}

TEST(TNorm, OrdinalSumHalfBlock) {
  const TNorm t = TNorm::ordinal_sum({{Rational(0), Rational(1, 2), Archimedean::Lukasiewicz}});
  EXPECT_EQ(conj(t, q("0.2"), q("0.3")), q("0"));
  EXPECT_EQ(conj(t, q("0.2"), q("0.7")), q("0.2"));
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double expect = ordinal_luk_conj(0.0, 0.5, i / 20.0, j / 20.0);
      EXPECT_NEAR(conj(t, q(i, 20), q(j, 20)).to_double(), expect, 1e-15);
    }
}

TEST(TNorm, Implications) {
  EXPECT_EQ(imp(TNorm::godel(), q("0.7"), q("0.4")), q("0.4"));
  EXPECT_EQ(imp(TNorm::product(), q("0.5"), q("0.25")), q("0.5"));
  EXPECT_EQ(imp(TNorm::lukasiewicz(), q("0.7"), q("0.4")), q("0.7"));
  EXPECT_EQ(imp(TNorm::godel(), q("0.4"), q("0.7")), q("1"));
}

TEST(TNorm, ImpIsGridResidual) {
  const auto pts = uniform_points(12);
  for (const auto& t : {TNorm::godel(), TNorm::lukasiewicz(), luk_block_quarter_half()})
    for (const auto& x : pts)
      for (const auto& y : pts) EXPECT_EQ(imp(t, x, y), brute_residual(t, pts, x, y)) << t.str() << " " << x << " " << y;
}

TEST(TNorm, Power) {
  EXPECT_EQ(power(TNorm::lukasiewicz(), q("0.6"), 2), q("0.2"));
  EXPECT_EQ(power(TNorm::lukasiewicz(), q("0.6"), 3), q("0"));
  EXPECT_EQ(power(TNorm::product(), q("0.5"), 2), q("0.25"));
  EXPECT_EQ(power(TNorm::product(), q("0.3"), 1), q("0.3"));
  EXPECT_THROW(power(TNorm::product(), q("0.3"), 0), InvalidArgument);
  Value prev = q("9/10");
  for (unsigned n = 2; n < 8; ++n) {
    Value cur = power(TNorm::product(), q("9/10"), n);
    EXPECT_LE(cur, prev);
    prev = cur;
  }
}

TEST(TNorm, Idempotents) {
  const auto g5 = grid_validate(uniform_points(4), TNorm::godel());
  EXPECT_EQ(idempotents(g5).size(), 5u);
  const auto l3 = grid_validate(uniform_points(3), TNorm::lukasiewicz());
  EXPECT_EQ(idempotents(l3), (std::vector<Value>{q("0"), q("1")}));
  const auto o5 = grid_validate(uniform_points(4), luk_block_quarter_half());
  EXPECT_EQ(idempotents(o5).size(), 5u);
}

TEST(TNorm, Archimedean) {
  EXPECT_TRUE(is_archimedean(TNorm::product()));
  EXPECT_TRUE(is_archimedean(TNorm::lukasiewicz()));
  EXPECT_FALSE(is_archimedean(TNorm::godel()));
  EXPECT_FALSE(is_archimedean(TNorm::ordinal_sum({{Rational(0), Rational(1, 2), Archimedean::Lukasiewicz}})));
  EXPECT_TRUE(is_archimedean(TNorm::ordinal_sum({{Rational(0), Rational(1), Archimedean::Product}})));
}

TEST(TNorm, Generators) {
  const TNorm p = TNorm::product(), l = TNorm::lukasiewicz();
  EXPECT_DOUBLE_EQ(generator_eval(p, Value(0.5)).to_double(), std::log(0.5));
  EXPECT_NEAR(pseudo_inverse(p, Extended{false, std::log(0.25)}).to_double(), 0.25, 1e-15);
  EXPECT_TRUE(generator_eval(p, Value(0.0)).neg_inf);
  EXPECT_THROW(generator_eval(p, q("1/2")), ExactUnsupported);
  EXPECT_EQ(std::get<Rational>(generator_eval(l, q("0.7")).finite), Rational(-3, 10));
  EXPECT_EQ(pseudo_inverse(l, Extended{false, Rational(-7, 10)}), q("0.3"));
  EXPECT_EQ(pseudo_inverse(l, Extended{false, Rational(-3, 2)}), q("0"));
  EXPECT_EQ(pseudo_inverse(l, Extended{false, Rational(0)}), q("1"));
  EXPECT_EQ(pseudo_inverse(p, Extended{false, 0.0}), Value(1.0));
  EXPECT_THROW(generator_eval(TNorm::godel(), q("1/2")), InvalidArgument);
}

TEST(TNorm, GeneratorReconstructionSampled) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& t : {TNorm::product(), TNorm::lukasiewicz()})
    for (int i = 0; i < 2000; ++i) {
      const Value x(u(rng)), y(u(rng));
      const Value rebuilt = pseudo_inverse(t, generator_eval(t, x) + generator_eval(t, y));
      EXPECT_NEAR(rebuilt.to_double(), conj(t, x, y).to_double(), 1e-9);
    }
}

TEST(TNorm, ContinuousOffDiagonal) {
  EXPECT_TRUE(continuous_off_diagonal(TNorm::godel()));
  EXPECT_TRUE(continuous_off_diagonal(TNorm::product()));
  EXPECT_TRUE(continuous_off_diagonal(TNorm::lukasiewicz()));
  EXPECT_FALSE(continuous_off_diagonal(luk_block_quarter_half()));
  EXPECT_TRUE(continuous_off_diagonal(TNorm::ordinal_sum({{Rational(1, 4), Rational(1, 2), Archimedean::Product}})));
}

TEST(TNorm, LeftLimitJumpsAtBlockBottom) {
  const TNorm t = luk_block_quarter_half();
  // at the bottom of the block the residuum jumps: s → 1/4 is 7/16, the
  // limit from below is 1/4
  EXPECT_EQ(imp(t, q("5/16"), q("1/4")), q("7/16"));
  EXPECT_EQ(imp_left_limit(t, q("5/16"), q("1/4")), q("1/4"));
  EXPECT_EQ(imp_left_limit(TNorm::lukasiewicz(), q("1/2"), q("1/4")), q("3/4"));
  EXPECT_EQ(imp_left_limit(TNorm::godel(), q("1/8"), q("1/4")), q("1"));
}

TEST(TNorm, ExactProductStaysRational) {
  EXPECT_EQ(conj(TNorm::product(), q("1/3"), q("3/7")), q("1/7"));
  EXPECT_EQ(imp(TNorm::product(), q("3/4"), q("1/2")), q("2/3"));
}

TEST(TNorm, ModeMixIsAnError) { EXPECT_THROW(conj(TNorm::godel(), q("1/2"), Value(0.5)), ModeMismatch); }

TEST(TNorm, ParseAndPrint) {
  EXPECT_EQ(TNorm::parse("lukasiewicz"), TNorm::lukasiewicz());
  const TNorm t = TNorm::parse("ordinal[(1/4,1/2,lukasiewicz),(1/2,1,product)]");
  ASSERT_EQ(t.blocks().size(), 2u);
  EXPECT_EQ(TNorm::parse(t.str()), t);
  EXPECT_THROW(TNorm::parse("drastic"), ParseError);
  EXPECT_THROW(TNorm::parse("ordinal[(1/2,1/4,product)]"), ParseError);
  EXPECT_THROW(TNorm::parse("ordinal[(0,1/2,product),(1/4,1,product)]"), ParseError);
}

TEST(TNorm, DoubleNegation) {
  const auto pts = uniform_points(10);
  for (const auto& x : pts) {
    const Value z = Value::zero(Mode::Exact);
    EXPECT_EQ(imp(TNorm::lukasiewicz(), imp(TNorm::lukasiewicz(), x, z), z), x);
  }
  const Value h = q("1/2"), z = q("0");
  EXPECT_NE(imp(TNorm::godel(), imp(TNorm::godel(), h, z), z), h);
  EXPECT_NE(imp(TNorm::product(), imp(TNorm::product(), h, z), z), h);
}
