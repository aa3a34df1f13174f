#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qcat;
using fx::q;
using fx::w;

namespace {

// Oracle: all grid vectors filtered by the weight axiom, written directly.
std::size_t count_weights_brute(const EnrichedCategory& x) {
  const ValueGrid& g = *x.grid();
  std::size_t count = 0;
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = leq(conj(x.tnorm(), g[idx[b]], x(a, b)), g[idx[a]]);
    count += ok;
    std::size_t k = 0;
    while (k < n && ++idx[k] == g.size()) idx[k++] = 0;
    if (k == n) return count;
  }
}

std::size_t index_in(const ValueGrid& g, const Value& v) { return *g.index_of(v); }

}  // namespace

TEST(Presheaf, YonedaExamples) {
  const auto a2 = fx::a2();
  EXPECT_EQ(yoneda(a2, 0), w({"1", "0"}));
  EXPECT_EQ(yoneda(a2, 1), w({"2/3", "1"}));
  EXPECT_EQ(coyoneda(a2, 0), fx::cw({"1", "2/3"}));
  EXPECT_EQ(yoneda(fx::d2(), 1), w({"0", "1"}));
  EXPECT_EQ(sub(a2, yoneda(a2, 0), yoneda(a2, 1)), q("2/3"));
}

TEST(Presheaf, YonedaExactOnRandomCategories) {
  fx::Rng rng(21);
  const ValueGrid g = fx::luk_grid(6);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_category(g, 1 + i % 4, rng);
    for (int k = 0; k < 30; ++k) {
      const Weight phi = random_weight(x, rng);
      ASSERT_TRUE(is_weight(x, phi));
      EXPECT_EQ(sub(x, phi, phi), q("1"));
      for (std::size_t a = 0; a < x.size(); ++a) EXPECT_EQ(sub(x, yoneda(x, a), phi), phi[a]);
    }
  }
}

TEST(Presheaf, WeightValidation) {
  const auto a2 = fx::a2();
  EXPECT_TRUE(is_weight(a2, w({"1", "2/3"})));
  // φ(b) ⊗ X(a,b) ≤ φ(a) fails for (0,1)
  EXPECT_FALSE(is_weight(a2, w({"0", "1"})));
  EXPECT_THROW(make_weight(a2, {q("0"), q("1")}), InvalidArgument);
  EXPECT_TRUE(is_coweight(a2, fx::cw({"0", "1"})));
  EXPECT_FALSE(is_coweight(a2, fx::cw({"1", "0"})));
}

TEST(Presheaf, PairingExamplesAndSubFormula) {
  const auto d2 = fx::d2();
  EXPECT_EQ(pairing(d2, w({"1", "0"}), fx::cw({"0", "1"})), q("0"));
  fx::Rng rng(4);
  for (const auto& g : {fx::luk_grid(6), fx::godel_grid(4)}) {
    for (int i = 0; i < 40; ++i) {
      const auto x = random_category(g, 1 + i % 4, rng);
      for (std::size_t a = 0; a < x.size(); ++a) EXPECT_EQ(pairing(x, yoneda(x, a), coyoneda(x, a)), q("1"));
      const Weight phi = random_weight(x, rng);
      const Coweight psi = random_coweight(x, rng);
      EXPECT_EQ(pairing_via_sub(x, phi, psi), pairing(x, phi, psi));
    }
  }
}

TEST(Presheaf, ColimitExamples) {
  const auto a2 = fx::a2();
  EXPECT_EQ(colim(a2, yoneda(a2, 1)), 1u);
  EXPECT_FALSE(colim(fx::d2(), w({"1", "1"})));
  EXPECT_EQ(isbell_ub(fx::d2(), w({"1", "1"})), fx::cw({"0", "0"}));

  // grid-V: colim φ is the element φ(1)
  const ValueGrid g = fx::luk_grid(3);
  const auto v = grid_category(g);
  for (const auto& phi : enumerate_grid_weights(v)) {
    auto c = colim(v, phi);
    ASSERT_TRUE(c);
    EXPECT_EQ(v.grid()->points()[*c], phi[g.size() - 1]);
  }
}

TEST(Presheaf, ColimitDefiningProperty) {
  fx::Rng rng(8);
  const ValueGrid g = fx::luk_grid(4);
  for (int i = 0; i < 40; ++i) {
    const auto x = random_category(g, 1 + i % 4, rng);
    for (const auto& phi : enumerate_grid_weights(x)) {
      auto c = colim(x, phi);
      if (!c) continue;
      for (std::size_t a = 0; a < x.size(); ++a) EXPECT_EQ(x(*c, a), sub(x, phi, yoneda(x, a)));
      for (std::size_t d = 0; d < x.size(); ++d)
        EXPECT_TRUE(!vec_equal(coyoneda(x, d), coyoneda(x, *c)) || isomorphic_elements(x, d, *c));
    }
  }
}

TEST(Presheaf, TensorsAndCocompleteness) {
  const ValueGrid g = fx::luk_grid(3);
  const auto v = grid_category(g);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_EQ(tensor(v, g[r], a), g.conj_index(r, a));
      EXPECT_EQ(cotensor(v, g[r], a), g.imp_index(r, a));
    }
  const auto a2 = fx::a2();
  EXPECT_EQ(tensor(a2, q("1"), 1), 1u);
  EXPECT_FALSE(tensor(a2, q("1/3"), 1));
  EXPECT_TRUE(is_cocomplete_over_grid(v));
  EXPECT_FALSE(is_cocomplete_over_grid(fx::d2()));
  EXPECT_FALSE(is_cocomplete_over_grid(a2));
}

TEST(Presheaf, WeightedColimits) {
  fx::Rng rng(12);
  const ValueGrid g = fx::luk_grid(4);
  const auto v = grid_category(g);
  for (int i = 0; i < 40; ++i) {
    const auto x = random_category(g, 1 + i % 4, rng);
    FiniteMap id(x.size());
    std::iota(id.begin(), id.end(), 0);
    const Weight phi = random_weight(x, rng);
    EXPECT_EQ(weighted_colim(x, x, id, phi), colim(x, phi));
    for (std::size_t k = 0; k < x.size(); ++k) {
      auto c = weighted_colim(x, x, id, yoneda(x, k));
      ASSERT_TRUE(c);
      EXPECT_TRUE(isomorphic_elements(x, *c, k));
    }
    // a coweight is a functor into grid-V; its φ-weighted colimit is the pairing
    const Coweight psi = random_coweight(x, rng);
    FiniteMap f;
    for (const auto& val : psi.values) f.push_back(index_in(g, val));
    ASSERT_TRUE(is_functor(x, v, f));
    auto c = weighted_colim(x, v, f, phi);
    ASSERT_TRUE(c);
    EXPECT_EQ(g[*c], pairing(x, phi, psi));
    EXPECT_EQ(join_of_tensors(x, v, f, phi), c);
  }
}

TEST(Presheaf, ColimitInWeightCategoryIsComposite) {
  // P = all grid weights of A2 with hom sub; colim Φ = Φ∘(y_X)_*
  const auto a2 = fx::a2();
  const auto weights = enumerate_grid_weights(a2);
  const std::size_t k = weights.size();
  Rel h(k, k, q("0"));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h(i, j) = sub(a2, weights[i], weights[j]);
  const EnrichedCategory p(a2.tnorm(), h, a2.grid());
  ASSERT_FALSE(validate(p));
  fx::Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Weight big = random_weight(p, rng);
    Weight expected;
    for (std::size_t x = 0; x < a2.size(); ++x) {
      Value acc = q("0");
      for (std::size_t i = 0; i < k; ++i) acc = vmax(acc, conj(a2.tnorm(), big[i], weights[i][x]));
      expected.values.push_back(acc);
    }
    auto c = colim(p, big);
    ASSERT_TRUE(c);
    EXPECT_EQ(weights[*c], expected);
  }
}

TEST(Presheaf, KanExtensions) {
  const auto a2 = fx::a2();
  const FiniteMap id = {0, 1};
  for (const auto& phi : enumerate_grid_weights(a2)) {
    EXPECT_EQ(kan_exists(a2, a2, id, phi), phi);
    EXPECT_EQ(kan_inverse(a2, a2, id, phi), phi);
    EXPECT_EQ(kan_forall(a2, a2, id, phi), phi);
  }
  fx::Rng rng(31);
  const ValueGrid g = fx::luk_grid(6);
  for (int i = 0; i < 50; ++i) {
    auto rf = random_functor(g, 1 + i % 4, 1 + (i / 4) % 4, rng);
    const auto &x = rf.source, &y = rf.target;
    const auto& f = rf.map;
    for (std::size_t a = 0; a < x.size(); ++a) EXPECT_EQ(kan_exists(x, y, f, yoneda(x, a)), yoneda(y, f[a]));
    const bool ff = is_fully_faithful(x, y, f);
    for (int k = 0; k < 20; ++k) {
      const Weight phi = random_weight(x, rng);
      const Weight gamma = random_weight(y, rng);
      EXPECT_EQ(sub(y, kan_exists(x, y, f, phi), gamma), sub(x, phi, kan_inverse(x, y, f, gamma)));
      EXPECT_EQ(sub(x, kan_inverse(x, y, f, gamma), phi), sub(y, gamma, kan_forall(x, y, f, phi)));
      if (ff) {
        EXPECT_EQ(kan_inverse(x, y, f, kan_exists(x, y, f, phi)), phi);
        EXPECT_EQ(kan_inverse(x, y, f, kan_forall(x, y, f, phi)), phi);
      }
      // covariant side, ordered pointwise: f†∃ ⊣ f†⁻¹ ⊣ f†∀
      const Coweight psi = random_coweight(x, rng);
      const Coweight mu = random_coweight(y, rng);
      EXPECT_EQ(sub_dual(y, mu, kan_dag_exists(x, y, f, psi)), sub_dual(x, kan_dag_inverse(x, y, f, mu), psi));
      EXPECT_EQ(sub_dual(x, psi, kan_dag_inverse(x, y, f, mu)), sub_dual(y, kan_dag_forall(x, y, f, psi), mu));
      EXPECT_TRUE(is_weight(y, kan_forall(x, y, f, phi)));
      EXPECT_TRUE(is_coweight(y, kan_dag_exists(x, y, f, psi)));
    }
  }
}

TEST(Presheaf, IsbellAdjunction) {
  const auto a2 = fx::a2();
  for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(isbell_ub(a2, yoneda(a2, a)), coyoneda(a2, a));
  fx::Rng rng(17);
  const ValueGrid g = fx::luk_grid(6);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_category(g, 1 + i % 5, rng);
    for (int k = 0; k < 10; ++k) {
      const Weight phi = random_weight(x, rng);
      const Coweight psi = random_coweight(x, rng);
      EXPECT_EQ(sub(x, phi, isbell_lb(x, psi)), sub_dual(x, isbell_ub(x, phi), psi));
      EXPECT_EQ(isbell_lb(x, isbell_ub(x, isbell_lb(x, psi))), isbell_lb(x, psi));
      EXPECT_TRUE(is_coweight(x, isbell_ub(x, phi)));
      EXPECT_TRUE(is_weight(x, isbell_lb(x, psi)));
    }
  }
}

TEST(Presheaf, EnumerationMatchesBruteForce) {
  EXPECT_EQ(enumerate_grid_weights(fx::d2()).size(), 16u);
  fx::Rng rng(6);
  for (const auto& g : {fx::luk_grid(4), fx::godel_grid(3)}) {
    for (int i = 0; i < 20; ++i) {
      const auto x = random_category(g, 1 + i % 4, rng);
      const auto ws = enumerate_grid_weights(x);
      EXPECT_EQ(ws.size(), count_weights_brute(x));
      for (const auto& phi : ws) EXPECT_TRUE(is_weight(x, phi));
      EXPECT_EQ(enumerate_grid_coweights(x).size(), count_weights_brute(opposite(x)));
    }
  }
  EXPECT_THROW(enumerate_grid_weights(fx::g5(), 100), BoundExceeded);
}

TEST(Presheaf, ClosureIsLeastWeightAbove) {
  fx::Rng rng(13);
  const ValueGrid g = fx::luk_grid(4);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_category(g, 1 + i % 4, rng);
    std::vector<Value> v;
    for (std::size_t a = 0; a < x.size(); ++a) v.push_back(g[pick(rng)]);
    const Weight c = weight_closure(x, v);
    EXPECT_TRUE(is_weight(x, c));
    for (const auto& phi : enumerate_grid_weights(x)) {
      bool above = true;
      for (std::size_t a = 0; a < x.size(); ++a) above = above && leq(v[a], phi[a]);
      if (!above) continue;
      for (std::size_t a = 0; a < x.size(); ++a) EXPECT_TRUE(leq(c[a], phi[a]));
    }
  }
}
