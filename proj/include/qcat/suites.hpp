#pragma once

// Named law suites (tnorm, kan, kz, module, filters) producing JSON reports.

#include <random>
#include <string>

#include "qcat/io.hpp"
#include "qcat/laws.hpp"

namespace qcat {

struct SuiteOptions {
  TNorm tnorm = TNorm::lukasiewicz();
  std::optional<ValueGrid> grid;  // default chosen per t-norm
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultEnumerationBound;
  std::size_t samples = 10000;
};

/// A closed exact grid for t: step 1/4, refined four times below the block
/// endpoint denominators; none when t has product blocks.
inline std::optional<ValueGrid> default_grid(const TNorm& t) {
  if (t.has_product_block()) return std::nullopt;
  Rational::BigInt den = 1;
  for (const auto& b : t.blocks())
    for (const Rational& e : {b.lo, b.hi}) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(e.to_big()));
  if (den > 64) return std::nullopt;
  std::vector<Value> seed = uniform_points(4 * den.convert_to<unsigned>());
  try {
    return grid_closure(seed, t, 256);
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

namespace detail {
/// The given or default grid, else {0,1}, which is closed under every t-norm.
inline ValueGrid suite_grid(const SuiteOptions& o, bool& crisp) {
  crisp = false;
  if (o.grid) return *o.grid;
  if (auto g = default_grid(o.tnorm)) return *g;
  crisp = true;
  return grid_validate({Value(Rational(0)), Value(Rational(1))}, o.tnorm);
}

struct Tally {
  json checks = json::object();
  bool pass = true;

  void record(const std::string& name, bool ok, const json& detail = nullptr) {
    json c;
    c["pass"] = ok;
    if (!detail.is_null()) c["detail"] = detail;
    checks[name] = c;
    pass = pass && ok;
  }
};

inline json finish(const std::string& suite, const SuiteOptions& o, Tally& t) {
  json j;
  j["suite"] = suite;
  j["tnorm"] = o.tnorm.str();
  j["seed"] = o.seed;
  j["pass"] = t.pass;
  j["checks"] = t.checks;
  return j;
}

inline std::vector<Value> float_samples(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Value> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(u(rng));
  return v;
}
}  // namespace detail

/// Algebraic laws of ⊗ and → exactly on the grid, or sampled in float mode.
inline json suite_tnorm(const SuiteOptions& o) {
  detail::Tally tally;
  const TNorm& t = o.tnorm;
  Rng rng(o.seed);
  const auto grid = o.grid ? o.grid : default_grid(t);
  if (grid) {
    const auto& g = *grid;
    const std::size_t n = g.size();
    bool comm = true, assoc = true, mono = true, unit = true, resid = true, divis = true, brute = true;
    for (std::size_t a = 0; a < n; ++a) {
      unit = unit && g.conj_index(a, n - 1) == a;
      for (std::size_t b = 0; b < n; ++b) {
        comm = comm && g.conj_index(a, b) == g.conj_index(b, a);
        if (a + 1 < n) mono = mono && g.conj_index(a, b) <= g.conj_index(a + 1, b);
        divis = divis && g.conj_index(a, g.imp_index(a, b)) == std::min(a, b);
        std::size_t best = 0;
        for (std::size_t z = 0; z < n; ++z)
          if (g.conj_index(a, z) <= b) best = z;
        brute = brute && best == g.imp_index(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          assoc = assoc && g.conj_index(g.conj_index(a, b), c) == g.conj_index(a, g.conj_index(b, c));
          resid = resid && ((g.conj_index(a, b) <= c) == (b <= g.imp_index(a, c)));
        }
      }
    }
    tally.record("commutative", comm);
    tally.record("associative", assoc);
    tally.record("monotone", mono);
    tally.record("unit", unit);
    tally.record("residuation", resid);
    tally.record("divisibility", divis);
    tally.record("imp_is_grid_residual", brute);
    tally.record("grid", true, g.str());
  } else {
    const auto xs = detail::float_samples(rng, 3 * o.samples);
    double worst = 0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Value &x = xs[3 * i], &y = xs[3 * i + 1], &z = xs[3 * i + 2];
      auto d = [](const Value& a, const Value& b) { return std::fabs(a.to_double() - b.to_double()); };
      worst = std::max({worst, d(conj(t, x, y), conj(t, y, x)), d(conj(t, conj(t, x, y), z), conj(t, x, conj(t, y, z))),
                        d(conj(t, x, Value(1.0)), x), d(conj(t, x, imp(t, x, y)), vmin(x, y))});
    }
    tally.record("float_laws", worst <= 1e-12, worst);
  }
  if (is_archimedean(t) && (t.kind() == TNorm::Kind::Product || t.kind() == TNorm::Kind::Lukasiewicz)) {
    const auto xs = detail::float_samples(rng, 2 * o.samples);
    double worst = 0;
    for (std::size_t i = 0; i < o.samples; ++i) {
      const Value rebuilt = pseudo_inverse(t, generator_eval(t, xs[2 * i]) + generator_eval(t, xs[2 * i + 1]));
      worst = std::max(worst, std::fabs(rebuilt.to_double() - conj(t, xs[2 * i], xs[2 * i + 1]).to_double()));
    }
    tally.record("generator_reconstruction", worst <= 1e-9, worst);
  }
  if (grid) {
    const auto w = negation_duality_check(grid->points(), t);
    const bool expect_involution = t.kind() == TNorm::Kind::Lukasiewicz;
    tally.record("negation_involution", w.has_value() != expect_involution,
                 w ? json(w->str()) : json("involution"));
  }
  tally.record("continuous_off_diagonal", true, continuous_off_diagonal(t));
  return detail::finish("tnorm", o, tally);
}

/// Kan adjunctions along random functors.
inline json suite_kan(const SuiteOptions& o) {
  detail::Tally tally;
  bool crisp = false;
  const std::optional<ValueGrid> grid = detail::suite_grid(o, crisp);
  tally.record("grid", true, json{{"points", grid->str()}, {"crisp_fallback", crisp}});
  Rng rng(o.seed);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::size_t exists_inv = 0, inv_forall = 0, retraction = 0, units = 0, functors = 0;
  for (int i = 0; i < 50; ++i) {
    auto rf = random_functor(*grid, size(rng), size(rng), rng);
    const auto &x = rf.source, &y = rf.target;
    ++functors;
    const bool ff = is_fully_faithful(x, y, rf.map);
    for (int k = 0; k < 20; ++k) {
      const Weight phi = random_weight(x, rng);
      const Weight gamma = random_weight(y, rng);
      const Weight ex = kan_exists(x, y, rf.map, phi);
      const Weight inv = kan_inverse(x, y, rf.map, gamma);
      const Weight fa = kan_forall(x, y, rf.map, phi);
      if (sub(y, ex, gamma) != sub(x, phi, inv)) ++exists_inv;
      if (sub(x, inv, phi) != sub(y, gamma, fa)) ++inv_forall;
      if (ff && !vec_equal(kan_inverse(x, y, rf.map, ex), phi)) ++retraction;
      // unit φ ≤ f⁻¹ f_∃ φ and counit f⁻¹ f_∀ φ ≤ φ
      if (!approx_equal(sub(x, phi, kan_inverse(x, y, rf.map, ex)), x.one()) ||
          !approx_equal(sub(x, kan_inverse(x, y, rf.map, fa), phi), x.one()))
        ++units;
    }
  }
  tally.record("exists_inverse_adjunction", exists_inv == 0, exists_inv);
  tally.record("inverse_forall_adjunction", inv_forall == 0, inv_forall);
  tally.record("fully_faithful_retraction", retraction == 0, retraction);
  tally.record("unit_counit", units == 0, units);
  tally.record("functors", true, functors);
  return detail::finish("kan", o, tally);
}

/// The KZ inequality and its equality pattern against is_cauchy.
inline json suite_kz(const SuiteOptions& o) {
  detail::Tally tally;
  bool crisp = false;
  const std::optional<ValueGrid> grid = detail::suite_grid(o, crisp);
  tally.record("grid", true, json{{"points", grid->str()}, {"crisp_fallback", crisp}});
  Rng rng(o.seed);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::size_t pairs = 0, violations = 0, inconsistent = 0;
  while (pairs < o.samples) {
    const auto x = random_category(*grid, size(rng), rng);
    std::vector<Weight> phis, gammas;
    for (int k = 0; k < 10; ++k) phis.push_back(random_weight(x, rng));
    for (int k = 0; k < 10; ++k) gammas.push_back(random_weight(x, rng));
    gammas.insert(gammas.end(), phis.begin(), phis.end());
    const auto r = kz_check(x, phis, gammas);
    pairs += r.pairs;
    violations += r.violations;
    inconsistent += r.inconsistencies;
  }
  tally.record("inequality", violations == 0, json{{"pairs", pairs}, {"violations", violations}});
  tally.record("equality_matches_cauchy", inconsistent == 0, inconsistent);
  return detail::finish("kz", o, tally);
}

/// Module ↔ category round trips on random grid modules.
inline json suite_module(const SuiteOptions& o) {
  detail::Tally tally;
  bool crisp = false;
  const std::optional<ValueGrid> grid = detail::suite_grid(o, crisp);
  tally.record("grid", true, json{{"points", grid->str()}, {"crisp_fallback", crisp}});
  Rng rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(1, 2);
  std::size_t bad_module = 0, bad_category = 0, bad_round = 0;
  for (int i = 0; i < 50; ++i) {
    const ModuleAction m = random_module(*grid, dim(rng), 5, rng);
    if (check_module(m)) ++bad_module;
    const EnrichedCategory c = module_to_category(m);
    if (validate(c) || !is_separated(c) || !is_cocomplete_over_grid(c)) {
      ++bad_category;
      continue;
    }
    const ModuleAction back = category_to_module(c);
    if (!modules_isomorphic(m, back) || !find_isomorphism(module_to_category(back), c)) ++bad_round;
  }
  tally.record("random_modules_valid", bad_module == 0, bad_module);
  tally.record("category_valid_cocomplete_separated", bad_category == 0, bad_category);
  tally.record("round_trip", bad_round == 0, bad_round);
  return detail::finish("module", o, tally);
}

/// Conical filter axioms, Kowalsky sums and the limit-filter CF4 search.
inline json suite_filters(const SuiteOptions& o) {
  detail::Tally tally;
  const TNorm& t = o.tnorm;
  bool crisp = false;
  const std::optional<ValueGrid> grid = detail::suite_grid(o, crisp);
  tally.record("grid", true, json{{"points", grid->str()}, {"crisp_fallback", crisp}});
  const auto& pts = grid->points();
  Rng rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  auto random_fuzzy = [&](std::size_t n) {
    Fuzzy f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(pts[pick(rng)]);
    return f;
  };
  const std::size_t n = 2;
  std::size_t failures = 0, sum_failures = 0, principal_failures = 0;
  std::vector<ConicalFilter> filters;
  for (int i = 0; i < 6; ++i) {
    // a chain of generators is directed
    Fuzzy a = random_fuzzy(n), b = random_fuzzy(n);
    for (std::size_t c = 0; c < n; ++c) b[c] = vmin(a[c], b[c]);
    filters.emplace_back(t, n, std::vector<Fuzzy>{a, b});
    if (!conical_filter_check(filters.back(), pts, o.bound).ok()) ++failures;
  }
  for (int i = 0; i < 4; ++i) {
    Fuzzy xi = random_fuzzy(filters.size());
    MetaFilter m{filters, {xi}};
    const ConicalFilter k = kowalsky_sum(m);
    if (!conical_filter_check(k, pts, o.bound).ok()) ++sum_failures;
  }
  for (std::size_t j = 0; j < filters.size(); ++j) {
    Fuzzy e(filters.size(), Value::zero(pts[0].mode()));
    e[j] = Value::one(pts[0].mode());
    const ConicalFilter k = kowalsky_sum(MetaFilter{filters, {e}});
    Fuzzy l = random_fuzzy(n);
    if (!approx_equal(k(l), filters[j](l))) ++principal_failures;
  }
  tally.record("generated_filters_cf1_cf4", failures == 0, failures);
  tally.record("kowalsky_sum_cf1_cf4", sum_failures == 0, sum_failures);
  tally.record("kowalsky_principal_identity", principal_failures == 0, principal_failures);
  const auto w = find_limit_cf4_witness(pts, t);
  json wj = nullptr;
  if (w) wj = json{{"t", w->t.str()}, {"s", w->s.str()}, {"limit", w->limit.str()}, {"at_lambda", w->at_lambda.str()},
                   {"at_shifted", w->at_shifted.str()}};
  // a witness must exist exactly when the residuum jumps off the diagonal
  tally.record("limit_filter_cf4_witness_iff_discontinuous", w.has_value() == !continuous_off_diagonal(t), wj);
  return detail::finish("filters", o, tally);
}

inline json run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "tnorm") return suite_tnorm(o);
  if (name == "kan") return suite_kan(o);
  if (name == "kz") return suite_kz(o);
  if (name == "module") return suite_module(o);
  if (name == "filters") return suite_filters(o);
  throw InvalidArgument("unknown suite '" + name + "' (tnorm, kan, kz, module, filters)");
}

}  // namespace qcat
