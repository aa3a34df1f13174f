// qcat: command-line front end for finite real-enriched categories.
//
// Exit codes: 0 pass, 1 semantic failure, 2 parse failure, 3 resource bound.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "qcat/balls.hpp"
#include "qcat/suites.hpp"

using namespace qcat;

namespace {

enum Exit { kPass = 0, kSemantic = 1, kParse = 2, kBound = 3 };

struct Flags {
  std::string tnorm;
  std::string grid;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultEnumerationBound;
};

std::optional<Mode> mode_flag(const Flags& f) {
  if (f.mode.empty()) return std::nullopt;
  if (f.mode == "exact") return Mode::Exact;
  if (f.mode == "float") return Mode::Float;
  throw ParseError("--mode must be exact or float");
}

/// `--grid 1/3` is a uniform step; anything with a comma is an explicit set.
std::vector<Value> grid_points_flag(const std::string& text) {
  if (text.find(',') != std::string::npos || text.find('{') != std::string::npos) return parse_grid_points(text);
  Rational step;
  try {
    step = Rational::parse(text);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  const auto b = step.to_big();
  const auto n = boost::multiprecision::denominator(b);
  if (boost::multiprecision::numerator(b) != 1 || n > 100000) throw ParseError("--grid step must be 1/n or a set {..}");
  return uniform_points(n.convert_to<unsigned>());
}

EnrichedCategory load_category(const std::string& path, const Flags& f) {
  EnrichedCategory c = category_from_json(read_json_file(path), mode_flag(f));
  if (!f.grid.empty()) {
    ValueGrid g = grid_validate(grid_points_flag(f.grid), c.tnorm());
    c = EnrichedCategory(c.tnorm(), c.hom(), std::move(g), c.names());
  }
  return c;
}

void require_valid(const EnrichedCategory& c) {
  if (auto v = validate(c)) throw Error(std::string(to_string(v->kind)) + " violation: " + v->message);
}

json violation_json(const EnrichedCategory& c, const Violation& v) {
  json j;
  j["kind"] = to_string(v.kind);
  j["message"] = v.message;
  json w = json::array();
  for (auto i : v.where) w.push_back(i < c.size() ? c.names()[i] : std::to_string(i));
  j["where"] = w;
  return j;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& v : w.values) a.push_back(value_to_json(v));
  return a;
}

json coweight_json(const Coweight& w) {
  json a = json::array();
  for (const auto& v : w.values) a.push_back(value_to_json(v));
  return a;
}

json report_json(const EnrichedCategory& x, const WeightClassReport& r) {
  json j;
  j["representable"] = r.representable;
  j["cauchy"] = r.cauchy;
  j["ideal"] = r.ideal;
  j["conically_flat"] = r.conically_flat;
  j["flat"] = r.flat;
  j["chain_ok"] = r.chain_ok;
  j["representing"] = r.representing ? json(x.names()[*r.representing]) : json(nullptr);
  j["left_adjoint"] = r.left_adjoint ? coweight_json(*r.left_adjoint) : json(nullptr);
  if (r.ideal_detail.witness)
    j["ideal_witness"] = {x.names()[r.ideal_detail.witness->first], x.names()[r.ideal_detail.witness->second]};
  if (const auto& w = r.flat_detail.conical.witness)
    j["conical_witness"] = {{"x1", x.names()[w->x1]}, {"x2", x.names()[w->x2]}, {"p1", w->p1.str()},
                            {"p2", w->p2.str()},      {"lhs", w->lhs.str()},      {"rhs", w->rhs.str()}};
  if (r.conically_flat) {
    j["flat_verdict"] = r.flat_detail.exhaustive ? "exhaustive" : "sampled";
    j["coweights_tested"] = r.flat_detail.coweights_tested;
  }
  if (const auto& w = r.flat_detail.witness)
    j["flat_witness"] = {{"r", w->r.str()}, {"psi", coweight_json(w->psi)}, {"lhs", w->lhs.str()}, {"rhs", w->rhs.str()}};
  return j;
}

int cmd_check(const std::string& file, const Flags& f) {
  const EnrichedCategory c = load_category(file, f);
  json j;
  j["file"] = file;
  j["size"] = c.size();
  json vs = json::array();
  if (auto v = validate(c)) vs.push_back(violation_json(c, *v));
  j["ok"] = vs.empty();
  j["violations"] = vs;
  std::cout << j.dump(2) << "\n";
  return vs.empty() ? kPass : kSemantic;
}

int cmd_classify(const std::string& cat_file, const std::string& weight_file, const Flags& f) {
  const EnrichedCategory c = load_category(cat_file, f);
  require_valid(c);
  const json wj = read_json_file(weight_file);
  Weight phi;
  phi.values = values_from_json(wj, c.mode());
  if (phi.size() != c.size())
    throw InvalidArgument("weight has " + std::to_string(phi.size()) + " entries, category has " +
                          std::to_string(c.size()));
  FlatOptions opt;
  opt.bound = f.bound;
  opt.seed = f.seed;
  json j = report_json(c, classify(c, phi, opt));
  j["seed"] = f.seed;
  j["weight"] = weight_json(phi);
  std::cout << j.dump(2) << "\n";
  return kPass;
}

int cmd_laws(const std::string& suite, const Flags& f) {
  SuiteOptions o;
  if (!f.tnorm.empty()) o.tnorm = TNorm::parse(f.tnorm);
  if (!f.grid.empty()) o.grid = grid_validate(grid_points_flag(f.grid), o.tnorm);
  if (mode_flag(f) == Mode::Float) o.grid.reset();
  o.seed = f.seed;
  o.bound = f.bound;
  const json j = run_suite(suite, o);
  std::cout << j.dump(2) << "\n";
  return j.at("pass").get<bool>() ? kPass : kSemantic;
}

int cmd_balls(const std::string& file, const Flags& f) {
  const EnrichedCategory c = load_category(file, f);
  require_valid(c);
  std::cout << balls_dot(c);
  return kPass;
}

int cmd_complete(const std::string& file, const Flags& f) {
  const EnrichedCategory c = load_category(file, f);
  require_valid(c);
  std::cout << category_to_json(cauchy_completion(c, f.bound).category).dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite real-enriched categories: checks, classification, law suites"};
  app.require_subcommand(1);
  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--tnorm", f.tnorm, "godel | product | lukasiewicz | ordinal[(lo,hi,inner),...]");
    sub->add_option("--grid", f.grid, "grid step 1/n or a set {0,1/2,1}");
    sub->add_option("--seed", f.seed, "PRNG seed");
    sub->add_option("--bound", f.bound, "enumeration bound");
    sub->add_option("--mode", f.mode, "exact | float");
  };

  std::string file, weight_file, suite;
  auto* check = app.add_subcommand("check", "validate the category axioms");
  check->add_option("file", file)->required();
  common(check);
  auto* cls = app.add_subcommand("classify", "classify a weight");
  cls->add_option("category", file)->required();
  cls->add_option("weight", weight_file)->required();
  common(cls);
  auto* laws = app.add_subcommand("laws", "run a law suite: tnorm, kan, kz, module, filters");
  laws->add_option("suite", suite)->required();
  common(laws);
  auto* balls = app.add_subcommand("balls", "formal-ball order as DOT");
  balls->add_option("file", file)->required();
  common(balls);
  auto* complete = app.add_subcommand("complete", "Cauchy completion as category JSON");
  complete->add_option("file", file)->required();
  common(complete);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kParse;
  }

  try {
    if (*check) return cmd_check(file, f);
    if (*cls) return cmd_classify(file, weight_file, f);
    if (*laws) return cmd_laws(suite, f);
    if (*balls) return cmd_balls(file, f);
    if (*complete) return cmd_complete(file, f);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kSemantic;
}
