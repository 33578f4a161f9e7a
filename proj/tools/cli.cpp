#include "cli.hpp"

#include "extrainv/fibered.hpp"
#include "extrainv/io.hpp"
#include "extrainv/oracle.hpp"
#include "extrainv/render.hpp"
#include "extrainv/subgroup.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace extrainv::cli {

namespace {

using io::json;

struct Globals {
  double tol = kDefaultTolerance;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string out;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : path_(g.out), out_(out) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw io::ParseError("cannot write '" + path_ + "'");
    file << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }

 private:
  std::string path_;
  std::ostream& out_;
};

struct Loaded {
  SubgroupSpec spec;
  ClosedSubgroup group;
};

Loaded load_subgroup(const std::string& path) {
  SubgroupSpec spec = io::parse_subgroup_spec(io::read_json(path));
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(e.what());
  }
  return {spec, ClosedSubgroup::canonicalize(spec)};
}

GeneratorSet load_generators(const std::string& path) {
  try {
    return GeneratorSet(io::parse_generators(io::read_json(path)));
  } catch (const std::invalid_argument& e) {
    throw io::ParseError(e.what());
  }
}

void require_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw io::ParseError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

json tiles_json(const std::vector<Tile>& tiles) {
  json out = json::array();
  for (const auto& t : tiles) out.push_back(t);
  return out;
}

std::vector<ClosedSubgroup> load_candidates(const std::string& path) {
  const json doc = io::read_json(path);
  const json* list = &doc;
  if (doc.is_object() && doc.contains("candidates")) list = &doc.at("candidates");
  if (!list->is_array()) throw io::ParseError("candidates must be a list of subgroups");
  std::vector<ClosedSubgroup> out;
  for (const auto& j : *list) {
    SubgroupSpec spec = io::parse_subgroup_spec(j);
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw io::ParseError(e.what());
    }
    out.push_back(ClosedSubgroup::canonicalize(spec));
  }
  return out;
}

// Coarse random supergroups: Z^d refined along random axes by small denominators.
std::vector<ClosedSubgroup> random_candidates(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<ClosedSubgroup> out;
  for (std::size_t c = 0; c < count; ++c) {
    SubgroupSpec spec;
    spec.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      RatVector e(dim, Rational(0));
      e[i] = 1;
      const int k = kind(rng);
      if (k == 0) {
        spec.continuous.push_back(e);
      } else if (k == 1) {
        e[i] = Rational(1, den(rng));
        spec.discrete.push_back(e);
      }
    }
    out.push_back(ClosedSubgroup::canonicalize(spec));
  }
  return out;
}

std::vector<std::complex<double>> complex_vector(const json& j) {
  if (!j.is_array()) throw io::ParseError("expected a vector of numbers or [re, im] pairs");
  std::vector<std::complex<double>> v;
  for (const auto& e : j) {
    if (e.is_number()) v.emplace_back(e.get<double>(), 0.0);
    else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
      v.emplace_back(e[0].get<double>(), e[1].get<double>());
    else throw io::ParseError("malformed complex entry " + e.dump());
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extra invariance of shift-invariant spaces", "extrainv"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Relative singular-value tolerance")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for per-cell work")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--out", g.out, "Write the primary output to this file");

  std::string subgroup_path, generators_path, second_path, third_path;
  std::string window_text, grid_text, points_text, samples_text, method_name = "rank";
  std::int64_t bound = 6, denominator = 12;
  std::size_t random_count = 0;
  int unit = 40;

  auto* canon = app.add_subcommand("canon", "Canonical form of a closed subgroup");
  canon->add_option("subgroup", subgroup_path)->required();

  auto* dual_cmd = app.add_subcommand("dual", "Basis of the dual lattice M*");
  dual_cmd->add_option("subgroup", subgroup_path)->required();
  dual_cmd->add_option("--bound", bound, "Also list M* inside [-B, B]^d");

  auto* contains_cmd = app.add_subcommand("contains", "Exact membership of rational points");
  contains_cmd->add_option("subgroup", subgroup_path)->required();
  contains_cmd->add_option("--point", points_text, "Points 'p/q,...' separated by ';'")->required();

  auto* test_cmd = app.add_subcommand("test", "Decide M-invariance of a generated space");
  test_cmd->add_option("generators", generators_path)->required();
  test_cmd->add_option("subgroup", subgroup_path)->required();
  test_cmd->add_option("--method", method_name, "rank, fiber or modulation");
  test_cmd->add_option("--samples", samples_text, "Modulation samples 'p/q,...' separated by ';'");

  auto* construct = app.add_subcommand("construct", "Exactly M-invariant generator on a window");
  construct->add_option("subgroup", subgroup_path)->required();
  construct->add_option("--window", window_text, "lo..hi per axis, comma separated")->required();
  construct->add_option("--grid", grid_text, "Cells per axis, comma separated")->required();

  auto* support = app.add_subcommand("support", "Support and dimension-function measures");
  support->add_option("generators", generators_path)->required();
  support->add_option("subgroup", subgroup_path)->required();

  auto* project = app.add_subcommand("project", "Project g onto the M-invariant space generated by f");
  project->add_option("f", generators_path)->required();
  project->add_option("g", second_path)->required();
  project->add_option("subgroup", subgroup_path)->required();

  auto* sweep = app.add_subcommand("sweep", "Rank test over a family of candidate subgroups");
  sweep->add_option("generators", generators_path)->required();
  sweep->add_option("candidates", second_path, "JSON list of subgroups");
  sweep->add_option("--random", random_count, "Append random candidates drawn with --seed");

  auto* render = app.add_subcommand("render", "SVG picture of the residue partition (d <= 2)");
  render->add_option("subgroup", subgroup_path)->required();
  render->add_option("--window", window_text, "lo..hi per axis, comma separated")->required();
  render->add_option("--unit", unit, "Pixels per unit length")->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "");
  oracle_cmd->group("");
  oracle_cmd->require_subcommand(1);
  auto* o_member = oracle_cmd->add_subcommand("membership");
  o_member->add_option("subgroup", subgroup_path)->required();
  o_member->add_option("--point", points_text)->required();
  auto* o_dual = oracle_cmd->add_subcommand("dual");
  o_dual->add_option("subgroup", subgroup_path)->required();
  auto* o_span = oracle_cmd->add_subcommand("span");
  o_span->add_option("input", third_path, "{\"vector\": [...], \"spanning\": [[...], ...]}")->required();
  for (auto* sub : {o_member, o_dual}) {
    sub->add_option("--bound", bound);
    sub->add_option("--denominator", denominator);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const Emitter emit(g, out);
  const FiberOptions options{g.tol, g.threads};
  try {
    if (canon->parsed()) {
      const auto [spec, m] = load_subgroup(subgroup_path);
      emit.write(io::canonical_to_json(spec, m));
      return kExitInvariant;
    }
    if (dual_cmd->parsed()) {
      const auto [spec, m] = load_subgroup(subgroup_path);
      json doc{{"d", m.dim()}, {"basis", io::columns_to_json(dual(m))}};
      if (dual_cmd->count("--bound") > 0) {
        if (bound < 0) throw io::ParseError("--bound must be nonnegative");
        std::vector<Tile> members;
        std::vector<std::string> range(m.dim(), std::to_string(-bound) + ".." + std::to_string(bound));
        std::string text;
        for (std::size_t i = 0; i < range.size(); ++i) text += (i ? "," : "") + range[i];
        for (const auto& k : io::parse_window(text))
          if (dual_contains(m, k)) members.push_back(k);
        doc["bound"] = bound;
        doc["members"] = tiles_json(members);
      }
      emit.write(doc);
      return kExitInvariant;
    }
    if (contains_cmd->parsed()) {
      const auto [spec, m] = load_subgroup(subgroup_path);
      json results = json::array();
      bool all = true;
      for (const auto& x : io::parse_points(points_text)) {
        require_dim(x.size(), m.dim());
        const bool member = contains(m, x);
        all = all && member;
        json jx = json::array();
        for (const auto& e : x) jx.push_back(io::rational_to_json(e));
        results.push_back(json{{"point", jx}, {"member", member}});
      }
      emit.write(json{{"results", results}, {"all_members", all}});
      return all ? kExitInvariant : kExitNotInvariant;
    }
    if (test_cmd->parsed()) {
      const GeneratorSet phi = load_generators(generators_path);
      const auto [spec, m] = load_subgroup(subgroup_path);
      require_dim(phi.dim(), m.dim());
      TestMethod method;
      try {
        method = parse_test_method(method_name);
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(e.what());
      }
      if (partition_tiles(m, phi.window()).size() < 2)
        err << "warning: the window meets a single residue class; every generator set passes\n";
      InvarianceReport report;
      if (method == TestMethod::rank) {
        report = test_invariance_rank(phi, m, options);
      } else if (method == TestMethod::fiber) {
        report = test_invariance_fiber(phi, m, options);
      } else {
        std::vector<RatVector> samples = samples_text.empty()
                                             ? default_modulation_samples(m, phi.window())
                                             : io::parse_points(samples_text);
        for (const auto& s : samples) {
          require_dim(s.size(), m.dim());
          if (!contains(m, s)) throw io::ParseError("modulation sample is not a member of M");
        }
        report = test_invariance_modulation(phi, m, samples, options);
      }
      emit.write(io::report_to_json(report));
      return report.verdict ? kExitInvariant : kExitNotInvariant;
    }
    if (construct->parsed()) {
      const auto [spec, m] = load_subgroup(subgroup_path);
      const auto window = io::parse_window(window_text);
      auto grid = io::parse_grid(grid_text);
      require_dim(window.front().size(), m.dim());
      require_dim(grid.size(), m.dim());
      try {
        emit.write(io::generator_to_json(exact_invariant_generator(m, window, std::move(grid))));
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(e.what());
      }
      return kExitInvariant;
    }
    if (support->parsed()) {
      const GeneratorSet phi = load_generators(generators_path);
      const auto [spec, m] = load_subgroup(subgroup_path);
      require_dim(phi.dim(), m.dim());
      const SupportReport report = support_report(phi, m, options);
      emit.write(io::support_to_json(report));
      return report.bound_holds ? kExitInvariant : kExitNotInvariant;
    }
    if (project->parsed()) {
      const FiberedGenerator f = io::parse_generator(io::read_json(generators_path));
      const FiberedGenerator h = io::parse_generator(io::read_json(second_path));
      const auto [spec, m] = load_subgroup(subgroup_path);
      require_dim(f.dim(), m.dim());
      require_dim(h.dim(), m.dim());
      try {
        emit.write(io::generator_to_json(project_principal(f, h, m, g.tol)));
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(e.what());
      }
      return kExitInvariant;
    }
    if (sweep->parsed()) {
      const GeneratorSet phi = load_generators(generators_path);
      std::vector<ClosedSubgroup> candidates;
      if (!second_path.empty()) candidates = load_candidates(second_path);
      for (auto& c : random_candidates(phi.dim(), random_count, g.seed)) candidates.push_back(std::move(c));
      if (candidates.empty()) throw io::ParseError("sweep needs a candidates file or --random N");
      for (const auto& c : candidates) require_dim(c.dim(), phi.dim());
      const SweepResult result = find_extra_invariance(phi, candidates, options);
      for (const auto& [i, j] : result.indistinguishable)
        err << "warning: the window cannot distinguish candidate " << i << " from its supergroup " << j << "\n";
      json cands = json::array();
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        json c = io::canonical_to_json(to_spec(candidates[i]), candidates[i]);
        c["verdict"] = static_cast<bool>(result.verdicts[i]);
        cands.push_back(std::move(c));
      }
      auto pairs = [](const auto& v) {
        json a = json::array();
        for (const auto& [i, j] : v) a.push_back(json::array({i, j}));
        return a;
      };
      emit.write(json{{"candidates", cands},
                      {"monotonicity_violations", pairs(result.monotonicity_violations)},
                      {"indistinguishable", pairs(result.indistinguishable)}});
      if (!result.monotonicity_violations.empty()) {
        err << "internal error: a subgroup failed while one of its supergroups passed\n";
        return kExitInternal;
      }
      return kExitInvariant;
    }
    if (render->parsed()) {
      const auto [spec, m] = load_subgroup(subgroup_path);
      const auto window = io::parse_window(window_text);
      require_dim(window.front().size(), m.dim());
      try {
        emit.write(render_svg(m, make_render_spec(m, window, unit)));
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(e.what());
      }
      return kExitInvariant;
    }
    if (oracle_cmd->parsed()) {
      oracle::BruteForceBudget budget;
      budget.bound = bound;
      budget.denominator = denominator;
      try {
        if (o_span->parsed()) {
          const json doc = io::read_json(third_path);
          const auto v = complex_vector(doc.at("vector"));
          std::vector<std::vector<std::complex<double>>> spanning;
          for (const auto& s : doc.at("spanning")) spanning.push_back(complex_vector(s));
          const double tol = doc.value("tol", 1e-10);
          emit.write(json{{"residual", oracle::brute_span_membership(v, spanning, tol)}});
          return kExitInvariant;
        }
        SubgroupSpec spec = io::parse_subgroup_spec(io::read_json(subgroup_path));
        if (o_dual->parsed()) {
          emit.write(json{{"bound", bound}, {"members", tiles_json(oracle::brute_dual(spec, budget))}});
          return kExitInvariant;
        }
        json results = json::array();
        bool all = true;
        for (const auto& x : io::parse_points(points_text)) {
          const bool member = oracle::brute_membership(spec, x, budget);
          all = all && member;
          results.push_back(json{{"member", member}});
        }
        emit.write(json{{"results", results}, {"all_members", all}});
        return all ? kExitInvariant : kExitNotInvariant;
      } catch (const json::exception& e) {
        throw io::ParseError(e.what());
      } catch (const std::invalid_argument& e) {
        throw io::ParseError(e.what());
      }
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace extrainv::cli
