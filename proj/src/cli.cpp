#include "mctsp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>

#include "mctsp/cyclecover.hpp"
#include "mctsp/decompose.hpp"
#include "mctsp/io.hpp"
#include "mctsp/maxtsp.hpp"
#include "mctsp/oracle.hpp"

namespace mctsp {

namespace {

using nlohmann::json;

Direction parse_direction(const std::string& s) {
  return s == "directed" ? Direction::directed : Direction::undirected;
}

json to_json(const WeightVector& w) { return json(w.components()); }

json to_json(const HamiltonianCycle& tour, const WeightVector& w) {
  return json{{"order", tour.canonical().order()}, {"weight", to_json(w)}};
}

json vectors_json(const std::vector<WeightVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json instance_json(const Instance& inst) {
  return json{{"direction", std::string(to_string(inst.direction()))},
              {"n", inst.n()},
              {"k", inst.k()},
              {"digest", instance_digest(inst)}};
}

std::string order_text(const std::vector<Vertex>& order) {
  std::string s;
  for (std::size_t t = 0; t < order.size(); ++t) s += (t ? " " : "") + std::to_string(order[t]);
  return s;
}

void print_instance_line(std::ostream& out, const Instance& inst) {
  out << "instance " << to_string(inst.direction()) << " n=" << inst.n() << " k=" << inst.k()
      << " digest=" << instance_digest(inst) << '\n';
}

void print_tours(std::ostream& out, const ParetoSet<HamiltonianCycle>& tours) {
  out << "tours " << tours.size() << '\n';
  for (const auto& e : tours) {
    out << "  " << to_string(e.weight) << "  " << order_text(e.solution.canonical().order())
        << '\n';
  }
}

Ratio parse_option_ratio(const std::string& text, const char* name) {
  try {
    return parse_ratio(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(name, e.what());
  }
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string file;
  std::string epsilon = "1/10";
  std::uint64_t seed = 0;
  bool randomized = false;
  std::size_t amplify = 1;
  bool json = false;
  bool verify = false;
  std::string command = "solve";
};

void add_solve_options(CLI::App* cmd, SolveOptions& o) {
  cmd->add_option("file", o.file, "Instance file")->required();
  cmd->add_option("--epsilon", o.epsilon, "Slack in the ratio, p/q or decimal in (0,1)")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  cmd->add_flag("--randomized-decomp", o.randomized, "Randomised decomposition of light covers");
  cmd->add_option("--amplify", o.amplify, "Union of m runs with seeds seed..seed+m-1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--json", o.json, "Machine-readable output");
}

struct SolveResult {
  Instance instance;
  Ratio epsilon;
  Ratio ratio;
  ParetoSet<HamiltonianCycle> tours;
};

SolveResult run_solve(const SolveOptions& o) {
  const auto eps = parse_option_ratio(o.epsilon, "--epsilon");
  if (eps <= 0 || eps >= 1) throw CLI::ValidationError("--epsilon", "must lie in (0,1)");
  auto inst = parse_instance(read_file(o.file));
  AlgoConfig cfg;
  cfg.epsilon = eps;
  cfg.randomized_decomposition = o.randomized;
  auto tours = amplify(
      [&](std::uint64_t seed) {
        auto c = cfg;
        c.rng_seed = seed;
        return solve(inst, c);
      },
      o.amplify, o.seed);
  const auto ratio = approximation_ratio(inst.direction(), inst.k(), eps);
  return SolveResult{std::move(inst), eps, ratio, std::move(tours)};
}

json report_json(const OracleReport& r) {
  json j{{"covered", r.covered},
         {"ratio", to_string(r.ratio)},
         {"oracle", vectors_json(r.oracle_vectors)},
         {"algorithm", vectors_json(r.algorithm_vectors)},
         {"digest", r.digest}};
  if (r.witness) {
    j["witness"] = to_json(*r.witness, *r.witness_weight);
    j["failing_objective"] = *r.failing_objective;
  }
  return j;
}

void print_report(std::ostream& out, const OracleReport& r) {
  if (r.covered) {
    out << "covered at " << to_string(r.ratio) << " against " << r.oracle_vectors.size()
        << " oracle vectors\n";
  } else {
    out << "NOT covered at " << to_string(r.ratio) << ": oracle tour "
        << order_text(r.witness->canonical().order()) << " with weight "
        << to_string(*r.witness_weight) << ", objective " << *r.failing_objective << '\n';
  }
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const auto res = run_solve(o);
  std::optional<OracleReport> report;
  if (o.verify) {
    report = verify_coverage(res.instance, res.tours, tour_pareto_exact(res.instance), res.ratio);
  }
  if (o.json) {
    json tours = json::array();
    for (const auto& e : res.tours) tours.push_back(to_json(e.solution, e.weight));
    json j{{"schema", 1},
           {"command", o.command},
           {"instance", instance_json(res.instance)},
           {"epsilon", to_string(res.epsilon)},
           {"ratio", to_string(res.ratio)},
           {"seed", o.seed},
           {"amplify", o.amplify},
           {"randomized_decomposition", o.randomized},
           {"tours", tours}};
    if (report) j["verify"] = report_json(*report);
    out << j.dump(2) << '\n';
  } else {
    print_instance_line(out, res.instance);
    out << "ratio " << to_string(res.ratio) << " (epsilon " << to_string(res.epsilon) << ")\n";
    print_tours(out, res.tours);
    if (report) print_report(out, *report);
  }
  return report && !report->covered ? exit_uncovered : exit_ok;
}

// ---------------------------------------------------------------------------

struct GenerateOptions {
  std::string direction;
  std::size_t n = 0;
  std::size_t k = 0;
  Weight max_weight = 20;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const auto inst = generate_instance(parse_direction(o.direction), o.n, o.k, o.max_weight, o.seed);
  const auto text = serialize_instance(inst);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw CLI::ValidationError("-o", "cannot write '" + o.output + "'");
    f << text;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct OracleOptions {
  std::string file;
  bool covers = false;
  bool json = false;
};

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  const auto inst = parse_instance(read_file(o.file));
  if (o.covers) {
    const auto covers = cover_pareto_exact(inst);
    if (o.json) {
      json list = json::array();
      for (const auto& e : covers) {
        list.push_back(json{{"cycles", e.solution.canonical().cycles()},
                            {"weight", to_json(e.weight)}});
      }
      out << json{{"schema", 1},
                  {"command", "oracle"},
                  {"kind", "covers"},
                  {"instance", instance_json(inst)},
                  {"covers", list}}
                 .dump(2)
          << '\n';
    } else {
      print_instance_line(out, inst);
      out << "covers " << covers.size() << '\n';
      for (const auto& e : covers) {
        out << "  " << to_string(e.weight) << " ";
        const auto canonical = e.solution.canonical();
        for (const auto& c : canonical.cycles()) out << " (" << order_text(c) << ")";
        out << '\n';
      }
    }
    return exit_ok;
  }
  const auto tours = tour_pareto_exact(inst);
  if (o.json) {
    json list = json::array();
    for (const auto& e : tours) list.push_back(to_json(e.solution, e.weight));
    out << json{{"schema", 1},
                {"command", "oracle"},
                {"kind", "tours"},
                {"instance", instance_json(inst)},
                {"tours", list}}
               .dump(2)
        << '\n';
  } else {
    print_instance_line(out, inst);
    print_tours(out, tours);
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct DecomposeOptions {
  std::string file;
  std::string cover_file;
  std::string alpha;
  std::string method = "lightweight";
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_decompose(const DecomposeOptions& o, std::ostream& out) {
  const auto inst = parse_instance(read_file(o.file));
  std::optional<CycleCover> cover;
  if (!o.cover_file.empty()) {
    cover = parse_cover(read_file(o.cover_file), inst.direction(), inst.n());
  } else {
    Matrix sum(inst.n());
    for (std::size_t i = 0; i < inst.k(); ++i) {
      for (std::size_t c = 0; c < sum.data().size(); ++c) {
        const auto x = static_cast<Vertex>(c / inst.n());
        const auto y = static_cast<Vertex>(c % inst.n());
        sum.at(x, y) += inst.weight(i, x, y);
      }
    }
    cover = max_cover_scalar(inst, sum);
  }
  const auto alpha = o.alpha.empty() ? guaranteed_alpha(inst.direction(), inst.k())
                                     : parse_option_ratio(o.alpha, "--alpha");
  if (alpha <= 0 || alpha > 1) throw CLI::ValidationError("--alpha", "must lie in (0,1]");
  DecompositionConfig cfg;
  cfg.alpha = alpha;
  cfg.rng_seed = o.seed;

  std::optional<PathCollection> paths;
  std::size_t attempts = 0;
  bool fell_back = false;
  if (o.method == "lightweight") {
    paths = lightweight(*cover, inst, cfg);
  } else if (o.method == "random") {
    auto r = rand_lightweight_detailed(*cover, inst, cfg);
    attempts = r.attempts;
    fell_back = r.fell_back;
    paths = std::move(r.paths);
  } else if (o.method == "bicriteria") {
    paths = decompose_bicriteria_undirected(*cover, inst);
  } else if (o.method == "k3") {
    paths = decompose_k3_undirected(*cover, inst);
  } else {
    paths = decompose_long_cycles(*cover, inst);
  }
  const auto wp = paths->weight(inst);
  const auto wc = cover->weight(inst);
  const bool meets = at_least_fraction(wp, wc, alpha);

  if (o.json) {
    json j{{"schema", 1},
           {"command", "decompose"},
           {"instance", instance_json(inst)},
           {"method", o.method},
           {"alpha", to_string(alpha)},
           {"cover", cover->canonical().cycles()},
           {"cover_weight", to_json(wc)},
           {"paths", paths->paths()},
           {"paths_weight", to_json(wp)},
           {"meets_alpha", meets}};
    if (o.method == "random") {
      j["attempts"] = attempts;
      j["fell_back"] = fell_back;
    }
    out << j.dump(2) << '\n';
  } else {
    print_instance_line(out, inst);
    out << "method " << o.method << " alpha " << to_string(alpha) << '\n';
    out << "cover weight " << to_string(wc) << '\n';
    out << "paths weight " << to_string(wp) << (meets ? " (meets alpha)" : " (below alpha)")
        << '\n';
    for (const auto& p : paths->paths()) out << "  " << order_text(p) << '\n';
    if (o.method == "random") {
      out << "attempts " << attempts << (fell_back ? " (fell back)" : "") << '\n';
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct TightnessOptions {
  std::string direction;
  std::size_t k = 2;
  std::size_t max_units = 4;
  Weight max_weight = 4;
  bool json = false;
};

int cmd_tightness(const TightnessOptions& o, std::ostream& out) {
  TightnessBudget budget;
  budget.max_units = o.max_units;
  budget.max_weight = o.max_weight;
  const auto w = search_tightness_witness(parse_direction(o.direction), o.k, budget);
  if (o.json) {
    json j{{"schema", 1},
           {"command", "tightness"},
           {"direction", o.direction},
           {"k", o.k},
           {"best_ratio", to_string(w.best_ratio)},
           {"examined", w.examined},
           {"reached_bound", w.reached_bound}};
    if (w.instance) {
      j["instance"] = serialize_instance(*w.instance);
      j["cover"] = w.cover->cycles();
    }
    out << j.dump(2) << '\n';
  } else {
    out << "best ratio " << to_string(w.best_ratio) << " after " << w.examined << " covers"
        << (w.reached_bound ? " (threshold reached)" : "") << '\n';
    if (w.instance) {
      out << serialize_instance(*w.instance) << serialize_cover(*w.cover);
    }
  }
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-criteria Max-TSP approximation toolkit", "mctsp"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--direction", gen.direction)
      ->required()
      ->check(CLI::IsMember({"directed", "undirected"}));
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--k", gen.k, "Objective count")->required();
  generate->add_option("--max-weight", gen.max_weight)->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveOptions sol;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate Pareto curve of tours");
  add_solve_options(solve_cmd, sol);
  solve_cmd->add_flag("--verify", sol.verify, "Check coverage against the exact curve");

  SolveOptions ver;
  auto* verify = app.add_subcommand("verify", "solve --verify; exits 4 when not covered");
  add_solve_options(verify, ver);

  OracleOptions ora;
  auto* oracle = app.add_subcommand("oracle", "Exact Pareto curve by enumeration");
  oracle->add_option("file", ora.file, "Instance file")->required();
  oracle->add_flag("--covers", ora.covers, "Cycle covers instead of tours");
  oracle->add_flag("--json", ora.json, "Machine-readable output");

  DecomposeOptions dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose a cycle cover into paths");
  decompose->add_option("file", dec.file, "Instance file")->required();
  decompose->add_option("--cover", dec.cover_file,
                        "Cover file (default: max cover of the summed objectives)");
  decompose->add_option("--alpha", dec.alpha, "Threshold (default: guaranteed ratio)");
  decompose->add_option("--method", dec.method)
      ->check(CLI::IsMember({"lightweight", "random", "bicriteria", "k3", "long-cycles"}))
      ->capture_default_str();
  decompose->add_option("--seed", dec.seed)->capture_default_str();
  decompose->add_flag("--json", dec.json, "Machine-readable output");

  TightnessOptions tig;
  auto* tightness = app.add_subcommand("tightness", "Search small covers that limit decomposition");
  tightness->add_option("--direction", tig.direction)
      ->required()
      ->check(CLI::IsMember({"directed", "undirected"}));
  tightness->add_option("--k", tig.k)->check(CLI::PositiveNumber)->capture_default_str();
  tightness->add_option("--max-units", tig.max_units)->check(CLI::PositiveNumber)->capture_default_str();
  tightness->add_option("--max-weight", tig.max_weight)->check(CLI::PositiveNumber)->capture_default_str();
  tightness->add_flag("--json", tig.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(generate)) return cmd_generate(gen, out);
    if (app.got_subcommand(solve_cmd)) return cmd_solve(sol, out);
    if (app.got_subcommand(verify)) {
      ver.verify = true;
      ver.command = "verify";
      return cmd_solve(ver, out);
    }
    if (app.got_subcommand(oracle)) return cmd_oracle(ora, out);
    if (app.got_subcommand(decompose)) return cmd_decompose(dec, out);
    return cmd_tightness(tig, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return exit_capacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace mctsp
