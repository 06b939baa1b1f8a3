#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pathlab/pathlab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitInconclusive = 3;

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

struct CommonArgs {
  std::uint32_t N = 100;
  int n = 10;
  double p = 0.1;
  std::uint64_t seed = 1;
  int trials = 20;
  std::string kind;
  std::string out;
  double alpha = 0.5;
  std::optional<double> beta;
  int rounds = -1;
  std::optional<int> k;
  double delta = 0.01;
  std::optional<double> r;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--N", a.N, "host vertex count");
  cmd->add_option("--n", a.n, "path parameter (forbid paths on n+1 vertices)");
  cmd->add_option("--p", a.p, "edge probability");
  cmd->add_option("--seed", a.seed, "master seed");
  cmd->add_option("--trials", a.trials, "number of trials");
  cmd->add_option("--kind", a.kind, "variant selector");
  cmd->add_option("--out", a.out, "output path (default stdout)");
  cmd->add_option("--alpha", a.alpha, "part fraction for dense extraction");
  cmd->add_option("--beta", a.beta, "density boost factor");
  cmd->add_option("--rounds", a.rounds, "extraction rounds (-1 = default)");
  cmd->add_option("--k", a.k, "color count / path length override");
  cmd->add_option("--delta", a.delta, "detection failure budget");
  cmd->add_option("--r", a.r, "density-threshold divisor");
  cmd->add_option("--config", a.config_path, "key=value config file; flags override");
}

// Values from a key=value file fill in whatever was not given on the command
// line; explicit flags always win.
void apply_config(const CLI::App* cmd, CommonArgs& a) {
  if (a.config_path.empty()) return;
  std::ifstream f(a.config_path);
  if (!f) throw std::runtime_error("cannot read config " + a.config_path);
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    if (cmd->count("--" + key) > 0) continue;  // flag overrides file
    if (key == "N") a.N = static_cast<std::uint32_t>(std::stoull(val));
    else if (key == "n") a.n = std::stoi(val);
    else if (key == "p") a.p = std::stod(val);
    else if (key == "seed") a.seed = std::stoull(val);
    else if (key == "trials") a.trials = std::stoi(val);
    else if (key == "kind") a.kind = val;
    else if (key == "out") a.out = val;
    else if (key == "alpha") a.alpha = std::stod(val);
    else if (key == "beta") a.beta = std::stod(val);
    else if (key == "rounds") a.rounds = std::stoi(val);
    else if (key == "k") a.k = std::stoi(val);
    else if (key == "delta") a.delta = std::stod(val);
    else if (key == "r") a.r = std::stod(val);
    else throw std::runtime_error("unknown config key: " + key);
  }
}

int cmd_gen(const CommonArgs& a) {
  auto g = pathlab::gnp_generate({a.N, a.p, a.seed});
  std::ofstream file;
  pathlab::write_edge_list(out_stream(a.out, file), g);
  return kExitOk;
}

int cmd_bounds(const CommonArgs& a) {
  auto rep = pathlab::regime_classify(a.N, a.n, a.p);
  std::ofstream file;
  auto& os = out_stream(a.out, file);
  os << "regime=" << pathlab::regime_name(rep.regime) << '\n'
     << "omega=" << rep.omega << '\n'
     << "lower_bound=" << rep.lower_bound << '\n'
     << "upper_bound=" << rep.upper_bound << '\n'
     << "notes=" << rep.notes << '\n';
  if (a.N > 2 * static_cast<std::uint32_t>(a.n) && a.p < 1.0) {
    auto w = pathlab::beta_window(a.N, a.n, a.p, a.alpha);
    os << "window_lo=" << w.lo << '\n'
       << "window_hi=" << w.hi << '\n'
       << "beta_lo=" << w.beta_lo << '\n'
       << "beta_hi=" << w.beta_hi << '\n'
       << "feasible=" << (w.feasible ? 1 : 0) << '\n';
    if (w.feasible) os << "beta_mid=" << w.beta_mid() << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const CommonArgs& a) {
  auto g = pathlab::gnp_generate({a.N, a.p, a.seed});
  auto built = pathlab::blocks_construct(g, a.n, a.seed);
  pathlab::Graph h(a.N, built.subgraph);
  auto d = pathlab::dfs_decompose(h, a.n);
  std::ofstream file;
  auto& os = out_stream(a.out, file);
  pathlab::write_decomposition(os, d);
  if (!pathlab::decomposition_verify(d, h)) {
    std::cerr << "decomposition failed verification\n";
    return kExitInconclusive;
  }
  std::cerr << "groups=" << d.groups.size() << " edges=" << h.edge_count()
            << " certified_upper=" << pathlab::certified_upper_bound(g, a.n) << '\n';
  return kExitOk;
}

int cmd_construct(const CommonArgs& a) {
  auto g = pathlab::gnp_generate({a.N, a.p, a.seed});
  pathlab::ConstructionResult res;
  std::string kind = a.kind.empty() ? "blocks" : a.kind;
  if (kind == "blocks") {
    res = pathlab::blocks_construct(g, a.n, a.seed);
  } else if (kind == "isolated") {
    res = pathlab::isolated_edge_construct(g);
  } else if (kind == "dense") {
    pathlab::DenseExtractionParams params;
    params.alpha = a.alpha;
    params.n = a.n;
    if (a.beta) {
      params.beta = *a.beta;
    } else {
      auto w = pathlab::beta_window(a.N, a.n, a.p, a.alpha);
      if (!w.feasible) {
        std::cerr << "beta window infeasible; pass --beta\n";
        return kExitPrecondition;
      }
      params.beta = w.beta_mid();
    }
    res = pathlab::repeated_dense_construct(g, a.n, params, a.rounds, a.seed);
  } else {
    std::cerr << "unknown construct kind: " << kind << " (blocks|isolated|dense)\n";
    return kExitPrecondition;
  }
  std::ofstream file;
  auto& os = out_stream(a.out, file);
  os << "edges=" << res.edge_count << '\n'
     << "component_bound=" << res.component_bound << '\n'
     << "rounds=" << res.rounds_completed << '\n';
  return kExitOk;
}

int cmd_color(const CommonArgs& a) {
  auto g = pathlab::gnp_generate({a.N, a.p, a.seed});
  std::string kind = a.kind.empty() ? "estimate" : a.kind;
  std::ofstream file;
  auto& os = out_stream(a.out, file);
  if (kind == "estimate") {
    auto est = pathlab::c_estimate(g, a.n, a.trials, a.seed);
    os << "lower=" << est.lower << '\n'
       << "upper=" << est.upper << '\n'
       << "lower_note=" << est.lower_note << '\n'
       << "upper_note=" << est.upper_note << '\n';
    return kExitOk;
  }
  pathlab::EdgeColoring c;
  if (kind == "affine") {
    c = pathlab::AffineColoring(a.N, a.n, a.seed).restrict_to(g);
  } else if (kind == "random") {
    if (!a.k) {
      std::cerr << "random coloring needs --k\n";
      return kExitPrecondition;
    }
    c = pathlab::random_coloring(g, *a.k, a.seed);
  } else {
    std::cerr << "unknown color kind: " << kind << " (affine|random|estimate)\n";
    return kExitPrecondition;
  }
  auto v = pathlab::coloring_verify(g, c, a.n, {a.delta, a.seed});
  pathlab::write_coloring(os, c);
  std::cerr << "colors=" << c.colors << " ok=" << (v.ok ? 1 : 0)
            << " largest_component=" << v.largest_component << '\n';
  if (v.inconclusive) return kExitInconclusive;
  return v.ok ? kExitOk : kExitInconclusive;
}

int cmd_experiment(const CommonArgs& a) {
  pathlab::ExperimentSpec spec;
  if (a.kind.empty()) {
    std::cerr << "experiment needs --kind\n";
    return kExitPrecondition;
  }
  spec.kind = pathlab::parse_kind(a.kind);
  spec.N = a.N;
  spec.n = a.n;
  spec.p = a.p;
  spec.trials = a.trials;
  spec.seed = a.seed;
  spec.overrides["alpha"] = a.alpha;
  if (a.beta) spec.overrides["beta"] = *a.beta;
  if (a.rounds >= 0) spec.overrides["rounds"] = a.rounds;
  if (a.k) spec.overrides["k"] = *a.k;
  spec.overrides["delta"] = a.delta;
  if (a.r) spec.overrides["r"] = *a.r;
  auto res = pathlab::run_experiment(spec);
  if (a.out.empty()) {
    pathlab::write_report_csv(std::cout, res);
    pathlab::write_report_summary(std::cout, res);
  } else {
    pathlab::emit_report(res, a.out);
    pathlab::write_report_summary(std::cerr, res);
  }
  return res.passed ? kExitOk : kExitInconclusive;
}

int cmd_oracle(const CommonArgs& a) {
  pathlab::ExperimentSpec spec;
  spec.kind = pathlab::ExperimentKind::oracle_suite;
  spec.seed = a.seed;
  auto res = pathlab::run_experiment(spec);
  std::ofstream file;
  pathlab::write_report_csv(out_stream(a.out, file), res);
  return res.passed ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laboratory for path-free subgraphs of random graphs"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const CommonArgs&);
    CommonArgs args;
  };
  Sub subs[] = {
      {"gen", "sample G(N,p) and write its edge list", cmd_gen, {}},
      {"bounds", "print the regime report and beta window", cmd_bounds, {}},
      {"decompose", "DFS-decompose a path-free subgraph and verify it", cmd_decompose, {}},
      {"construct", "build a path-free subgraph (blocks|isolated|dense)", cmd_construct, {}},
      {"color", "edge colorings with no monochromatic long path", cmd_color, {}},
      {"experiment", "run a study and emit CSV reports", cmd_experiment, {}},
      {"oracle", "brute-force extremal numbers vs the closed form", cmd_oracle, {}},
  };
  for (auto& s : subs) add_common(app.add_subcommand(s.name, s.help), s.args);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& s : subs)
      if (app.get_subcommand(s.name)->parsed()) {
        apply_config(app.get_subcommand(s.name), s.args);
        return s.run(s.args);
      }
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitPrecondition;
}
