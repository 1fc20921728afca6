#include "blpinn/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "blpinn/errors.hpp"
#include "blpinn/spline.hpp"

namespace blpinn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) +
                      ": expected a number, got '" + v + "'");
  }
}

long parse_long(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) +
                      ": expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("line " + std::to_string(line) +
                    ": expected true/false, got '" + v + "'");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(raw.substr(0, eq));
    const std::string val = trim(raw.substr(eq + 1));
    if (key == "problem") {
      cfg.problem = val;
    } else if (key == "eps") {
      cfg.eps = parse_double(val, line);
    } else if (key == "forcing") {
      cfg.forcing = val;
    } else if (key == "enriched") {
      cfg.enriched = parse_bool(val, line);
    } else if (key == "n_points") {
      cfg.train.n_points = static_cast<int>(parse_long(val, line));
    } else if (key == "width") {
      cfg.train.width = static_cast<int>(parse_long(val, line));
    } else if (key == "max_iters") {
      cfg.train.max_iters = parse_long(val, line);
    } else if (key == "lr") {
      cfg.train.lr = parse_double(val, line);
    } else if (key == "beta1") {
      cfg.train.beta1 = parse_double(val, line);
    } else if (key == "beta2") {
      cfg.train.beta2 = parse_double(val, line);
    } else if (key == "adam_eps") {
      cfg.train.adam_eps = parse_double(val, line);
    } else if (key == "patience") {
      cfg.train.patience = parse_long(val, line);
    } else if (key == "min_rel_improve") {
      cfg.train.min_rel_improve = parse_double(val, line);
    } else if (key == "seed") {
      cfg.train.seed = static_cast<std::uint64_t>(parse_long(val, line));
    } else if (key == "w1_scale") {
      cfg.train.w1_scale = parse_double(val, line);
    } else if (key == "sampling") {
      if (val == "equispaced") {
        cfg.train.sampling = Sampling::Equispaced;
      } else if (val == "uniform_random") {
        cfg.train.sampling = Sampling::UniformRandom;
      } else {
        throw ConfigError("line " + std::to_string(line) +
                          ": sampling must be equispaced or uniform_random");
      }
    } else if (key == "n_seeds") {
      cfg.n_seeds = static_cast<int>(parse_long(val, line));
    } else if (key == "oracle_mesh") {
      cfg.oracle_mesh = static_cast<int>(parse_long(val, line));
    } else if (key == "output_dir") {
      cfg.output_dir = val;
    } else if (key == "eps_list") {
      std::istringstream items(val);
      std::string item;
      cfg.eps_list.clear();
      while (std::getline(items, item, ',')) {
        cfg.eps_list.push_back(parse_double(trim(item), line));
      }
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                        key + "'");
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Forcing make_forcing(const std::string& selector) {
  if (selector == "cos") return Forcing::cosine();
  if (selector.rfind("const:", 0) == 0) {
    return Forcing::constant(std::stod(selector.substr(6)));
  }
  if (selector.rfind("file:", 0) == 0) {
    const std::string path = selector.substr(5);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open forcing file: " + path);
    std::vector<double> xs, ys;
    std::string row;
    while (std::getline(in, row)) {
      row = trim(row);
      if (row.empty() || row[0] == '#' || row[0] == 'x') continue;
      const auto comma = row.find(',');
      if (comma == std::string::npos) {
        throw ConfigError("forcing file " + path + ": expected 'x,f' rows");
      }
      xs.push_back(std::stod(row.substr(0, comma)));
      ys.push_back(std::stod(row.substr(comma + 1)));
    }
    auto spline = std::make_shared<CubicSpline>(std::move(xs), std::move(ys));
    return Forcing::custom([spline](double x) { return (*spline)(x); });
  }
  throw ConfigError("unknown forcing selector: " + selector);
}

ProblemSpec make_problem(const ExperimentConfig& cfg, double eps) {
  Forcing f = make_forcing(cfg.forcing);
  if (cfg.problem == "hyperbolic") return ProblemSpec::hyperbolic(std::move(f));
  if (cfg.problem == "regular_cd") return ProblemSpec::regular_cd(std::move(f));
  if (cfg.problem == "regular_rd") return ProblemSpec::regular_rd(std::move(f));
  if (cfg.problem == "singular_cd") {
    return ProblemSpec::singular_cd(eps, std::move(f), cfg.enriched);
  }
  if (cfg.problem == "singular_rd") {
    return ProblemSpec::singular_rd(eps, std::move(f), cfg.enriched);
  }
  if (cfg.problem == "singular_ncd") {
    return ProblemSpec::singular_ncd(eps, std::move(f), cfg.enriched);
  }
  if (cfg.problem == "burgers") {
    return ProblemSpec::burgers(eps, std::move(f));
  }
  throw ConfigError("unknown problem kind: " + cfg.problem);
}

std::function<double(double)> make_truth(const ProblemSpec& spec,
                                         int oracle_mesh) {
  const bool f_is_one = spec.forcing().kind() == Forcing::Kind::Const &&
                        spec.forcing().const_value() == 1.0;
  switch (spec.kind()) {
    case ProblemKind::Hyperbolic: {
      const Forcing f = spec.forcing();
      return [f](double x) { return f.integral(0.0, x); };
    }
    case ProblemKind::RegularCD:
      if (f_is_one) return [](double x) { return exact_cd(1.0, x); };
      break;
    case ProblemKind::RegularRD:
      if (f_is_one) return [](double x) { return exact_rd(1.0, x); };
      break;
    case ProblemKind::SingularCD:
      if (f_is_one) {
        const double eps = spec.eps();
        return [eps](double x) { return exact_cd(eps, x); };
      }
      break;
    case ProblemKind::SingularRD:
      if (f_is_one) {
        const double eps = spec.eps();
        return [eps](double x) { return exact_rd(eps, x); };
      }
      break;
    default:
      break;
  }
  auto ref = std::make_shared<ReferenceSolution>(
      oracle_solve(spec, oracle_mesh));
  return [ref](double x) { return interpolate(*ref, x); };
}

RunResult run_single(const ProblemSpec& spec, const TrainConfig& train_cfg,
                     const std::function<double(double)>& truth) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [params, report] = train(spec, train_cfg);
  RunResult res;
  res.params = std::move(params);
  res.report = std::move(report);
  res.seed = train_cfg.seed;
  const BoundaryCache bc = make_boundary_cache(res.params);
  const ErrorGrid grid = make_error_grid(spec, 4000);
  res.rel_l2 = rel_l2_error(
      [&](double x) { return ansatz(spec, res.params, x, bc).u; }, truth,
      grid);
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

std::uint64_t seed_offset_from_env() {
  const char* env = std::getenv("BLPINN_SEED_OFFSET");
  if (!env || !*env) return 0;
  return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
}

std::vector<RunResult> run_seeds(const ProblemSpec& spec,
                                 TrainConfig train_cfg, int n_seeds,
                                 const std::function<double(double)>& truth) {
  const std::uint64_t base = train_cfg.seed + seed_offset_from_env();
  std::vector<RunResult> runs;
  runs.reserve(n_seeds);
  for (int i = 0; i < n_seeds; ++i) {
    train_cfg.seed = base + static_cast<std::uint64_t>(i);
    runs.push_back(run_single(spec, train_cfg, truth));
  }
  return runs;
}

const RunResult& best_of(const std::vector<RunResult>& runs) {
  const RunResult* best = &runs.front();
  for (const RunResult& r : runs) {
    if (r.rel_l2 < best->rel_l2) best = &r;
  }
  return *best;
}

namespace {

const char* problem_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::Hyperbolic:
      return "hyperbolic";
    case ProblemKind::RegularCD:
      return "regular_cd";
    case ProblemKind::RegularRD:
      return "regular_rd";
    case ProblemKind::SingularCD:
      return "singular_cd";
    case ProblemKind::SingularRD:
      return "singular_rd";
    case ProblemKind::SingularNCD:
      return "singular_ncd";
    case ProblemKind::Burgers:
      return "burgers";
  }
  return "?";
}

std::FILE* open_or_throw(const std::string& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

}  // namespace

void write_solution_csv(const std::string& path, const ProblemSpec& spec,
                        const NetParams& params,
                        const std::function<double(double)>& truth,
                        int n_points) {
  std::FILE* out = open_or_throw(path);
  const ErrorGrid grid = make_error_grid(spec, n_points);
  const BoundaryCache bc = make_boundary_cache(params);
  std::fprintf(out, "x,u_pred,u_ref,abs_err\n");
  for (double x : grid.points) {
    const double up = ansatz(spec, params, x, bc).u;
    const double ur = truth(x);
    std::fprintf(out, "%.9e,%.9e,%.9e,%.9e\n", x, up, ur, std::abs(up - ur));
  }
  std::fclose(out);
}

void write_report_csv(const std::string& path, const ExperimentConfig& cfg,
                      double eps, const std::vector<RunResult>& runs) {
  std::FILE* out = open_or_throw(path);
  std::fprintf(out,
               "problem,eps,N,width,seed,rel_l2,final_loss,iterations,"
               "wall_seconds\n");
  for (const RunResult& r : runs) {
    std::fprintf(out, "%s,%.9e,%d,%d,%llu,%.9e,%.9e,%ld,%.3f\n",
                 cfg.problem.c_str(), eps, cfg.train.n_points, cfg.train.width,
                 static_cast<unsigned long long>(r.seed), r.rel_l2,
                 r.report.final_loss, r.report.iterations_run,
                 r.wall_seconds);
  }
  std::fclose(out);
}

int cmd_train(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  const ProblemSpec spec = make_problem(cfg, cfg.eps);
  const auto truth = make_truth(spec, cfg.oracle_mesh);
  const auto runs = run_seeds(spec, cfg.train, cfg.n_seeds, truth);
  const RunResult& best = best_of(runs);
  write_solution_csv(cfg.output_dir + "/solution.csv", spec, best.params,
                     truth);
  write_report_csv(cfg.output_dir + "/report.csv", cfg, cfg.eps, runs);
  std::printf("%s eps=%.3e N=%d: best rel_l2 = %.6e (seed %llu)\n",
              problem_name(spec.kind()), cfg.eps, cfg.train.n_points,
              best.rel_l2, static_cast<unsigned long long>(best.seed));
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg) {
  if (cfg.eps_list.empty()) {
    throw ConfigError("sweep: eps_list must be nonempty");
  }
  for (double eps : cfg.eps_list) {
    if (!(eps > 0.0)) throw ConfigError("sweep: all eps must be positive");
  }
  std::filesystem::create_directories(cfg.output_dir);
  std::FILE* out = open_or_throw(cfg.output_dir + "/sweep.csv");
  std::fprintf(out, "eps,best_rel_l2\n");
  for (std::size_t i = 0; i < cfg.eps_list.size(); ++i) {
    const double eps = cfg.eps_list[i];
    const ProblemSpec spec = make_problem(cfg, eps);
    const auto truth = make_truth(spec, cfg.oracle_mesh);
    const auto runs = run_seeds(spec, cfg.train, cfg.n_seeds, truth);
    const RunResult& best = best_of(runs);
    char name[64];
    std::snprintf(name, sizeof(name), "/solution_eps%zu.csv", i);
    write_solution_csv(cfg.output_dir + name, spec, best.params, truth);
    std::fprintf(out, "%.9e,%.9e\n", eps, best.rel_l2);
    std::printf("eps=%.3e: best rel_l2 = %.6e\n", eps, best.rel_l2);
  }
  std::fclose(out);
  return 0;
}

namespace {

struct TableColumn {
  const char* name;
  const char* problem;
  double eps;
  bool enriched;
  const char* forcing;
};

constexpr TableColumn kTableColumns[] = {
    {"ECD", "singular_cd", 1e-4, true, "const:1"},
    {"CCD", "singular_cd", 1e-4, false, "const:1"},
    {"LRD", "singular_rd", 1e-8, true, "const:1"},
    {"NCD", "singular_ncd", 1e-4, true, "const:1"},
    {"BE", "burgers", 1e-4, true, "const:-1"},
};
constexpr int kTableN[] = {50, 100, 200, 400};

}  // namespace

bool table_cell_ok(const std::string& column, int n, double rel_l2) {
  if (column == "ECD") {
    if (n == 50) return rel_l2 <= 1.5e-2;
    if (n == 400) return rel_l2 <= 5e-3;
    return true;
  }
  if (column == "CCD") return rel_l2 >= 0.5;
  if (column == "LRD") return n != 50 || rel_l2 <= 5e-3;
  if (column == "NCD") {
    if (n == 50) return rel_l2 <= 1e-1;
    if (n == 400) return rel_l2 <= 1e-2;
    return true;
  }
  if (column == "BE") {
    if (n == 50) return rel_l2 <= 1e-2;
    if (n == 400) return rel_l2 <= 5e-3;
    return true;
  }
  return true;
}

int cmd_table(const std::string& out_dir, int jobs, int n_seeds) {
  std::filesystem::create_directories(out_dir);

  struct Cell {
    int col;
    int row;
    double rel_l2 = -1.0;
  };
  std::vector<Cell> cells;
  for (int c = 0; c < 5; ++c) {
    for (int r = 0; r < 4; ++r) cells.push_back({c, r});
  }

  // Per-column problem and truth, shared immutably across worker threads.
  std::vector<std::shared_ptr<const ProblemSpec>> specs(5);
  std::vector<std::function<double(double)>> truths(5);
  for (int c = 0; c < 5; ++c) {
    ExperimentConfig cc;
    cc.problem = kTableColumns[c].problem;
    cc.enriched = kTableColumns[c].enriched;
    cc.forcing = kTableColumns[c].forcing;
    specs[c] = std::make_shared<const ProblemSpec>(
        make_problem(cc, kTableColumns[c].eps));
    truths[c] = make_truth(*specs[c], 8192);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      Cell& cell = cells[i];
      TrainConfig tc;
      tc.n_points = kTableN[cell.row];
      const auto runs =
          run_seeds(*specs[cell.col], tc, n_seeds, truths[cell.col]);
      cell.rel_l2 = best_of(runs).rel_l2;
      std::printf("%s N=%d: rel_l2 = %.6e\n", kTableColumns[cell.col].name,
                  kTableN[cell.row], cell.rel_l2);
      std::fflush(stdout);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  double grid[4][5];
  for (const Cell& c : cells) grid[c.row][c.col] = c.rel_l2;

  std::FILE* out = open_or_throw(out_dir + "/table.csv");
  std::fprintf(out, "N,ECD,CCD,LRD,NCD,BE,pass\n");
  for (int r = 0; r < 4; ++r) {
    bool ok = true;
    for (int c = 0; c < 5; ++c) {
      ok = ok && table_cell_ok(kTableColumns[c].name, kTableN[r], grid[r][c]);
    }
    std::fprintf(out, "%d,%.9e,%.9e,%.9e,%.9e,%.9e,%s\n", kTableN[r],
                 grid[r][0], grid[r][1], grid[r][2], grid[r][3], grid[r][4],
                 ok ? "pass" : "fail");
  }
  std::fclose(out);
  return 0;
}

int cmd_reference(const std::string& problem, double eps, int mesh,
                  const std::string& out_path) {
  ExperimentConfig cfg;
  cfg.problem = problem;
  cfg.forcing = (problem == "burgers") ? "const:-1" : "const:1";
  const ProblemSpec spec = make_problem(cfg, eps);
  const ReferenceSolution ref = oracle_solve(spec, mesh);
  write_reference_csv(ref, out_path);
  std::printf("wrote %s (%d mesh intervals, %d Newton iterations)\n",
              out_path.c_str(), ref.mesh_size, ref.newton_iters);
  return 0;
}

}  // namespace blpinn
