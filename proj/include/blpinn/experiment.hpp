#ifndef BLPINN_EXPERIMENT_HPP
#define BLPINN_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blpinn/problems.hpp"
#include "blpinn/reference.hpp"
#include "blpinn/training.hpp"

namespace blpinn {

// Flat key = value experiment configuration (one pair per line, # comments).
struct ExperimentConfig {
  std::string problem = "singular_cd";  // hyperbolic | regular_cd | regular_rd
                                        // | singular_cd | singular_rd
                                        // | singular_ncd | burgers
  double eps = 1e-4;
  std::string forcing = "const:1";  // const:<c> | cos | file:<path>
  bool enriched = true;
  TrainConfig train;
  int n_seeds = 3;
  int oracle_mesh = 8192;
  std::string output_dir = ".";
  std::vector<double> eps_list;  // sweep command only
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

Forcing make_forcing(const std::string& selector);
ProblemSpec make_problem(const ExperimentConfig& cfg, double eps);

// Ground truth for error reporting: closed form where available, otherwise
// the oracle solver at cfg.oracle_mesh.
std::function<double(double)> make_truth(const ProblemSpec& spec,
                                         int oracle_mesh);

struct RunResult {
  NetParams params;
  TrainReport report;
  double rel_l2 = 0.0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
};

// One training run measured against the given truth.
RunResult run_single(const ProblemSpec& spec, const TrainConfig& train_cfg,
                     const std::function<double(double)>& truth);

// Best-of-n-seeds (by relative L2 error); seeds are base, base+1, ...
// offset by the BLPINN_SEED_OFFSET environment variable if set.
std::vector<RunResult> run_seeds(const ProblemSpec& spec,
                                 TrainConfig train_cfg, int n_seeds,
                                 const std::function<double(double)>& truth);
const RunResult& best_of(const std::vector<RunResult>& runs);

std::uint64_t seed_offset_from_env();

// CSV writers (RFC-4180-style, '.' decimal, >= 9 significant digits).
void write_solution_csv(const std::string& path, const ProblemSpec& spec,
                        const NetParams& params,
                        const std::function<double(double)>& truth,
                        int n_points = 2000);
void write_report_csv(const std::string& path, const ExperimentConfig& cfg,
                      double eps, const std::vector<RunResult>& runs);

// Acceptance band for one cell of the error table; columns are named
// ECD, CCD, LRD, NCD, BE and n is the collocation count.
bool table_cell_ok(const std::string& column, int n, double rel_l2);

// Subcommand drivers; return a process exit code.
int cmd_train(const ExperimentConfig& cfg);
int cmd_sweep(const ExperimentConfig& cfg);
int cmd_table(const std::string& out_dir, int jobs, int n_seeds);
int cmd_reference(const std::string& problem, double eps, int mesh,
                  const std::string& out_path);

}  // namespace blpinn

#endif  // BLPINN_EXPERIMENT_HPP
