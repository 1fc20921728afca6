#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "blpinn/errors.hpp"
#include "blpinn/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Boundary-layer PINNs for singularly perturbed 1D BVPs"};
  app.require_subcommand(1);

  std::string config_path;
  auto* train_cmd =
      app.add_subcommand("train", "Train on one problem instance");
  train_cmd->add_option("config", config_path, "key = value config file")
      ->required();

  std::string sweep_config;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Train across an eps_list from the config");
  sweep_cmd->add_option("config", sweep_config, "key = value config file")
      ->required();

  std::string table_out = "table_out";
  int jobs = 1;
  int table_seeds = 3;
  auto* table_cmd = app.add_subcommand(
      "table", "Reproduce the relative-L2 error table (5 problems x 4 N)");
  table_cmd->add_option("--out", table_out, "output directory");
  table_cmd->add_option("--jobs", jobs, "worker threads");
  table_cmd->add_option("--seeds", table_seeds, "seeds per cell (best-of)");

  std::string ref_problem;
  double ref_eps = 1e-4;
  int ref_mesh = 8192;
  std::string ref_out = "reference.csv";
  auto* ref_cmd = app.add_subcommand(
      "reference", "Write an oracle finite-difference solution to CSV");
  ref_cmd->add_option("problem", ref_problem,
                      "singular_cd | singular_rd | singular_ncd | burgers | "
                      "regular_cd | regular_rd")
      ->required();
  ref_cmd->add_option("eps", ref_eps, "perturbation parameter")->required();
  ref_cmd->add_option("--mesh", ref_mesh, "mesh intervals");
  ref_cmd->add_option("--out", ref_out, "output CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) {
      return blpinn::cmd_train(blpinn::parse_config_file(config_path));
    }
    if (sweep_cmd->parsed()) {
      return blpinn::cmd_sweep(blpinn::parse_config_file(sweep_config));
    }
    if (table_cmd->parsed()) {
      return blpinn::cmd_table(table_out, jobs, table_seeds);
    }
    if (ref_cmd->parsed()) {
      return blpinn::cmd_reference(ref_problem, ref_eps, ref_mesh, ref_out);
    }
  } catch (const blpinn::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const blpinn::NewtonDivergence& e) {
    std::fprintf(stderr, "oracle solver failed: %s\n", e.what());
    return 3;
  } catch (const blpinn::NonFiniteLoss& e) {
    std::fprintf(stderr, "training diverged: %s\n", e.what());
    return 4;
  } catch (const blpinn::DataConditionViolation& e) {
    std::fprintf(stderr, "data condition violated: %s\n", e.what());
    return 5;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
