// Command line driver for the chain ring matrix channel toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chainmmc/cli_commands.hpp"
#include "chainmmc/errors.hpp"

namespace {

struct OutOption {
  std::optional<std::string> path;

  // Returns the stream to write to, opening the file on demand.
  std::ostream& open(std::ofstream& file) const {
    if (!path) return std::cout;
    file.open(*path, std::ios::binary);
    if (!file) throw chainmmc::SpecError("cannot open output file '" + *path + "'");
    return file;
  }
};

void add_run_flags(CLI::App* cmd, chainmmc::RunOptions& opts, OutOption& out) {
  cmd->add_option("--ring", opts.ring, "ring text: z:p:s or fqu:p:r:s");
  cmd->add_option("--n", opts.n, "input packet count");
  cmd->add_option("--m", opts.m, "output packet count (default n)");
  cmd->add_option("--lambda", opts.lambda, "packet shape, e.g. 1,2,2");
  cmd->add_option("--model", opts.model, "transfer model: uniform | constant_shape | table");
  cmd->add_option("--rho", opts.rho, "transfer shape for constant_shape");
  cmd->add_option("--table", opts.table, "table file for the table model");
  cmd->add_option("--beta", opts.beta, "correctable shape deficiency, e.g. 0,1");
  cmd->add_option("--seed", opts.seed, "random seed (default 0)");
  cmd->add_option("--trials", opts.trials, "simulation trials (default 10000)");
  cmd->add_option("--mc", opts.mc, "Monte Carlo sample count for estimates");
  cmd->add_option("--guard", opts.guard, "enumeration guard (default 2^24)");
  cmd->add_option("--threads", opts.threads, "worker threads (default 1)");
  cmd->add_option("--shots", opts.shots, "channel uses per codeword (default 1)");
  cmd->add_option("--config", opts.config, "JSON config file; flags take precedence");
  cmd->add_option("--out", out.path, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix channels over finite chain rings"};
  app.require_subcommand(1);

  std::string snf_ring;
  std::string snf_matrix;
  OutOption snf_out;
  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a ring matrix");
  snf->add_option("--ring", snf_ring, "ring text: z:p:s or fqu:p:r:s")->required();
  snf->add_option("--matrix", snf_matrix, "matrix file: 'rows cols' then entries")->required();
  snf->add_option("--out", snf_out.path, "output file (default stdout)");

  chainmmc::RunOptions cap_opts;
  OutOption cap_out;
  CLI::App* cap = app.add_subcommand("capacity", "channel capacity in q-ary digits");
  add_run_flags(cap, cap_opts, cap_out);

  chainmmc::RunOptions dist_opts;
  OutOption dist_out;
  CLI::App* dist = app.add_subcommand("shapedist", "distribution of the transfer shape");
  add_run_flags(dist, dist_opts, dist_out);

  chainmmc::RunOptions sim_opts;
  OutOption sim_out;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo decoding error rate");
  add_run_flags(sim, sim_opts, sim_out);

  OutOption demo_out;
  CLI::App* demo = app.add_subcommand("demo", "digit extraction walkthrough");
  demo->add_option("--out", demo_out.path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (snf->parsed()) {
      std::ifstream matrix_in(snf_matrix);
      if (!matrix_in) throw chainmmc::SpecError("cannot open matrix file '" + snf_matrix + "'");
      std::ofstream file;
      return chainmmc::cmd_snf(snf_ring, matrix_in, snf_out.open(file));
    }
    if (cap->parsed()) {
      std::ofstream file;
      return chainmmc::cmd_capacity(cap_opts, cap_out.open(file));
    }
    if (dist->parsed()) {
      std::ofstream file;
      return chainmmc::cmd_shapedist(dist_opts, dist_out.open(file));
    }
    if (sim->parsed()) {
      std::ofstream file;
      return chainmmc::cmd_simulate(sim_opts, sim_out.open(file), &std::cerr);
    }
    if (demo->parsed()) {
      std::ofstream file;
      return chainmmc::cmd_demo(demo_out.open(file));
    }
  } catch (const chainmmc::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const chainmmc::VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const chainmmc::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
