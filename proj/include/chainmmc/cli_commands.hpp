#ifndef CHAINMMC_CLI_COMMANDS_HPP
#define CHAINMMC_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "chainmmc/channel.hpp"

namespace chainmmc {

// Raw option values as given on the command line; unset fields fall back to
// the config file (when --config is given) and then to built-in defaults.
struct RunOptions {
  std::optional<std::string> ring;
  std::optional<long long> n;
  std::optional<long long> m;
  std::optional<std::string> lambda;
  std::optional<std::string> model;  // uniform | constant_shape | table
  std::optional<std::string> rho;    // shape for constant_shape
  std::optional<std::string> table;  // file path for table
  std::optional<std::string> beta;
  std::optional<unsigned long long> seed;
  std::optional<unsigned long long> trials;
  std::optional<unsigned long long> mc;
  std::optional<unsigned long long> guard;
  std::optional<long long> threads;
  std::optional<long long> shots;
  std::optional<std::string> config;  // JSON file path
};

struct ResolvedRun {
  ChannelConfig channel;
  std::string ring_text;
  std::string lambda_text;
  std::string model_text;
  std::optional<SShape> beta;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> mc;
  std::uint64_t guard = 0;
  int threads = 1;
  int shots = 1;
};

// Merges flags over the optional JSON config over defaults and validates.
ResolvedRun resolve_run(const RunOptions& opts, bool need_lambda, bool need_beta);

// Commands write their primary output to `out` and return the process exit
// code. Errors are reported by exception: SpecError -> 2, GuardExceeded -> 3,
// VerificationError -> 4 (mapped by the CLI driver).
int cmd_snf(const std::string& ring_text, std::istream& matrix_in, std::ostream& out);
int cmd_capacity(const RunOptions& opts, std::ostream& out);
int cmd_shapedist(const RunOptions& opts, std::ostream& out);
int cmd_simulate(const RunOptions& opts, std::ostream& out, std::ostream* diag);
int cmd_demo(std::ostream& out);

}  // namespace chainmmc

#endif
