#include "chainmmc/cli_commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "chainmmc/errors.hpp"
#include "chainmmc/smith.hpp"

namespace chainmmc {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("bad config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw SpecError("config file must hold a JSON object");
  return j;
}

template <typename T>
std::optional<T> config_get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SpecError(std::string("config key '") + key + "' has the wrong type");
  }
}

TableModel parse_table_file(const ChainRing& ring, int m, int n, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open table file '" + path + "'");
  TableModel model;
  double p = 0;
  while (in >> p) {
    RingMatrix mat = read_matrix(ring, in);
    if (mat.rows() != m || mat.cols() != n)
      throw SpecError("table entry dimensions must be m x n");
    model.entries.emplace_back(std::move(mat), p);
  }
  if (model.entries.empty()) throw SpecError("table file '" + path + "' holds no entries");
  return model;
}

}  // namespace

ResolvedRun resolve_run(const RunOptions& opts, bool need_lambda, bool need_beta) {
  nlohmann::json cfg = nlohmann::json::object();
  if (opts.config) cfg = load_config(*opts.config);

  auto pick_str = [&](const std::optional<std::string>& flag, const char* key)
      -> std::optional<std::string> {
    if (flag) return flag;
    return config_get<std::string>(cfg, key);
  };
  auto pick_int = [&](const std::optional<long long>& flag, const char* key)
      -> std::optional<long long> {
    if (flag) return flag;
    return config_get<long long>(cfg, key);
  };
  auto pick_u64 = [&](const std::optional<unsigned long long>& flag, const char* key)
      -> std::optional<unsigned long long> {
    if (flag) return flag;
    return config_get<unsigned long long>(cfg, key);
  };

  std::optional<std::string> ring_text = pick_str(opts.ring, "ring");
  if (!ring_text) throw SpecError("missing --ring");
  ChainRing ring = ChainRing::parse(*ring_text);

  std::optional<long long> n_opt = pick_int(opts.n, "n");
  if (!n_opt) throw SpecError("missing --n");
  if (*n_opt < 1 || *n_opt > 64) throw SpecError("n out of range [1, 64]");
  int n = static_cast<int>(*n_opt);

  std::optional<long long> m_opt = pick_int(opts.m, "m");
  int m = m_opt ? static_cast<int>(*m_opt) : n;
  if (m < 1 || m > 64) throw SpecError("m out of range [1, 64]");

  std::optional<std::string> lambda_text = pick_str(opts.lambda, "lambda");
  if (need_lambda && !lambda_text) throw SpecError("missing --lambda");
  SShape lambda = lambda_text ? SShape::parse(*lambda_text) : SShape::zero(ring.s());
  if (lambda.s() != ring.s())
    throw SpecError("lambda must have one entry per digit level of the ring");

  // A config file may carry "model" either as a plain string or as an object
  // {"type": ..., "rho": ... | "table_path": ...}; flags always win.
  std::optional<std::string> model_name = opts.model;
  std::optional<std::string> rho_text = opts.rho;
  std::optional<std::string> table_path = opts.table;
  if (cfg.contains("model")) {
    const nlohmann::json& jm = cfg.at("model");
    if (jm.is_string()) {
      if (!model_name) model_name = jm.get<std::string>();
    } else if (jm.is_object()) {
      if (!model_name) model_name = config_get<std::string>(jm, "type");
      if (!rho_text) rho_text = config_get<std::string>(jm, "rho");
      if (!table_path) table_path = config_get<std::string>(jm, "table_path");
    } else {
      throw SpecError("config key 'model' must be a string or an object");
    }
  }
  if (!rho_text) rho_text = config_get<std::string>(cfg, "rho");
  if (!table_path) table_path = config_get<std::string>(cfg, "table");

  TransferModel model = UniformModel{};
  std::string chosen = model_name.value_or("uniform");
  if (chosen == "uniform") {
    model = UniformModel{};
  } else if (chosen == "constant_shape") {
    if (!rho_text) throw SpecError("constant_shape model needs --rho");
    model = ConstantShapeModel{SShape::parse(*rho_text)};
  } else if (chosen == "table") {
    if (!table_path) throw SpecError("table model needs --table");
    model = parse_table_file(ring, m, n, *table_path);
  } else {
    throw SpecError("unknown model '" + chosen + "'");
  }

  ResolvedRun run{
      ChannelConfig{ring, n, m, lambda, std::move(model)},
      *ring_text,
      lambda.to_string(),
      "",
      std::nullopt,
      pick_u64(opts.seed, "seed").value_or(0),
      pick_u64(opts.trials, "trials").value_or(10000),
      pick_u64(opts.mc, "mc"),
      pick_u64(opts.guard, "guard").value_or(std::uint64_t(1) << 24),
      static_cast<int>(pick_int(opts.threads, "threads").value_or(1)),
      static_cast<int>(pick_int(opts.shots, "shots")
                           .value_or(config_get<long long>(cfg, "N").value_or(1))),
  };
  run.model_text = model_to_string(run.channel.model);
  if (run.threads < 1 || run.threads > 256) throw SpecError("threads out of range [1, 256]");
  if (run.shots < 1 || run.shots > 1024) throw SpecError("shots out of range [1, 1024]");

  std::optional<std::string> beta_text = pick_str(opts.beta, "beta");
  if (need_beta && !beta_text) throw SpecError("missing --beta");
  if (beta_text) {
    SShape beta = SShape::parse(*beta_text);
    if (beta.s() != ring.s())
      throw SpecError("beta must have one entry per digit level of the ring");
    run.beta = beta;
  }

  validate(run.channel);
  return run;
}

int cmd_snf(const std::string& ring_text, std::istream& matrix_in, std::ostream& out) {
  ChainRing ring = ChainRing::parse(ring_text);
  RingMatrix A = read_matrix(ring, matrix_in);
  SmithDecomposition snf = smith_normal_form(A);
  if (snf.P * snf.D * snf.Q != A)
    throw VerificationError("smith factors do not multiply back to the input");
  if (snf.P.residue().rank() != A.rows() || snf.Q.residue().rank() != A.cols())
    throw VerificationError("smith cofactors are not invertible");
  out << "ring: " << ring.to_string() << "\n";
  out << "A (" << A.rows() << " x " << A.cols() << "):\n" << A.to_text();
  out << "P (" << snf.P.rows() << " x " << snf.P.cols() << "):\n" << snf.P.to_text();
  out << "D (" << snf.D.rows() << " x " << snf.D.cols() << "):\n" << snf.D.to_text();
  out << "Q (" << snf.Q.rows() << " x " << snf.Q.cols() << "):\n" << snf.Q.to_text();
  out << "shape: " << snf.shape.to_string() << "\n";
  out << "verified: P * D * Q == A\n";
  return 0;
}

int cmd_capacity(const RunOptions& opts, std::ostream& out) {
  ResolvedRun run = resolve_run(opts, true, false);
  CapacityResult cap = capacity(run.channel, run.guard,
                                run.mc ? std::optional<std::uint64_t>(*run.mc) : std::nullopt,
                                run.seed);
  out << "# run: capacity ring=" << run.ring_text << " n=" << run.channel.n
      << " m=" << run.channel.m << " lambda=" << quoted(run.lambda_text)
      << " model=" << run.model_text << " seed=" << run.seed
      << " mc=" << (run.mc ? std::to_string(*run.mc) : "-") << " guard=" << run.guard
      << " bits_per_qdigit=" << fmt_double(std::log2(static_cast<double>(run.channel.ring.q())))
      << "\n";
  out << "ring,n,m,lambda,model,capacity_qdigits,stderr,trials\n";
  out << run.ring_text << "," << run.channel.n << "," << run.channel.m << ","
      << quoted(run.lambda_text) << "," << quoted(run.model_text) << ","
      << fmt_double(cap.value) << "," << fmt_double(cap.stderr_est) << "," << cap.samples
      << "\n";
  return 0;
}

int cmd_shapedist(const RunOptions& opts, std::ostream& out) {
  ResolvedRun run = resolve_run(opts, false, false);
  ShapeDistribution dist = shape_distribution(
      run.channel, run.guard, run.mc ? std::optional<std::uint64_t>(*run.mc) : std::nullopt,
      run.seed);
  out << "# run: shapedist ring=" << run.ring_text << " n=" << run.channel.n
      << " m=" << run.channel.m << " model=" << run.model_text << " seed=" << run.seed
      << " mc=" << (run.mc ? std::to_string(*run.mc) : "-") << " guard=" << run.guard << "\n";
  out << "ring,n,m,shape,probability,mode\n";
  const char* mode = dist.exact ? "exact" : "mc";
  for (const auto& [shape, p] : dist.probability)
    out << run.ring_text << "," << run.channel.n << "," << run.channel.m << ","
        << quoted(shape.to_string()) << "," << fmt_double(p) << "," << mode << "\n";
  return 0;
}

int cmd_simulate(const RunOptions& opts, std::ostream& out, std::ostream* diag) {
  ResolvedRun run = resolve_run(opts, true, true);
  CompositeCode code =
      mrd_composite(run.channel.ring, run.channel.n, run.channel.lambda, *run.beta, run.shots);
  SimulationResult sim =
      simulate_error_rate(run.channel, code, run.trials, run.seed, run.threads);
  out << "# run: simulate ring=" << run.ring_text << " n=" << run.channel.n
      << " m=" << run.channel.m << " lambda=" << quoted(run.lambda_text)
      << " beta=" << quoted(run.beta->to_string()) << " model=" << run.model_text
      << " shots=" << run.shots << " seed=" << run.seed << " trials=" << run.trials << "\n";
  out << "ring,n,m,lambda,beta,trials,seed,errors,error_rate";
  for (int i = 0; i < run.channel.ring.s(); ++i) out << ",stage" << i << "_failures";
  out << "\n";
  double rate = sim.trials == 0
                    ? 0.0
                    : static_cast<double>(sim.errors) / static_cast<double>(sim.trials);
  out << run.ring_text << "," << run.channel.n << "," << run.channel.m << ","
      << quoted(run.lambda_text) << "," << quoted(run.beta->to_string()) << "," << sim.trials
      << "," << run.seed << "," << sim.errors << "," << fmt_double(rate);
  for (std::uint64_t f : sim.stage_failures) out << "," << f;
  out << "\n";
  if (diag)
    *diag << "# wall_seconds=" << fmt_double(sim.wall_seconds) << " threads=" << run.threads
          << " rate_qdigits=" << fmt_double(code.rate_qdigits()) << "\n";
  return 0;
}

int cmd_demo(std::ostream& out) {
  ChainRing ring = ChainRing::parse("z:2:3");
  SShape lambda = SShape::parse("1,2,2");
  SShape rho = SShape::parse("1,3,4");
  RingMatrix A = RingMatrix::pi_power_diagonal(ring, 4, 4, rho);
  RingMatrix Y(ring, {{7, 2}, {4, 4}, {6, 0}, {4, 0}});

  SmithDecomposition snf = smith_normal_form(A);
  if (snf.P * snf.D * snf.Q != A)
    throw VerificationError("smith factors do not multiply back to the input");
  RingMatrix yt = solve_unit(snf.P, Y);
  ExtractedDigits ext = extract_digits(snf.D, yt, lambda);
  const int s = ring.s();

  out << "worked example: digit layers through a diagonal transfer matrix\n";
  out << "\n";
  out << "ring: " << ring.to_string() << " (integers mod 8, q = 2, s = 3)\n";
  out << "packet shape lambda = (" << lambda.to_string() << ")\n";
  out << "transfer matrix A = diag(1,2,2,4), shape (" << ext.rho.to_string() << ")\n";
  out << "\n";
  out << "received Y = A X:\n";
  for (int i = 0; i < Y.rows(); ++i) {
    out << " ";
    for (int j = 0; j < Y.cols(); ++j) out << " " << ring.element_to_string(Y(i, j));
    out << "\n";
  }
  out << "\n";
  out << "digit layers of X recovered from Y ([d] recovered, ? unknown,\n";
  out << "0 forced by the packet shape):\n";
  for (int c = 0; c < lambda.last(); ++c) {
    out << "  column " << c << ":\n";
    for (int t = 0; t < Y.rows(); ++t) {
      out << "    x[" << t << "][" << c << "] =";
      for (int i = 0; i < s; ++i) {
        if (i) out << " +";
        std::string w = ring.element_to_string(ring.pi_pow(i));
        if (c >= lambda[i])
          out << "  0 *" << w;
        else if (t < ext.rho[s - 1 - i])
          out << " [" << ext.layer[static_cast<std::size_t>(i)](t, c) << "]*" << w;
        else
          out << "  ? *" << w;
      }
      out << "\n";
    }
  }
  out << "\n";
  out << "rows recovered per digit level:";
  std::uint64_t digits = 0;
  for (int i = 0; i < s; ++i) {
    out << (i ? " + " : " ") << ext.rho[s - 1 - i];
    digits += static_cast<std::uint64_t>(ext.rho[s - 1 - i]) *
              static_cast<std::uint64_t>(lambda[i]);
  }
  out << "\n";
  out << "information conveyed:";
  for (int i = 0; i < s; ++i)
    out << (i ? " + " : " ") << ext.rho[s - 1 - i] << "*" << lambda[i];
  double bits = static_cast<double>(digits) * std::log2(static_cast<double>(ring.q()));
  out << " = " << digits << " q-ary digits = " << fmt_double(bits) << " bits\n";
  return 0;
}

}  // namespace chainmmc
