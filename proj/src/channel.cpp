#include "chainmmc/channel.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "chainmmc/errors.hpp"

namespace chainmmc {

namespace {

// Number of rows*cols matrices over the ring, throwing past the guard.
std::uint64_t matrix_space_size(const ChainRing& ring, int rows, int cols,
                                std::uint64_t guard) {
  std::uint64_t n = 1;
  for (int e = 0; e < rows * cols; ++e) {
    if (n > guard / ring.order())
      throw GuardExceeded("matrix space exceeds the enumeration guard");
    n *= ring.order();
  }
  return n;
}

RingMatrix matrix_from_index(const ChainRing& ring, int rows, int cols, std::uint64_t idx) {
  RingMatrix A(ring, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      A(r, c) = idx % ring.order();
      idx /= ring.order();
    }
  return A;
}

std::string key_of(const RingMatrix& m) {
  std::string k;
  k.reserve(static_cast<std::size_t>(m.rows() * m.cols()) * sizeof(std::uint64_t));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::uint64_t v = m(i, j);
      k.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
  return k;
}

// Weighted shape size sum_i shape_{s-1-i} * lambda_i: the q-ary digits one
// channel use delivers through a transfer of that shape.
std::uint64_t digits_through(const SShape& shape, const SShape& lambda) {
  std::uint64_t v = 0;
  const int s = shape.s();
  for (int i = 0; i < s; ++i)
    v += static_cast<std::uint64_t>(shape[s - 1 - i]) * static_cast<std::uint64_t>(lambda[i]);
  return v;
}

}  // namespace

void validate(const ChannelConfig& config) {
  if (config.n < 1 || config.m < 1) throw SpecError("channel needs positive dimensions");
  if (config.lambda.s() != config.ring.s())
    throw SpecError("packet shape length must equal the ring index");
  if (const auto* t = std::get_if<TableModel>(&config.model)) {
    if (t->entries.empty()) throw SpecError("table model must have entries");
    double total = 0;
    for (const auto& [mat, p] : t->entries) {
      if (!mat.ring().same_ring(config.ring)) throw SpecError("table entry ring mismatch");
      if (mat.rows() != config.m || mat.cols() != config.n)
        throw SpecError("table entry dimensions mismatch");
      if (p < 0) throw SpecError("table probabilities must be non-negative");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw SpecError("table probabilities must sum to 1");
  } else if (const auto* c = std::get_if<ConstantShapeModel>(&config.model)) {
    if (c->rho.s() != config.ring.s())
      throw SpecError("transfer shape length must equal the ring index");
    if (c->rho.last() > std::min(config.m, config.n))
      throw SpecError("transfer shape exceeds channel dimensions");
  }
}

std::string model_to_string(const TransferModel& model) {
  if (std::holds_alternative<UniformModel>(model)) return "uniform";
  if (const auto* c = std::get_if<ConstantShapeModel>(&model))
    return "constant_shape(" + c->rho.to_string() + ")";
  const auto& t = std::get<TableModel>(model);
  return "table(" + std::to_string(t.entries.size()) + ")";
}

RingMatrix transmit(const RingMatrix& X, const RingMatrix& A, const SShape& lambda) {
  if (!X.satisfies_column_constraint(lambda))
    throw std::invalid_argument("input violates the packet column constraint");
  return A * X;
}

RingMatrix sample_uniform_matrix(const ChainRing& ring, int rows, int cols, TrialRng& rng) {
  RingMatrix A(ring, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) A(r, c) = rng.below(ring.order());
  return A;
}

RingMatrix sample_invertible(const ChainRing& ring, int nn, TrialRng& rng) {
  // Rejection on residue invertibility; acceptance odds are the GL fraction
  // of the residue field, at worst ~29% (q = 2), so this terminates fast.
  for (;;) {
    RingMatrix A = sample_uniform_matrix(ring, nn, nn, rng);
    if (A.residue().rank() == nn) return A;
  }
}

RingMatrix sample_constant_shape(const ChainRing& ring, int rows, int cols, const SShape& rho,
                                 TrialRng& rng) {
  RingMatrix D = RingMatrix::pi_power_diagonal(ring, rows, cols, rho);
  RingMatrix P = sample_invertible(ring, rows, rng);
  RingMatrix Q = sample_invertible(ring, cols, rng);
  return P * D * Q;
}

RingMatrix sample_transfer(const ChannelConfig& config, TrialRng& rng) {
  if (std::holds_alternative<UniformModel>(config.model))
    return sample_uniform_matrix(config.ring, config.m, config.n, rng);
  if (const auto* c = std::get_if<ConstantShapeModel>(&config.model))
    return sample_constant_shape(config.ring, config.m, config.n, c->rho, rng);
  const auto& t = std::get<TableModel>(config.model);
  double u = rng.unit();
  double acc = 0;
  for (const auto& [mat, p] : t.entries) {
    acc += p;
    if (u < acc) return mat;
  }
  return t.entries.back().first;  // guard against accumulated rounding
}

ShapeDistribution shape_distribution(const ChannelConfig& config, std::uint64_t guard,
                                     std::optional<std::uint64_t> mc_samples,
                                     std::uint64_t seed) {
  validate(config);
  ShapeDistribution out{{}, true, 0};
  if (const auto* t = std::get_if<TableModel>(&config.model)) {
    for (const auto& [mat, p] : t->entries) out.probability[shape_of(mat)] += p;
    return out;
  }
  if (const auto* c = std::get_if<ConstantShapeModel>(&config.model)) {
    out.probability[c->rho] = 1.0;
    return out;
  }
  bool enumerable = true;
  std::uint64_t count = 0;
  try {
    count = matrix_space_size(config.ring, config.m, config.n, guard);
  } catch (const GuardExceeded&) {
    enumerable = false;
  }
  if (enumerable) {
    std::map<SShape, std::uint64_t> tally;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      ++tally[shape_of(matrix_from_index(config.ring, config.m, config.n, idx))];
    for (const auto& [shape, c] : tally)
      out.probability[shape] = static_cast<double>(c) / static_cast<double>(count);
    return out;
  }
  if (!mc_samples)
    throw GuardExceeded("uniform transfer space exceeds the enumeration guard; "
                        "Monte Carlo sampling not requested");
  std::map<SShape, std::uint64_t> tally;
  for (std::uint64_t t = 0; t < *mc_samples; ++t) {
    TrialRng rng(seed, t);
    ++tally[shape_of(sample_uniform_matrix(config.ring, config.m, config.n, rng))];
  }
  out.exact = false;
  out.samples = *mc_samples;
  for (const auto& [shape, c] : tally)
    out.probability[shape] = static_cast<double>(c) / static_cast<double>(*mc_samples);
  return out;
}

CapacityResult capacity(const ChannelConfig& config, std::uint64_t guard,
                        std::optional<std::uint64_t> mc_samples, std::uint64_t seed) {
  validate(config);
  if (const auto* t = std::get_if<TableModel>(&config.model)) {
    double v = 0;
    for (const auto& [mat, p] : t->entries)
      v += p * static_cast<double>(digits_through(shape_of(mat), config.lambda));
    return {v, 0, 0, 0, true};
  }
  if (const auto* c = std::get_if<ConstantShapeModel>(&config.model))
    return {static_cast<double>(digits_through(c->rho, config.lambda)), 0, 0, 0, true};

  bool enumerable = true;
  std::uint64_t count = 0;
  try {
    count = matrix_space_size(config.ring, config.m, config.n, guard);
  } catch (const GuardExceeded&) {
    enumerable = false;
  }
  if (enumerable) {
    // Integer accumulation keeps the exact value reproducible to the bit.
    std::uint64_t total = 0;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      total += digits_through(shape_of(matrix_from_index(config.ring, config.m, config.n, idx)),
                              config.lambda);
    return {static_cast<double>(total) / static_cast<double>(count), 0, 0, 0, true};
  }
  if (!mc_samples)
    throw GuardExceeded("uniform transfer space exceeds the enumeration guard; "
                        "Monte Carlo sampling not requested");
  const std::uint64_t T = *mc_samples;
  if (T < 2) throw SpecError("need at least 2 Monte Carlo samples");
  double sum = 0, sumsq = 0;
  for (std::uint64_t t = 0; t < T; ++t) {
    TrialRng rng(seed, t);
    auto v = static_cast<double>(digits_through(
        shape_of(sample_uniform_matrix(config.ring, config.m, config.n, rng)), config.lambda));
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / static_cast<double>(T);
  double var = (sumsq - static_cast<double>(T) * mean * mean) / static_cast<double>(T - 1);
  if (var < 0) var = 0;
  double se = std::sqrt(var / static_cast<double>(T));
  return {mean, se, 1.96 * se, T, false};
}

double entropy_oracle(const RingMatrix& A, const SShape& lambda, std::uint64_t guard) {
  const ChainRing& R = A.ring();
  const int n = A.cols();
  const int ell = lambda.last();
  const int s = R.s();
  if (lambda.s() != s) throw std::invalid_argument("shape length must equal ring index");

  // Odometer over admissible inputs: the entry at column c ranges over the
  // q^{s-g(c)} multiples of pi^{g(c)}.
  struct Slot {
    std::uint64_t radix;
    std::uint64_t step;
  };
  std::vector<Slot> slots;
  std::uint64_t total = 1;
  for (int c = 0; c < ell; ++c) {
    int g = column_level(lambda, c);
    std::uint64_t radix = 1;
    for (int i = 0; i < s - g; ++i) radix *= R.q();
    for (int r = 0; r < n; ++r) {
      if (radix > 1 && total > guard / radix)
        throw GuardExceeded("input space exceeds the enumeration guard");
      total *= radix;
      slots.push_back({radix, R.pi_pow(g)});
    }
  }

  std::unordered_map<std::string, std::uint64_t> counts;
  std::vector<std::uint64_t> odo(slots.size(), 0);
  RingMatrix X(R, n, ell);
  for (std::uint64_t it = 0;; ++it) {
    std::size_t k = 0;
    for (int c = 0; c < ell; ++c)
      for (int r = 0; r < n; ++r, ++k) X(r, c) = odo[k] * slots[k].step;
    ++counts[key_of(A * X)];
    // Advance the odometer.
    std::size_t pos = 0;
    while (pos < slots.size()) {
      if (++odo[pos] < slots[pos].radix) break;
      odo[pos] = 0;
      ++pos;
    }
    if (pos == slots.size()) break;
  }

  // Fibers of a module map have equal size, so the entropy is the q-log of
  // the image size, an exact integer. The general formula stays as a net.
  std::uint64_t first = counts.begin()->second;
  bool uniform_fibers = true;
  for (const auto& [key, c] : counts)
    if (c != first) {
      uniform_fibers = false;
      break;
    }
  if (uniform_fibers) {
    std::uint64_t image = counts.size();
    std::uint64_t power = 1;
    int h = 0;
    while (power < image) {
      power *= R.q();
      ++h;
    }
    if (power == image) return static_cast<double>(h);
  }
  double H = 0;
  for (const auto& [key, c] : counts) {
    double p = static_cast<double>(c) / static_cast<double>(total);
    H -= p * std::log(p);
  }
  return H / std::log(static_cast<double>(R.q()));
}

SimulationResult simulate_error_rate(const ChannelConfig& config, const CompositeCode& code,
                                     std::uint64_t trials, std::uint64_t seed, int threads) {
  validate(config);
  if (!code.ring().same_ring(config.ring)) throw SpecError("code ring mismatch");
  if (code.n() != config.n) throw SpecError("code row count mismatch");
  if (code.lambda() != config.lambda) throw SpecError("code packet shape mismatch");
  if (threads < 1) throw SpecError("thread count must be positive");

  const int s = config.ring.s();
  auto t0 = std::chrono::steady_clock::now();

  struct Partial {
    std::uint64_t errors = 0;
    std::vector<std::uint64_t> stage_failures;
    std::uint64_t channel_mismatches = 0;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(threads));
  for (auto& p : partials) p.stage_failures.assign(static_cast<std::size_t>(s), 0);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Partial& out) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      TrialRng rng(seed, t);
      CompositeMessage msg = code.random_message(rng);
      std::vector<RingMatrix> X = code.encode(msg);
      std::vector<RingMatrix> A, Y;
      A.reserve(static_cast<std::size_t>(code.shots()));
      Y.reserve(static_cast<std::size_t>(code.shots()));
      for (int j = 0; j < code.shots(); ++j) {
        A.push_back(sample_transfer(config, rng));
        Y.push_back(transmit(X[static_cast<std::size_t>(j)], A.back(), config.lambda));
      }
      CompositeDecodeResult res = code.decode(Y, A);
      if (res.status == CompositeDecodeResult::Status::Ok && res.message == msg) continue;
      ++out.errors;
      if (res.status == CompositeDecodeResult::Status::StageFailure) {
        ++out.stage_failures[static_cast<std::size_t>(res.failed_stage)];
      } else if (res.status == CompositeDecodeResult::Status::ChannelMismatch) {
        ++out.channel_mismatches;
      } else {
        // Ok with the wrong message: attribute to the first differing stage.
        for (int i = 0; i < s; ++i)
          if (res.message.messages[static_cast<std::size_t>(i)] !=
              msg.messages[static_cast<std::size_t>(i)]) {
            ++out.stage_failures[static_cast<std::size_t>(i)];
            break;
          }
      }
    }
  };

  if (threads == 1) {
    run_range(0, trials, partials[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = trials / static_cast<std::uint64_t>(threads);
    std::uint64_t rem = trials % static_cast<std::uint64_t>(threads);
    std::uint64_t lo = 0;
    for (int w = 0; w < threads; ++w) {
      std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
      pool.emplace_back(run_range, lo, hi, std::ref(partials[static_cast<std::size_t>(w)]));
      lo = hi;
    }
    for (auto& th : pool) th.join();
  }

  SimulationResult out;
  out.trials = trials;
  out.stage_failures.assign(static_cast<std::size_t>(s), 0);
  for (const Partial& p : partials) {
    out.errors += p.errors;
    out.channel_mismatches += p.channel_mismatches;
    for (int i = 0; i < s; ++i)
      out.stage_failures[static_cast<std::size_t>(i)] += p.stage_failures[static_cast<std::size_t>(i)];
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

RingMatrix sounding_wrap(const RingMatrix& payload, const SShape& lambda_tx) {
  const ChainRing& R = payload.ring();
  const int n = payload.rows();
  if (lambda_tx.s() != R.s()) throw std::invalid_argument("shape length must equal ring index");
  if (lambda_tx[0] < n)
    throw std::invalid_argument("sounding needs lambda_0 >= n for the identity block");
  if (payload.cols() != lambda_tx.last() - n)
    throw std::invalid_argument("payload width must be lambda_{s-1} - n");
  if (!payload.satisfies_column_constraint(shape_sub_scalar(lambda_tx, n)))
    throw std::invalid_argument("payload violates its column constraint");
  return RingMatrix::hstack(RingMatrix::identity(R, n), payload);
}

SoundingView sounding_split(const RingMatrix& Y, int n) {
  if (n < 0 || n > Y.cols()) throw std::invalid_argument("bad identity block width");
  return SoundingView{Y.cols_slice(0, n), Y.cols_slice(n, Y.cols())};
}

}  // namespace chainmmc
