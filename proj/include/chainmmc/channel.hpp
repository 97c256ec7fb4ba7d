#ifndef CHAINMMC_CHANNEL_HPP
#define CHAINMMC_CHANNEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "chainmmc/composite_code.hpp"
#include "chainmmc/ring_matrix.hpp"
#include "chainmmc/rng.hpp"
#include "chainmmc/shape.hpp"
#include "chainmmc/smith.hpp"

namespace chainmmc {

// Transfer matrix models for the multiplicative channel Y = A X.
struct UniformModel {};  // A uniform over all m x n ring matrices

struct ConstantShapeModel {  // A uniform over matrices of one fixed shape
  SShape rho;
};

struct TableModel {  // explicit finite distribution
  std::vector<std::pair<RingMatrix, double>> entries;  // probabilities sum to 1
};

using TransferModel = std::variant<UniformModel, ConstantShapeModel, TableModel>;

struct ChannelConfig {
  ChainRing ring;
  int n;          // input packet count (columns of A)
  int m;          // output packet count (rows of A)
  SShape lambda;  // input column constraint
  TransferModel model;
};

void validate(const ChannelConfig& config);
std::string model_to_string(const TransferModel& model);

// One channel use; checks the column constraint on X.
RingMatrix transmit(const RingMatrix& X, const RingMatrix& A, const SShape& lambda);

RingMatrix sample_uniform_matrix(const ChainRing& ring, int rows, int cols, TrialRng& rng);
// Uniform over matrices with invertible residue, by rejection.
RingMatrix sample_invertible(const ChainRing& ring, int nn, TrialRng& rng);
// Uniform over matrices of the given shape: P * D_rho * Q with P, Q uniform
// invertible. Invertible-conjugation orbits of D_rho cover the shape class.
RingMatrix sample_constant_shape(const ChainRing& ring, int rows, int cols, const SShape& rho,
                                 TrialRng& rng);
RingMatrix sample_transfer(const ChannelConfig& config, TrialRng& rng);

struct ShapeDistribution {
  std::map<SShape, double> probability;
  bool exact;              // enumeration vs Monte Carlo
  std::uint64_t samples;   // 0 for exact
};

// Distribution of shape(A) under the model. Uniform models enumerate when
// the matrix space is at most `guard`, otherwise fall back to `mc_samples`
// draws; absent that, GuardExceeded.
ShapeDistribution shape_distribution(const ChannelConfig& config, std::uint64_t guard,
                                     std::optional<std::uint64_t> mc_samples,
                                     std::uint64_t seed);

struct CapacityResult {
  double value;           // q-ary digits per channel use
  double stderr_est;      // 0 when exact
  double ci95_half;       // normal-approximation 95% half-width; 0 when exact
  std::uint64_t samples;  // 0 when exact
  bool exact;
};

// Capacity of the coherent multiplicative channel with packet shape lambda:
// E[sum_i shape(A)_{s-1-i} * lambda_i] in q-ary digits. The expectation is
// exact for table and constant-shape models and for enumerable uniform
// models; otherwise Monte Carlo with the given sample count.
CapacityResult capacity(const ChannelConfig& config, std::uint64_t guard,
                        std::optional<std::uint64_t> mc_samples, std::uint64_t seed);

// Entropy of Y = A X in q-ary digits for fixed A and X uniform over the
// admissible inputs, computed from the exact output distribution by
// enumerating all q^{n |lambda|} inputs (guarded). Matches
// sum_i shape(A)_{s-1-i} * lambda_i.
double entropy_oracle(const RingMatrix& A, const SShape& lambda, std::uint64_t guard);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  std::vector<std::uint64_t> stage_failures;  // indexed by failing stage
  std::uint64_t channel_mismatches = 0;       // observation outside the channel law
  double wall_seconds = 0;
};

// Monte Carlo block error rate of a composite code on the channel: each
// trial draws fresh messages and one transfer per shot, transmits, decodes
// coherently, and compares. Trial t uses the generator stream (seed, t), so
// the tally does not depend on the thread count.
SimulationResult simulate_error_rate(const ChannelConfig& config, const CompositeCode& code,
                                     std::uint64_t trials, std::uint64_t seed, int threads = 1);

// Non-coherent operation by channel sounding: prepend an identity block so
// the receiver observes A directly. The payload occupies the remaining
// columns; its constraint is the transmitted constraint minus n.
RingMatrix sounding_wrap(const RingMatrix& payload, const SShape& lambda_tx);

struct SoundingView {
  RingMatrix transfer;  // Y restricted to the identity block: exactly A
  RingMatrix payload;   // Y restricted to the payload block: A * X'
};
SoundingView sounding_split(const RingMatrix& Y, int n);

}  // namespace chainmmc

#endif
