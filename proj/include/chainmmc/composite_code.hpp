#ifndef CHAINMMC_COMPOSITE_CODE_HPP
#define CHAINMMC_COMPOSITE_CODE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chainmmc/gabidulin.hpp"
#include "chainmmc/ring_matrix.hpp"
#include "chainmmc/shape.hpp"
#include "chainmmc/smith.hpp"

namespace chainmmc {

// messages[i][j] is the stage-i message of shot j.
struct CompositeMessage {
  std::vector<std::vector<Message>> messages;
  bool operator==(const CompositeMessage& o) const { return messages == o.messages; }
  bool operator!=(const CompositeMessage& o) const { return messages != o.messages; }
};

struct CompositeDecodeResult {
  enum class Status {
    Ok,
    StageFailure,     // a component decode was ambiguous or inconsistent
    ChannelMismatch,  // the observation is not reachable from any admissible input
  };
  Status status = Status::Ok;
  int failed_stage = -1;
  int failed_shot = -1;
  ComponentDecodeOutcome::Status component_status = ComponentDecodeOutcome::Status::Ok;
  CompositeMessage message;           // valid for Ok
  std::vector<RingMatrix> codewords;  // reconstructed inputs, valid for Ok
};

// Layered code over a chain ring: a codeword is sum_i pi^i * lift([C_i | 0])
// where C_i is a codeword of the stage-i component over the residue field
// with lambda_i columns. Codewords satisfy the column constraint lambda by
// construction, and the digit layers decouple: the receiver peels stage 0
// from the residue, re-encodes, subtracts its contribution, and moves up.
class CompositeCode {
 public:
  CompositeCode(ChainRing ring, int n, SShape lambda,
                std::vector<std::shared_ptr<const ComponentCode>> components, int shots = 1);

  const ChainRing& ring() const { return ring_; }
  int n() const { return n_; }
  const SShape& lambda() const { return lambda_; }
  int shots() const { return shots_; }
  const ComponentCode& component(int i) const { return *components_[static_cast<std::size_t>(i)]; }

  // log_q of the codebook size per channel use.
  double rate_qdigits() const;

  CompositeMessage random_message(TrialRng& rng) const;
  std::vector<RingMatrix> encode(const CompositeMessage& m) const;

  // Single-shot codebook enumeration, guarded.
  std::uint64_t message_space_size() const;
  CompositeMessage message_from_index(std::uint64_t index) const;

  // Multistage decoding of a block of observations: outputs[j] = transfers[j]
  // * codewords[j] for each shot j. Stage i is decoded across all shots
  // before stage i+1, since its layer is needed to cancel carries in the
  // next. Exact arithmetic throughout: the result status certifies whether
  // the compatible codeword is unique.
  CompositeDecodeResult decode(const std::vector<RingMatrix>& outputs,
                               const std::vector<RingMatrix>& transfers) const;

 private:
  ChainRing ring_;
  int n_;
  SShape lambda_;
  std::vector<std::shared_ptr<const ComponentCode>> components_;
  int shots_;
};

// Composite of maximum-rank-distance components sized for shape deficiency
// beta: stage i has dimension n - beta_i, so its rank distance beta_i + 1
// absorbs the loss a deficiency-beta transfer can inflict on layer i.
// Requires lambda_0 >= n and beta <= (n, ..., n).
CompositeCode mrd_composite(const ChainRing& ring, int n, const SShape& lambda,
                            const SShape& beta, int shots = 1);

enum class DeficiencyCheckMode {
  Criterion,  // pairwise codeword difference shapes
  Oracle,     // exhaustive transfer matrices, ground truth by definition
};

// Whether every transfer matrix of shape deficiency at most beta keeps the
// (single-shot) codebook injective. The two modes must agree; Criterion is
// the difference-shape characterization, Oracle enumerates transfers of
// every admissible shape with `m_rows` output rows (default n).
bool shape_deficiency_correcting(const CompositeCode& code, const SShape& beta,
                                 DeficiencyCheckMode mode, int m_rows = -1,
                                 std::uint64_t guard = (1u << 24));

}  // namespace chainmmc

#endif
