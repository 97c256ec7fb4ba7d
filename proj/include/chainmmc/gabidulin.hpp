#ifndef CHAINMMC_GABIDULIN_HPP
#define CHAINMMC_GABIDULIN_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chainmmc/field_matrix.hpp"
#include "chainmmc/rng.hpp"

namespace chainmmc {

// A message for a component code: a vector of symbol codes whose meaning is
// defined by the code.
using Message = std::vector<std::uint64_t>;

struct ComponentDecodeOutcome {
  enum class Status {
    Ok,            // a unique codeword is compatible with the observation
    Ambiguous,     // several codewords are compatible
    Inconsistent,  // no codeword is compatible
  };
  Status status;
  Message message;  // valid only for Ok
};

// A matrix code over the residue field used as one layer of a composite
// code: codewords are rows x width matrices.
class ComponentCode {
 public:
  virtual ~ComponentCode() = default;

  virtual const FiniteField& field() const = 0;
  virtual int rows() const = 0;
  virtual int width() const = 0;

  virtual double rate_qdigits() const = 0;  // log_q of the codebook size
  virtual std::uint64_t message_space_size() const = 0;
  virtual Message message_from_index(std::uint64_t index) const = 0;
  virtual Message random_message(TrialRng& rng) const = 0;

  virtual FieldMatrix encode(const Message& m) const = 0;

  // Decodes from Y = A X with the transfer matrix A known to the receiver.
  // A has `rows()` columns; Y has the same row count as A and `width()`
  // columns. Exact: the status certifies the size of the compatible set.
  virtual ComponentDecodeOutcome decode_coherent(const FieldMatrix& Y,
                                                 const FieldMatrix& A) const = 0;
};

// Gabidulin code: evaluations of linearized polynomials f(x) = sum_t f_t
// x^(q^t), deg bound k, at `rows` F_q-linearly independent points of
// F_{q^width}, written out in coordinates. Rank distance rows - k + 1, which
// meets the rank-metric Singleton bound (maximum rank distance), so it
// corrects any transfer matrix whose rank deficiency is less than the
// distance. Requires rows <= width and 0 <= k <= rows.
class GabidulinCode final : public ComponentCode {
 public:
  // Evaluation points default to the power basis 1, z, ..., z^(rows-1) of the
  // degree-`width` extension.
  GabidulinCode(FiniteField base, int rows, int width, int k);
  GabidulinCode(FiniteField base, int rows, int width, int k,
                std::vector<std::uint64_t> points);

  const FiniteField& field() const override { return base_; }
  const FiniteField& extension_field() const { return ext_; }
  int rows() const override { return n_; }
  int width() const override { return m_; }
  int dimension() const { return k_; }
  const std::vector<std::uint64_t>& points() const { return points_; }

  double rate_qdigits() const override { return static_cast<double>(k_) * m_; }
  std::uint64_t message_space_size() const override;
  Message message_from_index(std::uint64_t index) const override;
  Message random_message(TrialRng& rng) const override;

  // Message: k coefficient codes in F_{q^width}.
  FieldMatrix encode(const Message& m) const override;
  ComponentDecodeOutcome decode_coherent(const FieldMatrix& Y,
                                         const FieldMatrix& A) const override;

 private:
  FiniteField base_, ext_;
  int n_, m_, k_;
  std::vector<std::uint64_t> points_;
  // frob_points_[t][j] = points_[j] ^ (q^t), the evaluation of the t-th
  // monomial at point j.
  std::vector<std::vector<std::uint64_t>> frob_points_;
  // Codewords of the unit messages e_{t,b} = coefficient t set to the b-th
  // basis element; encoding is F_q-linear in these.
  std::vector<FieldMatrix> unit_codewords_;
};

// Rank of X - Y over their common field.
int rank_distance(const FieldMatrix& x, const FieldMatrix& y);

// Minimum rank of a nonzero codeword; for linear codes this is the minimum
// rank distance. Enumerates the codebook, guarded.
int min_rank_distance(const ComponentCode& code, std::uint64_t guard = (1u << 24));

// Ground truth by enumeration: no two distinct codewords collide under any
// `rows x rows` transfer matrix of rank at least rows - b. Guarded on both
// the codebook and the matrix space.
bool rank_deficiency_correcting_oracle(const ComponentCode& code, int b,
                                       std::uint64_t guard = (1u << 24));

}  // namespace chainmmc

#endif
