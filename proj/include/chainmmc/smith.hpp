#ifndef CHAINMMC_SMITH_HPP
#define CHAINMMC_SMITH_HPP

#include <vector>

#include "chainmmc/ring_matrix.hpp"
#include "chainmmc/shape.hpp"

namespace chainmmc {

// A = P * D * Q with P, Q invertible over the ring and D diagonal with
// pi-power entries whose valuations are non-decreasing. With that
// normalization D is unique, so `shape` is a matrix invariant: shape_i counts
// the diagonal entries of valuation <= i.
struct SmithDecomposition {
  RingMatrix P;
  RingMatrix D;
  RingMatrix Q;
  SShape shape;
};

SmithDecomposition smith_normal_form(const RingMatrix& A);

// Shape of the row/column module of A (they coincide).
SShape shape_of(const RingMatrix& A);

// Shape of {x : A x = 0} as a submodule of R^cols. Equals cols - shape_of(A)
// (scalar minus shape, entries reversed).
SShape nullspace_shape(const RingMatrix& A);

// Solves A X = Y for A square with invertible residue, one digit layer at a
// time: the residue system determines digit i of X from the digit-i residual
// of Y - A * (X truncated below i). Throws std::invalid_argument when A is
// not invertible.
RingMatrix solve_unit(const RingMatrix& A, const RingMatrix& Y);
RingMatrix inverse(const RingMatrix& A);

// Digit layers of the channel input recoverable from Y = D X when D is a
// pi-power diagonal of shape rho and X satisfies the column constraint
// lambda: layer i holds digits X_i of the first rho_{s-1-i} rows at the first
// lambda_i columns. Rows with diagonal valuation j expose digit i+j of Y.
struct ExtractedDigits {
  SShape rho;
  SShape lambda;
  // layer[i] is a rho_{s-1-i} x lambda_i residue-field matrix holding digit i
  // of the recoverable block of X.
  std::vector<FieldMatrix> layer;
};

// Requires D as produced by smith_normal_form (pi-power diagonal, sorted
// valuations). Throws InconsistentSystem when no column-constrained X has
// D X = Y, i.e. some entry of Y has smaller valuation than every product
// D X can produce at that position.
ExtractedDigits extract_digits(const RingMatrix& D, const RingMatrix& Y, const SShape& lambda);

// shape(pi^i * A); equals the shape of A shifted i slots right with zeros in
// front, truncated to s entries.
SShape pi_scaled_shape(const RingMatrix& A, int i);

}  // namespace chainmmc

#endif
