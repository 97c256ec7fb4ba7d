#include "chainmmc/smith.hpp"

#include <cassert>
#include <stdexcept>

#include "chainmmc/errors.hpp"

namespace chainmmc {

namespace {

// Divides a by pi^v exactly; requires valuation(a) >= v. Division by a power
// of the uniformizer is a digit shift in both ring families.
std::uint64_t shift_down(const ChainRing& R, std::uint64_t a, int v) {
  std::uint64_t qv = 1;
  for (int i = 0; i < v; ++i) qv *= R.q();
  return a / qv;
}

SShape shape_from_diagonal(const RingMatrix& D) {
  const ChainRing& R = D.ring();
  const int s = R.s();
  const int r = std::min(D.rows(), D.cols());
  std::vector<int> counts(static_cast<std::size_t>(s), 0);
  for (int t = 0; t < r; ++t) {
    int v = R.valuation(D(t, t));
    for (int i = v; i < s; ++i) ++counts[static_cast<std::size_t>(i)];
  }
  return SShape(std::move(counts));
}

void require_pi_power_diagonal(const RingMatrix& D) {
  const ChainRing& R = D.ring();
  int prev = 0;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) {
      std::uint64_t x = D(i, j);
      if (i != j) {
        if (x != 0) throw std::invalid_argument("matrix is not diagonal");
        continue;
      }
      int v = R.valuation(x);
      if (x != R.pi_pow(v)) throw std::invalid_argument("diagonal entry is not a power of pi");
      if (v < prev) throw std::invalid_argument("diagonal valuations must be non-decreasing");
      prev = v;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const RingMatrix& A) {
  const ChainRing& R = A.ring();
  const int m = A.rows(), n = A.cols(), s = R.s();
  RingMatrix W = A;
  RingMatrix P = RingMatrix::identity(R, m);
  RingMatrix Q = RingMatrix::identity(R, n);
  // Invariant throughout: A == P * W * Q. Every row operation E applied to W
  // is compensated by the column operation E^{-1} on P, and symmetrically
  // for column operations and Q.
  const int r = std::min(m, n);
  for (int t = 0; t < r; ++t) {
    // Pivot: minimum valuation in the trailing block, ties by (row, col).
    int pi_ = -1, pj = -1, pv = s;
    for (int i = t; i < m && pv > 0; ++i)
      for (int j = t; j < n; ++j) {
        int v = R.valuation(W(i, j));
        if (v < pv) {
          pv = v;
          pi_ = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (pv == s) break;  // trailing block is zero

    if (pi_ != t) {
      for (int j = 0; j < n; ++j) std::swap(W(t, j), W(pi_, j));
      for (int i = 0; i < m; ++i) std::swap(P(i, t), P(i, pi_));
    }
    if (pj != t) {
      for (int i = 0; i < m; ++i) std::swap(W(i, t), W(i, pj));
      for (int j = 0; j < n; ++j) std::swap(Q(t, j), Q(pj, j));
    }

    // Normalize the pivot to pi^pv: divide its row by the unit cofactor.
    std::uint64_t unit = shift_down(R, W(t, t), pv);
    std::uint64_t uinv = R.inv_unit(unit);
    for (int j = t; j < n; ++j) W(t, j) = R.mul(W(t, j), uinv);
    for (int i = 0; i < m; ++i) P(i, t) = R.mul(P(i, t), unit);

    // Clear the pivot column. Every entry below has valuation >= pv, so the
    // quotient against pi^pv is exact.
    for (int i = 0; i < m; ++i) {
      if (i == t || W(i, t) == 0) continue;
      std::uint64_t c = shift_down(R, W(i, t), pv);
      for (int j = t; j < n; ++j) W(i, j) = R.sub(W(i, j), R.mul(c, W(t, j)));
      for (int k = 0; k < m; ++k) P(k, t) = R.add(P(k, t), R.mul(c, P(k, i)));
    }
    // Clear the pivot row; the column entries of other rows are already zero,
    // so these column operations only touch row t.
    for (int j = 0; j < n; ++j) {
      if (j == t || W(t, j) == 0) continue;
      std::uint64_t c = shift_down(R, W(t, j), pv);
      for (int i = 0; i < m; ++i) W(i, j) = R.sub(W(i, j), R.mul(c, W(i, t)));
      for (int k = 0; k < n; ++k) Q(t, k) = R.add(Q(t, k), R.mul(c, Q(j, k)));
    }
  }

  // The minimum-valuation pivot rule makes the diagonal valuations
  // non-decreasing, which is the normalization that pins D uniquely.
  SShape shape = shape_from_diagonal(W);
#ifndef NDEBUG
  assert(P * W * Q == A);
  assert(P.residue().rank() == m);
  assert(Q.residue().rank() == n);
#endif
  return SmithDecomposition{std::move(P), std::move(W), std::move(Q), std::move(shape)};
}

SShape shape_of(const RingMatrix& A) { return smith_normal_form(A).shape; }

SShape nullspace_shape(const RingMatrix& A) {
  return scalar_sub_shape(A.cols(), shape_of(A));
}

RingMatrix solve_unit(const RingMatrix& A, const RingMatrix& Y) {
  const ChainRing& R = A.ring();
  if (!R.same_ring(Y.ring())) throw std::invalid_argument("ring mismatch");
  if (A.rows() != A.cols()) throw std::invalid_argument("solve_unit needs a square matrix");
  if (Y.rows() != A.rows()) throw std::invalid_argument("right side row count mismatch");
  FieldMatrix A0 = A.residue();
  if (A0.rank() != A.rows()) throw std::invalid_argument("matrix is not invertible");

  RingMatrix X(R, A.cols(), Y.cols());
  for (int i = 0; i < R.s(); ++i) {
    // Digits below i of X are already correct, so the residual is divisible
    // by pi^i and its digit i is what the residue system must account for.
    RingMatrix residual = Y - A * X;
    FieldSolveResult sol = field_solve(A0, residual.digit(i));
    if (sol.kind != FieldSolveResult::Kind::Unique)
      throw VerificationError("unit solve lost uniqueness");  // unreachable for unit A
    X = X + RingMatrix::lift(R, sol.particular).scaled_pi_pow(i);
  }
  return X;
}

RingMatrix inverse(const RingMatrix& A) {
  return solve_unit(A, RingMatrix::identity(A.ring(), A.rows()));
}

ExtractedDigits extract_digits(const RingMatrix& D, const RingMatrix& Y, const SShape& lambda) {
  const ChainRing& R = D.ring();
  const int s = R.s();
  require_pi_power_diagonal(D);
  if (!R.same_ring(Y.ring())) throw std::invalid_argument("ring mismatch");
  if (lambda.s() != s) throw std::invalid_argument("shape length must equal ring index");
  if (Y.rows() != D.rows() || Y.cols() != lambda.last())
    throw std::invalid_argument("received matrix dimensions mismatch");
  SShape rho = shape_from_diagonal(D);

  // Row t of Y equals pi^{v(t)} times row t of X, so entry (t, c) must have
  // valuation at least v(t) + g(c); anything smaller certifies that no
  // admissible X produced Y.
  const int rdiag = std::min(D.rows(), D.cols());
  for (int t = 0; t < Y.rows(); ++t) {
    int v = (t < rdiag) ? R.valuation(D(t, t)) : s;
    for (int c = 0; c < Y.cols(); ++c) {
      int need = std::min(v + column_level(lambda, c), s);
      if (R.valuation(Y(t, c)) < need)
        throw InconsistentSystem("received matrix is not reachable through this diagonal");
    }
  }

  ExtractedDigits out{rho, lambda, {}};
  for (int i = 0; i < s; ++i) {
    int nrows = rho[s - 1 - i];
    FieldMatrix Xi(R.residue_field(), nrows, lambda[i]);
    for (int t = 0; t < nrows; ++t) {
      // Rows with diagonal valuation j carry digit i of X in digit i+j of Y;
      // t < rho_{s-1-i} guarantees i + j <= s - 1.
      int j = R.valuation(D(t, t));
      for (int c = 0; c < lambda[i]; ++c) Xi(t, c) = R.digit(Y(t, c), i + j);
    }
    out.layer.push_back(std::move(Xi));
  }
  return out;
}

SShape pi_scaled_shape(const RingMatrix& A, int i) {
  if (i < 0 || i > A.ring().s()) throw std::invalid_argument("scale exponent out of range");
  return shape_of(A.scaled_pi_pow(i));
}

}  // namespace chainmmc
