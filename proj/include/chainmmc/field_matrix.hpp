#ifndef CHAINMMC_FIELD_MATRIX_HPP
#define CHAINMMC_FIELD_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "chainmmc/finite_field.hpp"

namespace chainmmc {

// Dense matrix over a finite field; entries are element codes. Dimensions may
// be zero (empty slices occur naturally in layered decoding).
class FieldMatrix {
 public:
  FieldMatrix(FiniteField field, int rows, int cols);
  static FieldMatrix identity(const FiniteField& field, int n);

  const FiniteField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t operator()(int r, int c) const { return v_[idx(r, c)]; }
  std::uint64_t& operator()(int r, int c) { return v_[idx(r, c)]; }
  std::uint64_t at(int r, int c) const;
  void set(int r, int c, std::uint64_t value);

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix scaled(std::uint64_t c) const;
  FieldMatrix transposed() const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  FieldMatrix rows_slice(int r0, int r1) const;  // rows [r0, r1)
  FieldMatrix cols_slice(int c0, int c1) const;  // cols [c0, c1)

  int rank() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  FiniteField field_;
  int rows_, cols_;
  std::vector<std::uint64_t> v_;
};

// Solution set of M x = b, solved column by column for a block right side.
struct FieldSolveResult {
  enum class Kind { Unique, None, Affine };
  Kind kind;
  // One solution per right-hand column; meaningful for Unique and Affine.
  FieldMatrix particular;
  // Basis of the kernel of M, one vector (length cols of M) per entry;
  // empty for Unique.
  std::vector<std::vector<std::uint64_t>> kernel;
};

// Gaussian elimination over the field; exact classification of the solution
// set. B must have the same row count as M.
FieldSolveResult field_solve(const FieldMatrix& M, const FieldMatrix& B);

}  // namespace chainmmc

#endif
