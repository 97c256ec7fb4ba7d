#ifndef CHAINMMC_RING_MATRIX_HPP
#define CHAINMMC_RING_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <initializer_list>
#include <string>
#include <vector>

#include "chainmmc/chain_ring.hpp"
#include "chainmmc/field_matrix.hpp"
#include "chainmmc/shape.hpp"

namespace chainmmc {

// Dense matrix over a chain ring; entries are element codes. Dimensions may
// be zero.
class RingMatrix {
 public:
  RingMatrix(ChainRing ring, int rows, int cols);
  RingMatrix(ChainRing ring, std::initializer_list<std::initializer_list<std::uint64_t>> rows);
  static RingMatrix identity(const ChainRing& ring, int n);

  // Diagonal matrix diag(pi^{v_0}, ..., pi^{v_{r-1}}) of size rows x cols
  // whose valuations realize the given shape: rho_i entries have valuation
  // <= i. Requires rho_{s-1} <= min(rows, cols).
  static RingMatrix pi_power_diagonal(const ChainRing& ring, int rows, int cols,
                                      const SShape& rho);

  const ChainRing& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t operator()(int r, int c) const { return v_[idx(r, c)]; }
  std::uint64_t& operator()(int r, int c) { return v_[idx(r, c)]; }
  std::uint64_t at(int r, int c) const;
  void set(int r, int c, std::uint64_t value);

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix scaled(std::uint64_t c) const;
  RingMatrix scaled_pi_pow(int i) const;
  bool operator==(const RingMatrix& o) const;
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  // Digit i of every entry, as a residue-field matrix of codes.
  FieldMatrix digit(int i) const;
  // Entrywise truncation below digit i.
  RingMatrix truncate(int i) const;
  // Entrywise projection to the residue field.
  FieldMatrix residue() const;
  // Entrywise digit-set section of a residue-field matrix.
  static RingMatrix lift(const ChainRing& ring, const FieldMatrix& m);

  // True iff column c is a multiple of pi^g(c) for every column, where g(c)
  // is the level of c in lambda. Such matrices form the admissible input set
  // of a channel with packet shape lambda. Requires cols == lambda_{s-1}.
  bool satisfies_column_constraint(const SShape& lambda) const;

  RingMatrix rows_slice(int r0, int r1) const;
  RingMatrix cols_slice(int c0, int c1) const;
  static RingMatrix hstack(const RingMatrix& a, const RingMatrix& b);

  // Text format: one row per line, entries separated by spaces, each entry in
  // the ring's element syntax.
  std::string to_text() const;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  ChainRing ring_;
  int rows_, cols_;
  std::vector<std::uint64_t> v_;
};

// Reads "rows cols" followed by rows*cols element tokens (whitespace
// separated, line structure not significant).
RingMatrix read_matrix(const ChainRing& ring, std::istream& in);
RingMatrix parse_matrix(const ChainRing& ring, const std::string& text);

}  // namespace chainmmc

#endif
