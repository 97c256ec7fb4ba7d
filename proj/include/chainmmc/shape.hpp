#ifndef CHAINMMC_SHAPE_HPP
#define CHAINMMC_SHAPE_HPP

#include <string>
#include <vector>

namespace chainmmc {

// Non-decreasing tuple of s non-negative integers. Shapes index the sizes of
// finitely generated modules over a chain ring with nilpotency index s: entry
// i counts generators of annihilator exponent > i. Immutable after
// construction.
class SShape {
 public:
  explicit SShape(std::vector<int> entries);

  // The constant shape (m, m, ..., m) of length s.
  static SShape constant(int m, int s);
  static SShape zero(int s) { return constant(0, s); }

  // Parses "a,b,c" (comma separated, no spaces required, spaces tolerated).
  static SShape parse(const std::string& text);

  int s() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

  // |mu| = sum of entries. A module of shape mu has q^|mu| elements.
  int size() const;

  // Largest entry mu_{s-1}: the number of generators of the module.
  int last() const { return e_.back(); }

  bool operator==(const SShape& o) const { return e_ == o.e_; }
  bool operator!=(const SShape& o) const { return e_ != o.e_; }
  // Lexicographic; only so shapes can key ordered containers.
  bool operator<(const SShape& o) const { return e_ < o.e_; }

  const std::vector<int>& entries() const { return e_; }
  std::string to_string() const;  // "a,b,c"

 private:
  std::vector<int> e_;
};

// Componentwise partial order a_i <= b_i for all i. Not total.
bool shape_leq(const SShape& a, const SShape& b);

SShape shape_add(const SShape& a, const SShape& b);

// mu - n componentwise; requires n <= mu_0 so the result is a shape.
SShape shape_sub_scalar(const SShape& mu, int n);

// n - mu with entries reversed so the result is again non-decreasing;
// requires mu_{s-1} <= n. Applying it twice returns mu.
SShape scalar_sub_shape(int n, const SShape& mu);

// Level of column c in a module of shape lambda: the smallest i with
// c < lambda_i. Columns of level g carry coefficients that are multiples of
// pi^g. Requires 0 <= c < lambda_{s-1}.
int column_level(const SShape& lambda, int c);

}  // namespace chainmmc

#endif
