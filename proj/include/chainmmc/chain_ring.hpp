#ifndef CHAINMMC_CHAIN_RING_HPP
#define CHAINMMC_CHAIN_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chainmmc/finite_field.hpp"

namespace chainmmc {

enum class RingFamily {
  IntegerMod,     // Z_{p^s}, generator of the maximal ideal is p
  PolyNilpotent,  // F_q[u]/(u^s), generator of the maximal ideal is u
};

// A finite chain ring with residue field F_q and nilpotency index s: the
// ideals form the single chain R > (pi) > (pi^2) > ... > (pi^s) = 0.
//
// Elements are integer codes in [0, q^s). Every element has a unique
// expansion x = sum_i x_i pi^i with digits x_i drawn from a fixed set of
// coset representatives of the residue field, and the code is the base-q
// integer whose digit i is the residue-field code of x_i. For IntegerMod the
// representatives are {0, ..., p-1} and the code coincides with the ordinary
// integer value; for PolyNilpotent the representatives are the embedded field
// constants and the code lists the polynomial coefficients.
//
// Copies share the underlying implementation; the type behaves like a value.
class ChainRing {
 public:
  static ChainRing integer_mod(std::uint32_t p, int s);
  static ChainRing poly_nilpotent(std::uint32_t p, int r, int s);

  // "z:p:s" for Z_{p^s}, "fqu:p:r:s" for F_{p^r}[u]/(u^s).
  static ChainRing parse(const std::string& text);
  std::string to_string() const;

  RingFamily family() const;
  std::uint32_t p() const;
  int r() const;  // residue field degree over F_p (1 for IntegerMod)
  int s() const;
  std::uint64_t q() const;      // residue field order p^r
  std::uint64_t order() const;  // q^s
  const FiniteField& residue_field() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

  bool is_unit(std::uint64_t a) const;
  std::uint64_t inv_unit(std::uint64_t a) const;  // throws on non-units

  std::uint64_t pi() const;             // the chosen ideal generator
  std::uint64_t pi_pow(int i) const;    // pi^i for 0 <= i <= s (pi^s = 0)
  std::uint64_t mul_pi_pow(std::uint64_t a, int i) const;

  // Digit i of the pi-adic expansion as a residue-field code, 0 <= i < s.
  std::uint64_t digit(std::uint64_t a, int i) const;
  // Element with the given digits (low to high, codes < q; at most s).
  std::uint64_t from_digits(const std::vector<std::uint64_t>& d) const;
  // Truncation to the digits below i: the unique representative of a modulo
  // pi^i with zero digits at positions >= i. 0 <= i <= s.
  std::uint64_t truncate(std::uint64_t a, int i) const;
  // Smallest i with digit i nonzero; s for the zero element.
  int valuation(std::uint64_t a) const;

  // Projection onto the residue field and the digit-set section back. The
  // section maps field code c to the ring element whose expansion is the
  // single digit c; it is multiplicative on digits but not additive.
  std::uint64_t residue(std::uint64_t a) const;
  std::uint64_t lift(std::uint64_t field_code) const;

  std::string element_to_string(std::uint64_t a) const;
  std::uint64_t element_parse(const std::string& text) const;

  bool same_ring(const ChainRing& other) const;

 private:
  struct Impl;
  explicit ChainRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace chainmmc

#endif
