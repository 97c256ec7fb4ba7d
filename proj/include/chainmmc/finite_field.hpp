#ifndef CHAINMMC_FINITE_FIELD_HPP
#define CHAINMMC_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chainmmc {

// A finite field F_{p^d}, possibly built as a tower of extensions. Elements
// are integer codes in [0, order): for a prime field the code is the residue
// itself; for an extension of degree d over a base of order b, the code is
// sum_i c_i * b^i where (c_0, ..., c_{d-1}) are the coordinates over the base
// in the power basis 1, z, ..., z^{d-1} of the defining root z.
//
// Copies share the underlying implementation; the type behaves like a value.
class FiniteField {
 public:
  static FiniteField prime(std::uint32_t p);

  // Extension of the given degree with the canonical defining polynomial:
  // the lexicographically least monic irreducible of that degree over the
  // base, ordered by the code of its non-leading coefficient vector. The
  // search is deterministic, so equal parameters give equal fields.
  static FiniteField extension(const FiniteField& base, int degree);

  // Extension with an explicit monic defining polynomial, given by its
  // coefficient codes low to high (length degree + 1, leading coefficient 1).
  static FiniteField extension(const FiniteField& base, int degree,
                               std::vector<std::uint64_t> modulus);

  std::uint64_t order() const;
  std::uint32_t characteristic() const;
  bool is_prime_field() const;
  int degree() const;        // over the immediate base; 1 for prime fields
  FiniteField base() const;  // prime fields are their own base

  // Monic defining polynomial, coefficients low to high, length degree + 1.
  // For a prime field this is empty.
  const std::vector<std::uint64_t>& modulus() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws on 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // x -> x^b where b is the order of the immediate base field.
  std::uint64_t frobenius(std::uint64_t a) const;

  // Coordinates over the immediate base field.
  std::uint64_t coord(std::uint64_t a, int i) const;
  std::uint64_t from_coords(const std::vector<std::uint64_t>& c) const;

  // The defining root z (code = base order). Requires degree >= 2.
  std::uint64_t gen() const;

  bool same_field(const FiniteField& other) const;
  std::string to_string() const;

  struct Impl;

 private:
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace chainmmc

#endif
