#include <doctest.h>

#include <set>
#include <vector>

#include "chainmmc/chain_ring.hpp"
#include "chainmmc/errors.hpp"
#include "chainmmc/rng.hpp"

using namespace chainmmc;

namespace {

std::vector<ChainRing> small_rings() {
  return {
      ChainRing::parse("z:2:3"),      // Z8
      ChainRing::parse("z:3:2"),      // Z9
      ChainRing::parse("z:5:1"),      // Z5, field case
      ChainRing::parse("fqu:2:1:3"),  // F2[u]/(u^3)
      ChainRing::parse("fqu:2:2:2"),  // F4[u]/(u^2)
      ChainRing::parse("fqu:3:1:2"),  // F3[u]/(u^2)
  };
}

}  // namespace

TEST_CASE("ring text forms parse and print") {
  ChainRing z8 = ChainRing::parse("z:2:3");
  CHECK(z8.family() == RingFamily::IntegerMod);
  CHECK(z8.q() == 2);
  CHECK(z8.s() == 3);
  CHECK(z8.order() == 8);
  CHECK(z8.to_string() == "z:2:3");

  ChainRing f4u = ChainRing::parse("fqu:2:2:2");
  CHECK(f4u.family() == RingFamily::PolyNilpotent);
  CHECK(f4u.q() == 4);
  CHECK(f4u.s() == 2);
  CHECK(f4u.order() == 16);
  CHECK(f4u.to_string() == "fqu:2:2:2");

  CHECK_THROWS_AS(ChainRing::parse("z:4:2"), SpecError);   // composite modulus base
  CHECK_THROWS_AS(ChainRing::parse("z:2:0"), SpecError);
  CHECK_THROWS_AS(ChainRing::parse("z:2"), SpecError);
  CHECK_THROWS_AS(ChainRing::parse("ring:2:3"), SpecError);
  CHECK_THROWS_AS(ChainRing::parse("z:2:40"), SpecError);  // order guard 2^31
}

TEST_CASE("fixed arithmetic instances") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CHECK(z8.add(6, 7) == 5);
  CHECK(z8.mul(4, 2) == 0);
  ChainRing f2u2 = ChainRing::poly_nilpotent(2, 1, 2);
  CHECK(f2u2.mul(f2u2.pi(), f2u2.pi()) == 0);
}

TEST_CASE("ring axioms hold on random triples") {
  for (const ChainRing& R : small_rings()) {
    TrialRng rng(11, R.order());
    for (int t = 0; t < 1000; ++t) {
      std::uint64_t a = rng.below(R.order());
      std::uint64_t b = rng.below(R.order());
      std::uint64_t c = rng.below(R.order());
      CHECK(R.add(a, b) == R.add(b, a));
      CHECK(R.mul(a, b) == R.mul(b, a));
      CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
      CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
      CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      CHECK(R.add(a, 0) == a);
      CHECK(R.mul(a, 1) == a);
      CHECK(R.add(a, R.neg(a)) == 0);
      CHECK(R.sub(a, b) == R.add(a, R.neg(b)));
    }
  }
}

TEST_CASE("digit expansion round trips exhaustively") {
  for (const ChainRing& R : small_rings()) {
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      std::vector<std::uint64_t> d(static_cast<std::size_t>(R.s()));
      std::uint64_t rebuilt = 0;
      for (int i = 0; i < R.s(); ++i) {
        d[static_cast<std::size_t>(i)] = R.digit(a, i);
        CHECK(d[static_cast<std::size_t>(i)] < R.q());
        rebuilt = R.add(rebuilt, R.mul_pi_pow(R.digit(a, i), i));
      }
      CHECK(rebuilt == a);
      CHECK(R.from_digits(d) == a);
    }
  }
}

TEST_CASE("fixed digit expansions") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CHECK(z8.digit(6, 0) == 0);
  CHECK(z8.digit(6, 1) == 1);
  CHECK(z8.digit(6, 2) == 1);
  CHECK(z8.truncate(6, 2) == 2);
  for (int i = 0; i < 3; ++i) CHECK(z8.digit(0, i) == 0);
  CHECK_THROWS_AS(z8.digit(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(z8.digit(6, -1), std::invalid_argument);
}

TEST_CASE("truncation is congruent modulo the ideal") {
  for (const ChainRing& R : small_rings()) {
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      for (int i = 0; i <= R.s(); ++i) {
        std::uint64_t tr = R.truncate(a, i);
        // a - truncate(a, i) lies in the ideal generated by pi^i
        CHECK(R.valuation(R.sub(a, tr)) >= i);
        // rebuilt from the first i digits
        std::uint64_t rebuilt = 0;
        for (int j = 0; j < i; ++j) rebuilt = R.add(rebuilt, R.mul_pi_pow(R.digit(a, j), j));
        CHECK(tr == rebuilt);
      }
      CHECK(R.truncate(a, 0) == 0);
      CHECK(R.truncate(a, R.s()) == a);
    }
  }
}

TEST_CASE("valuation matches ideal membership") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CHECK(z8.valuation(4) == 2);
  CHECK(z8.valuation(3) == 0);
  CHECK(z8.valuation(0) == 3);

  for (const ChainRing& R : small_rings()) {
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      int v = R.valuation(a);
      if (a == 0) {
        CHECK(v == R.s());
      } else {
        // a is in <pi^v> \ <pi^{v+1}>: the digit at v is the lowest nonzero
        for (int j = 0; j < v; ++j) CHECK(R.digit(a, j) == 0);
        CHECK(R.digit(a, v) != 0);
      }
      CHECK((v == 0) == R.is_unit(a));
      for (std::uint64_t b = 0; b < R.order(); ++b) {
        int expect = R.valuation(a) + R.valuation(b);
        if (expect > R.s()) expect = R.s();
        CHECK(R.valuation(R.mul(a, b)) == expect);
      }
    }
  }
}

TEST_CASE("ideal sizes follow the chain") {
  for (const ChainRing& R : small_rings()) {
    for (int i = 0; i <= R.s(); ++i) {
      std::set<std::uint64_t> ideal;
      for (std::uint64_t a = 0; a < R.order(); ++a) ideal.insert(R.mul_pi_pow(a, i));
      std::uint64_t expect = 1;
      for (int j = 0; j < R.s() - i; ++j) expect *= R.q();
      CHECK(ideal.size() == expect);
    }
  }
}

TEST_CASE("unit inverses exist exactly for residue nonzero") {
  for (const ChainRing& R : small_rings()) {
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      if (R.is_unit(a)) {
        CHECK(R.mul(a, R.inv_unit(a)) == 1);
      } else {
        CHECK(R.residue(a) == 0);
        CHECK_THROWS_AS(R.inv_unit(a), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("pi powers and scaled multiplication agree") {
  for (const ChainRing& R : small_rings()) {
    CHECK(R.pi_pow(0) == 1);
    CHECK(R.pi_pow(R.s()) == 0);
    for (std::uint64_t a = 0; a < R.order(); ++a)
      for (int i = 0; i <= R.s(); ++i) CHECK(R.mul_pi_pow(a, i) == R.mul(a, R.pi_pow(i)));
  }
  ChainRing z5 = ChainRing::integer_mod(5, 1);
  CHECK(z5.pi() == 0);  // maximal ideal of a field is zero
  CHECK(z5.valuation(3) == 0);
  CHECK(z5.valuation(0) == 1);
}

TEST_CASE("residue projection is a ring homomorphism onto the residue field") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CHECK(z8.residue(6) == 0);
  CHECK(z8.lift(1) == 1);
  ChainRing f4u = ChainRing::poly_nilpotent(2, 2, 2);
  // constant-term projection: a + b*u -> a
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) CHECK(f4u.residue(a + 4 * b) == a);

  for (const ChainRing& R : small_rings()) {
    const FiniteField& F = R.residue_field();
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      for (std::uint64_t b = 0; b < R.order(); ++b) {
        CHECK(R.residue(R.add(a, b)) == F.add(R.residue(a), R.residue(b)));
        CHECK(R.residue(R.mul(a, b)) == F.mul(R.residue(a), R.residue(b)));
      }
    }
    for (std::uint64_t c = 0; c < R.q(); ++c) CHECK(R.residue(R.lift(c)) == c);
  }
}

TEST_CASE("digit shift identities hold for random elements") {
  for (const ChainRing& R : small_rings()) {
    const FiniteField& F = R.residue_field();
    TrialRng rng(13, R.order());
    for (int t = 0; t < 1000; ++t) {
      std::uint64_t x = rng.below(R.order());
      std::uint64_t y = rng.below(R.order());
      std::uint64_t z = rng.below(R.order());
      // scaling by pi^i shifts the digit string up by i
      for (int i = 0; i <= R.s(); ++i)
        for (int j = 0; i + j < R.s(); ++j)
          CHECK(R.digit(R.mul_pi_pow(x, i), i + j) == R.digit(x, j));
      // digit i of x + y pi^i + z pi^{i+1} agrees with digit_i(x) + digit_0(y)
      // in the residue field
      for (int i = 0; i < R.s(); ++i) {
        std::uint64_t combined =
            R.add(x, R.add(R.mul_pi_pow(y, i), R.mul_pi_pow(z, i + 1)));
        std::uint64_t lhs = R.residue(R.digit(combined, i));
        std::uint64_t rhs = F.add(R.residue(R.digit(x, i)), R.residue(R.digit(y, 0)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("element text forms round trip") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CHECK(z8.element_to_string(6) == "6");
  CHECK(z8.element_parse("6") == 6);
  CHECK_THROWS_AS(z8.element_parse("8"), SpecError);

  ChainRing f4u = ChainRing::poly_nilpotent(2, 2, 2);
  for (std::uint64_t a = 0; a < f4u.order(); ++a)
    CHECK(f4u.element_parse(f4u.element_to_string(a)) == a);
  CHECK_THROWS_AS(f4u.element_parse("4,0"), SpecError);

  for (const ChainRing& R : small_rings())
    for (std::uint64_t a = 0; a < R.order(); ++a)
      CHECK(R.element_parse(R.element_to_string(a)) == a);
}

TEST_CASE("ring identity is structural") {
  CHECK(ChainRing::parse("z:2:3").same_ring(ChainRing::integer_mod(2, 3)));
  CHECK_FALSE(ChainRing::parse("z:2:3").same_ring(ChainRing::parse("fqu:2:1:3")));
  CHECK_FALSE(ChainRing::parse("z:2:3").same_ring(ChainRing::parse("z:2:2")));
}
