#include <doctest.h>

#include <vector>

#include "chainmmc/channel.hpp"
#include "chainmmc/composite_code.hpp"
#include "chainmmc/errors.hpp"
#include "chainmmc/gabidulin.hpp"
#include "chainmmc/rng.hpp"
#include "chainmmc/smith.hpp"
#include "oracles.hpp"

using namespace chainmmc;

namespace {

CompositeDecodeResult decode_one(const CompositeCode& code, const RingMatrix& A,
                                 const RingMatrix& Y) {
  return code.decode({Y}, {A});
}

}  // namespace

TEST_CASE("layered construction validates its pieces") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({1, 1}));
  CHECK(code.n() == 2);
  CHECK(code.lambda() == SShape({2, 2}));
  CHECK(code.shots() == 1);
  CHECK(code.rate_qdigits() == doctest::Approx(4.0));
  CHECK(code.message_space_size() == 16);

  CHECK_THROWS_AS(mrd_composite(z4, 2, SShape({1, 2}), SShape({0, 0})),
                  std::invalid_argument);  // needs lambda_0 >= n
  CHECK_THROWS_AS(mrd_composite(z4, 2, SShape({2, 2}), SShape({2, 3})),
                  std::invalid_argument);  // deficiency beyond the row count
}

TEST_CASE("dimensioning for a target deficiency sets the rate") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  struct Row {
    SShape beta;
    double rate;
  };
  for (const Row& row : {Row{SShape({0, 0}), 8.0}, Row{SShape({0, 1}), 6.0},
                         Row{SShape({1, 1}), 4.0}, Row{SShape({2, 2}), 0.0}}) {
    CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), row.beta);
    CHECK(code.rate_qdigits() == doctest::Approx(row.rate));
    // rate = sum over stages of (n - beta_i) * lambda_i
    double expect = 0;
    for (int i = 0; i < 2; ++i) expect += (2 - row.beta[i]) * 2;
    CHECK(row.rate == doctest::Approx(expect));
  }
}

TEST_CASE("digit layers combine component codewords") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({0, 0}));

  // locate the message whose layers are the two target component codewords
  FieldMatrix want0(z4.residue_field(), 2, 2);
  want0(0, 0) = 1;
  want0(1, 1) = 1;  // [[1,0],[0,1]]
  FieldMatrix want1(z4.residue_field(), 2, 2);
  want1(0, 0) = 1;
  want1(0, 1) = 1;  // [[1,1],[0,0]]

  bool found = false;
  for (std::uint64_t idx = 0; idx < code.message_space_size(); ++idx) {
    CompositeMessage m = code.message_from_index(idx);
    if (code.component(0).encode(m.messages[0][0]) != want0) continue;
    if (code.component(1).encode(m.messages[1][0]) != want1) continue;
    found = true;
    RingMatrix X = code.encode(m)[0];
    CHECK(X == RingMatrix(z4, {{3, 2}, {0, 1}}));
    break;
  }
  CHECK(found);
}

TEST_CASE("codewords satisfy the column constraint by construction") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CompositeCode code = mrd_composite(z8, 2, SShape({2, 2, 3}), SShape({0, 1, 1}));
  TrialRng rng(83, 0);
  for (int t = 0; t < 200; ++t) {
    CompositeMessage m = code.random_message(rng);
    RingMatrix X = code.encode(m)[0];
    CHECK(X.satisfies_column_constraint(SShape({2, 2, 3})));
    // digit layer i restricted to the first lambda_i columns is the component
    // codeword; the rest of the digit row block vanishes
    for (int i = 0; i < 3; ++i) {
      FieldMatrix layer = X.digit(i);
      FieldMatrix cw = code.component(i).encode(m.messages[static_cast<std::size_t>(i)][0]);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < X.cols(); ++c) {
          std::uint64_t want = 0;
          if (c < code.lambda()[i]) want = cw(r, c);
          CHECK(layer(r, c) == want);
        }
    }
  }
}

TEST_CASE("decoding is exhaustively certified against every transfer") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({1, 1}));
  SShape need = scalar_sub_shape(2, SShape({1, 1}));  // admissible when shape(A) >= this

  for (std::uint64_t ai = 0; ai < 256; ++ai) {
    RingMatrix A = testing::matrix_at(z4, 2, 2, ai);
    bool admissible = shape_leq(need, shape_of(A));
    for (std::uint64_t mi = 0; mi < code.message_space_size(); ++mi) {
      CompositeMessage m = code.message_from_index(mi);
      RingMatrix Y = A * code.encode(m)[0];
      CompositeDecodeResult got = decode_one(code, A, Y);
      auto hits = testing::matching_messages(code, {A}, {Y});
      if (admissible) {
        // within the designed deficiency the decoder must land exactly
        REQUIRE(got.status == CompositeDecodeResult::Status::Ok);
        CHECK(got.message == m);
        CHECK(hits.size() == 1);
      } else if (got.status == CompositeDecodeResult::Status::Ok) {
        // beyond it, success is allowed only when the truth is the unique fit
        CHECK(got.message == m);
        CHECK(hits.size() == 1);
        CHECK(hits[0] == mi);
      } else {
        // a genuine observation can at worst be ambiguous, never impossible
        CHECK(got.status == CompositeDecodeResult::Status::StageFailure);
        CHECK(got.component_status == ComponentDecodeOutcome::Status::Ambiguous);
      }
      if (got.status == CompositeDecodeResult::Status::Ok) {
        REQUIRE(got.codewords.size() == 1);
        CHECK(A * got.codewords[0] == Y);
      }
    }
  }
}

TEST_CASE("observations outside the channel image are flagged") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({1, 1}));
  RingMatrix A(z4, {{2, 0}, {0, 2}});
  RingMatrix Y(z4, {{1, 0}, {0, 0}});  // odd entry unreachable through 2I
  CompositeDecodeResult got = decode_one(code, A, Y);
  CHECK(got.status == CompositeDecodeResult::Status::ChannelMismatch);

  CHECK_THROWS_AS(code.decode({Y, Y}, {A}), std::invalid_argument);  // shot count mismatch
}

TEST_CASE("zero-rate codes decode to their only message") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({2, 2}));
  REQUIRE(code.message_space_size() == 1);
  CompositeMessage only = code.message_from_index(0);
  CHECK(code.encode(only)[0].is_zero());
  for (std::uint64_t ai = 0; ai < 256; ++ai) {
    RingMatrix A = testing::matrix_at(z4, 2, 2, ai);
    CompositeDecodeResult got = decode_one(code, A, RingMatrix(z4, 2, 2));
    REQUIRE(got.status == CompositeDecodeResult::Status::Ok);
    CHECK(got.message == only);
  }
}

TEST_CASE("three level codes round trip through invertible transfers") {
  ChainRing z8 = ChainRing::integer_mod(2, 3);
  CompositeCode code = mrd_composite(z8, 2, SShape({2, 2, 2}), SShape({0, 1, 1}));
  CHECK(code.rate_qdigits() == doctest::Approx(8.0));
  TrialRng rng(89, 0);
  for (int t = 0; t < 200; ++t) {
    CompositeMessage m = code.random_message(rng);
    RingMatrix A = sample_invertible(z8, 2, rng);
    CompositeDecodeResult got = decode_one(code, A, A * code.encode(m)[0]);
    REQUIRE(got.status == CompositeDecodeResult::Status::Ok);
    CHECK(got.message == m);
  }
}

TEST_CASE("multi shot blocks decode stage by stage across shots") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({1, 1}), 3);
  CHECK(code.shots() == 3);
  SShape need = scalar_sub_shape(2, SShape({1, 1}));
  TrialRng rng(97, 0);
  for (int t = 0; t < 200; ++t) {
    CompositeMessage m = code.random_message(rng);
    std::vector<RingMatrix> X = code.encode(m);
    REQUIRE(X.size() == 3);
    std::vector<RingMatrix> transfers;
    std::vector<RingMatrix> outputs;
    for (int j = 0; j < 3; ++j) {
      RingMatrix A = sample_uniform_matrix(z4, 2, 2, rng);
      while (!shape_leq(need, shape_of(A))) A = sample_uniform_matrix(z4, 2, 2, rng);
      transfers.push_back(A);
      outputs.push_back(A * X[static_cast<std::size_t>(j)]);
    }
    CompositeDecodeResult got = code.decode(outputs, transfers);
    REQUIRE(got.status == CompositeDecodeResult::Status::Ok);
    CHECK(got.message == m);
    REQUIRE(got.codewords.size() == 3);
    for (int j = 0; j < 3; ++j) CHECK(got.codewords[static_cast<std::size_t>(j)] == X[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("deficiency check modes agree on spot instances") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({1, 1}));
  for (const SShape& beta : testing::all_shapes(2, 2)) {
    bool crit = shape_deficiency_correcting(code, beta, DeficiencyCheckMode::Criterion);
    bool orac = shape_deficiency_correcting(code, beta, DeficiencyCheckMode::Oracle);
    CHECK(crit == orac);
    // designed deficiency must be covered, and it is monotone downward
    if (shape_leq(beta, SShape({1, 1}))) CHECK(crit);
  }
  CHECK_FALSE(
      shape_deficiency_correcting(code, SShape({2, 2}), DeficiencyCheckMode::Criterion));
}

TEST_CASE("taller transfer matrices can only help the oracle") {
  ChainRing z4 = ChainRing::integer_mod(2, 2);
  CompositeCode code = mrd_composite(z4, 2, SShape({2, 2}), SShape({0, 1}));
  SShape beta({0, 1});
  CHECK(shape_deficiency_correcting(code, beta, DeficiencyCheckMode::Oracle, 2));
  CHECK(shape_deficiency_correcting(code, beta, DeficiencyCheckMode::Oracle, 3));
  CHECK(shape_deficiency_correcting(code, beta, DeficiencyCheckMode::Criterion, 3));
}
