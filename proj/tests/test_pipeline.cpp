#include "doctest.h"

#include "mv2/analytics.hpp"
#include "mv2/pipeline.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mv2;
using test_support::to_digits;
using test_support::to_stream;

namespace {

template <typename F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::range;
}

PipelineParams params(unsigned p, unsigned n, unsigned clone, unsigned rounds,
                      InputFormat format = InputFormat::digits) {
  return {Radix(p), Width(n), clone_from_int(clone), rounds, format};
}

}  // namespace

TEST_CASE("one round of clone 1 on the main file") {
  const auto input = flatten(main_file(Radix(2), Width(8)));
  const auto c = encode_pipeline(input, params(2, 8, 1, 1));
  CHECK(c.remainder.size() == 1794);
  CHECK(c.rounds.at(0).flag_len.size() == 510);
  CHECK(c.stored_pits() == 2304);
  CHECK(Ratio(c.stored_pits(), input.size()) == Ratio(9, 8));
  CHECK(decode_pipeline(c) == input);
}

TEST_CASE("two rounds of clone 1 on the main file follow the oracle") {
  auto ref1 = oracle::clone1(oracle::main_file_values(2, 8), 2, 8);
  unsigned pad = 0;
  const auto round2_values = oracle::block(ref1.remainder, 2, 8, &pad);
  CHECK(pad == 6);
  CHECK(round2_values.size() == 225);
  const auto ref2 = oracle::clone1(round2_values, 2, 8);

  const auto input = flatten(main_file(Radix(2), Width(8)));
  const auto c = encode_pipeline(input, params(2, 8, 1, 2));
  REQUIRE(c.rounds.size() == 2);
  CHECK(c.rounds[0].pad_count == 0);
  CHECK(c.rounds[1].pad_count == 6);
  CHECK(to_digits(c.rounds[0].flag_len) == ref1.flag_len);
  CHECK(to_digits(c.rounds[1].flag_len) == ref2.flag_len);
  CHECK(to_digits(c.remainder) == ref2.remainder);
  CHECK(c.stored_pits() == ref2.remainder.size() + ref2.flag_len.size() + ref1.flag_len.size());

  const auto stats = round_stats(c);
  CHECK(stats[0].input_pits == 2048);
  CHECK(stats[0].remainder_pits == 1794);
  CHECK(stats[1].input_pits == 1800);
  for (const auto& s : stats) CHECK((s.remainder_pits + s.flag_pits) * 8 == s.input_pits * 9);
  CHECK(decode_pipeline(c) == input);
}

TEST_CASE("empty input") {
  for (unsigned clone : {1u, 2u, 3u}) {
    const auto c = encode_pipeline(PitStream(Radix(2)), params(2, 8, clone, 3));
    CHECK(c.original_pit_count == 0);
    CHECK(c.stored_pits() == 0);
    CHECK(c.rounds.size() == 3);
    CHECK(decode_pipeline(c).empty());
    CHECK(parse_container(serialize_container(c)) == c);
  }
}

TEST_CASE("pipeline parameter checks") {
  CHECK(error_of([] { params(2, 1, 2, 1).validate(); }) == Errc::unsupported_width);
  CHECK(error_of([] { params(3, 8, 1, 1, InputFormat::bytes).validate(); }) == Errc::contract);
  CHECK(error_of([] { params(2, 8, 1, 0).validate(); }) == Errc::range);
  CHECK(error_of([] { params(2, 8, 1, 256).validate(); }) == Errc::range);
  CHECK(error_of([] { encode_pipeline(PitStream(Radix(3)), params(2, 8, 1, 1)); }) == Errc::contract);
}

TEST_CASE("pipeline round trip with per-round conservation") {
  std::mt19937_64 rng(21);
  for (unsigned clone : {1u, 2u, 3u}) {
    for (unsigned rounds : {1u, 2u, 5u, 10u}) {
      for (int trial = 0; trial < 4; ++trial) {
        const unsigned p = 2 + rng() % 6;
        const unsigned n = 2 + rng() % 7;
        const auto s = to_stream(oracle::random_digits(rng, p, rng() % 3000), p);
        const auto c = encode_pipeline(s, params(p, n, clone, rounds));
        std::uint64_t in = s.size();
        for (const auto& st : round_stats(c)) {
          REQUIRE(st.input_pits == in + st.pad_count);
          REQUIRE((st.remainder_pits + st.flag_pits) * n == st.input_pits * (n + 1));
          in = st.remainder_pits;
        }
        REQUIRE(in == c.remainder.size());
        REQUIRE(decode_pipeline(c) == s);
      }
    }
  }
}

TEST_CASE("decode rejects inconsistent containers") {
  const auto input = flatten(main_file(Radix(2), Width(4)));
  const auto good = encode_pipeline(input, params(2, 4, 1, 2));

  auto c = good;
  c.original_pit_count += 1;
  CHECK(error_of([&] { decode_pipeline(c); }) == Errc::corruption);

  c = good;
  c.rounds[1].pad_count = 4;
  CHECK(error_of([&] { decode_pipeline(c); }) == Errc::corruption);

  c = good;
  c.rounds.pop_back();
  CHECK(error_of([&] { decode_pipeline(c); }) == Errc::corruption);

  c = good;
  c.remainder.push_back(1);
  CHECK_THROWS_AS(decode_pipeline(c), Error);
}

TEST_CASE("ingest and emit") {
  const std::vector<std::uint8_t> byte{0x0D};
  CHECK(to_digits(ingest(byte, InputFormat::bytes, Radix(2))) == oracle::Digits{0, 0, 0, 0, 1, 1, 0, 1});
  const std::vector<std::uint8_t> digits{2, 1, 0};
  CHECK(to_digits(ingest(digits, InputFormat::digits, Radix(3))) == oracle::Digits{2, 1, 0});

  try {
    ingest(std::vector<std::uint8_t>{0, 1, 7}, InputFormat::digits, Radix(3));
    FAIL("expected invalid digit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_digit);
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK(error_of([] { ingest(std::vector<std::uint8_t>{1}, InputFormat::bytes, Radix(3)); }) == Errc::contract);

  std::mt19937_64 rng(1);
  std::vector<std::uint8_t> bytes(1000);
  for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
  CHECK(emit(ingest(bytes, InputFormat::bytes, Radix(2)), InputFormat::bytes) == bytes);
  CHECK(emit(ingest(digits, InputFormat::digits, Radix(3)), InputFormat::digits) == digits);
  CHECK(error_of([] { emit(PitStream(Radix(2), {1, 0, 1}), InputFormat::bytes); }) == Errc::contract);
}
