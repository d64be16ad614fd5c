#include "doctest.h"

#include "mv2/pit.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mv2;
using test_support::to_digits;
using test_support::to_stream;

namespace {

std::vector<Pit> digits(const Pait& x) { return {x.digits().begin(), x.digits().end()}; }

}  // namespace

TEST_CASE("radix and width bounds") {
  CHECK_THROWS_AS(Radix(1), Error);
  CHECK_THROWS_AS(Radix(65536), Error);
  CHECK_NOTHROW(Radix(65535));
  CHECK_THROWS_AS(Width(0), Error);
  CHECK_THROWS_AS(Width(4097), Error);
  CHECK(Radix(2).bits_per_pit() == 1);
  CHECK(Radix(3).bits_per_pit() == 2);
  CHECK(Radix(16).bits_per_pit() == 4);
  CHECK(Radix(17).bits_per_pit() == 5);
  CHECK(Radix(65535).bits_per_pit() == 16);
}

TEST_CASE("pait_of_value") {
  CHECK(digits(pait_of_value(0, Radix(2), Width(8))) == std::vector<Pit>{0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(digits(pait_of_value(13, Radix(2), Width(8))) == std::vector<Pit>{0, 0, 0, 0, 1, 1, 0, 1});
  CHECK(digits(pait_of_value(5, Radix(3), Width(2))) == std::vector<Pit>{1, 2});

  SUBCASE("out of range") {
    try {
      pait_of_value(256, Radix(2), Width(8));
      FAIL("expected range error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::range);
    }
    CHECK_THROWS_AS(pait_of_value(9, Radix(3), Width(2)), Error);
  }
}

TEST_CASE("value_of_pait") {
  CHECK(value_of_pait(Pait(Radix(2), {0, 0, 0, 0, 1, 1, 0, 1})) == 13);
  CHECK(value_of_pait(Pait(Radix(3), {1, 2})) == 5);
  CHECK(value_of_pait(Pait(Radix(2), {0})) == 0);
  CHECK_THROWS_AS(Pait(Radix(3), {1, 3}), Error);
  CHECK_THROWS_AS(Pait(Radix(3), {}), Error);
}

TEST_CASE("value round trip sweeps every p^n <= 2^16") {
  for (unsigned p : {2u, 3u, 5u, 16u, 256u}) {
    for (unsigned n = 1; oracle::ipow(p, n) <= (1u << 16); ++n) {
      const auto total = oracle::ipow(p, n);
      for (std::uint64_t v = 0; v < total; ++v) {
        const auto x = pait_of_value(v, Radix(p), Width(n));
        REQUIRE(value_of_pait(x) == v);
      }
    }
  }
}

TEST_CASE("significant_length") {
  CHECK(significant_length(pait_of_value(13, Radix(2), Width(8))) == 4);
  CHECK(significant_length(pait_of_value(0, Radix(2), Width(8))) == 1);
  CHECK(significant_length(pait_of_value(128, Radix(2), Width(8))) == 8);

  SUBCASE("equals 1 + floor(log_p v)") {
    for (unsigned p : {2u, 3u, 7u}) {
      for (std::uint64_t v = 0; v < 2000; ++v) {
        REQUIRE(significant_length(pait_of_value(v, Radix(p), Width(12))) == oracle::digit_count(v, p));
      }
    }
  }
}

TEST_CASE("main_file") {
  auto one = main_file(Radix(2), Width(1));
  REQUIRE(one.size() == 2);
  CHECK(digits(one.pait(0)) == std::vector<Pit>{0});
  CHECK(digits(one.pait(1)) == std::vector<Pit>{1});

  auto bytes = main_file(Radix(2), Width(8));
  CHECK(bytes.size() == 256);
  CHECK(bytes.flat().size() == 2048);

  auto ternary = main_file(Radix(3), Width(2));
  CHECK(std::vector<Pit>(ternary.flat().begin(), ternary.flat().end()) ==
        std::vector<Pit>{0, 0, 0, 1, 0, 2, 1, 0, 1, 1, 1, 2, 2, 0, 2, 1, 2, 2});

  try {
    main_file(Radix(2), Width(30));
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
  }
  CHECK_THROWS_AS(main_file(Radix(4), Width(9), 1u << 16), Error);
  CHECK_THROWS_AS(main_file(Radix(65535), Width(4096)), Error);
}

TEST_CASE("main_file_range continues the odometer") {
  const auto whole = main_file(Radix(3), Width(4));
  const auto tail = main_file_range(Radix(3), Width(4), 50, 31);
  REQUIRE(tail.size() == 31);
  for (std::size_t i = 0; i < tail.size(); ++i) CHECK(tail.pait(i) == whole.pait(50 + i));
}

TEST_CASE("significant length total over the main file matches the closed form") {
  // (n p^(n+1) - (n+1) p^n + p) / (p - 1), checked against brute force
  for (unsigned p : {2u, 3u, 4u, 5u}) {
    for (unsigned n = 1; n <= 8 && oracle::ipow(p, n) <= (1u << 16); ++n) {
      const auto block = main_file(Radix(p), Width(n));
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < block.size(); ++i) sum += significant_length(block[i]);

      std::uint64_t brute = 0;
      for (std::uint64_t v = 0; v < oracle::ipow(p, n); ++v) brute += oracle::digit_count(v, p);
      const std::uint64_t closed =
          (n * oracle::ipow(p, n + 1) + p - (n + 1) * oracle::ipow(p, n)) / (p - 1);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(sum == brute);
      CHECK(sum == closed);
    }
  }
}

TEST_CASE("block_into_paits") {
  SUBCASE("exact multiple") {
    auto b = block_into_paits(flatten(main_file(Radix(2), Width(8))), Width(8));
    CHECK(b.paits.size() == 256);
    CHECK(b.pad_count == 0);
  }
  SUBCASE("clone-1 main-file remainder length") {
    auto b = block_into_paits(PitStream(Radix(2), std::vector<Pit>(1794, 1)), Width(8));
    CHECK(b.paits.size() == 225);
    CHECK(b.pad_count == 6);
    CHECK(b.paits[224][1] == 1);
    CHECK(b.paits[224][2] == 0);
  }
  SUBCASE("empty") {
    auto b = block_into_paits(PitStream(Radix(2)), Width(8));
    CHECK(b.paits.empty());
    CHECK(b.pad_count == 0);
  }
  SUBCASE("flatten then strip pad is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned p = 2 + rng() % 15;
      const unsigned n = 1 + rng() % 12;
      const auto s = to_stream(oracle::random_digits(rng, p, rng() % 300), p);
      auto b = block_into_paits(s, Width(n));
      REQUIRE(b.pad_count < n);
      auto flat = flatten(b.paits);
      REQUIRE(flat.size() == s.size() + b.pad_count);
      flat.truncate_back(b.pad_count);
      REQUIRE(flat == s);
    }
  }
}

TEST_CASE("pack_pits layout") {
  CHECK(pack_pits(PitStream(Radix(2), {1, 0, 1, 1})) == std::vector<std::uint8_t>{0xB0});
  CHECK(pack_pits(PitStream(Radix(3), {2, 1})) == std::vector<std::uint8_t>{0x90});
  CHECK(pack_pits(PitStream(Radix(2))).empty());
  CHECK(pack_pits(PitStream(Radix(16), {0xA, 0xB, 0xC})) == std::vector<std::uint8_t>{0xAB, 0xC0});
}

TEST_CASE("unpack_pits errors") {
  try {
    unpack_pits(std::vector<std::uint8_t>{0xFF}, 9, Radix(2));
    FAIL("expected underrun");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::underrun);
  }
  try {
    // 0b11 decodes to 3 >= p
    unpack_pits(std::vector<std::uint8_t>{0xC0}, 1, Radix(3));
    FAIL("expected corruption");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::corruption);
  }
}

TEST_CASE("pack/unpack round trip, radices 2..16") {
  std::mt19937_64 rng(7);
  for (unsigned p = 2; p <= 16; ++p) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = to_stream(oracle::random_digits(rng, p, rng() % 500), p);
      REQUIRE(unpack_pits(pack_pits(s), s.size(), Radix(p)) == s);
    }
  }
  const auto wide = to_stream(oracle::random_digits(rng, 65535, 100), 65535);
  CHECK(unpack_pits(pack_pits(wide), wide.size(), Radix(65535)) == wide);
}

TEST_CASE("pit stream invariants") {
  CHECK_THROWS_AS(PitStream(Radix(3), {0, 3}), Error);
  PitStream s(Radix(3));
  CHECK_THROWS_AS(s.push_back(3), Error);
  PaitBlock b(Radix(2), Width(8));
  CHECK_THROWS_AS(b.push_back(Pait(Radix(2), {0, 1})), Error);
  const std::vector<Pait> mixed{Pait(Radix(2), {0, 1}), Pait(Radix(3), {0, 1})};
  try {
    make_block(mixed);
    FAIL("expected contract error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::contract);
  }
  CHECK(to_digits(flatten(make_block(std::vector<Pait>{Pait(Radix(2), {0, 1})}))) == oracle::Digits{0, 1});
}
