#pragma once

#include <random>
#include <vector>

#include "mv2/pit.hpp"
#include "oracle.hpp"

namespace test_support {

inline mv2::PitStream to_stream(const oracle::Digits& d, unsigned p) {
  return mv2::PitStream(mv2::Radix(p), std::vector<mv2::Pit>(d.begin(), d.end()));
}

inline oracle::Digits to_digits(const mv2::PitStream& s) { return {s.pits().begin(), s.pits().end()}; }

inline mv2::PaitBlock block_of(const std::vector<std::uint64_t>& values, unsigned p, unsigned n) {
  mv2::PaitBlock b{mv2::Radix(p), mv2::Width(n)};
  for (auto v : values) b.push_value(v);
  return b;
}

inline std::vector<std::uint64_t> random_values(std::mt19937_64& rng, unsigned p, unsigned n, std::size_t count) {
  std::uniform_int_distribution<std::uint64_t> d(0, oracle::ipow(p, n) - 1);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = d(rng);
  return out;
}

}  // namespace test_support
