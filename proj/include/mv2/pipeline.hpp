#pragma once

// Multi-round recoding and the v1 archive container.
//
// Round i blocks the current stream into paits (zero-padding the tail),
// encodes it with the chosen clone, keeps that round's flag streams and feeds
// the remainder into round i + 1. The container keeps the final remainder,
// every round's flags and every round's pad count.
//
// Container v1, all integers big-endian:
//
//   offset  size  field
//        0     4  magic "MV2C"
//        4     1  version (0x01)
//        5     2  p
//        7     2  n
//        9     1  clone id
//       10     1  rounds m
//       11     1  input format (0 = bytes, 1 = digits)
//       12     8  original pit count
//       20  18*m  per round: pad count (2), flag_len pits (8), flag_msb pits (8)
//               8  remainder pit count
//                  remainder, then for each round flag_msb (clone 2) and
//                  flag_len, each packed and zero-padded to a byte
//               4  CRC-32 of everything before it

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mv2/clone.hpp"
#include "mv2/pit.hpp"

namespace mv2 {

enum class InputFormat : std::uint8_t { bytes = 0, digits = 1 };

struct PipelineParams {
  Radix p;
  Width n;
  CloneId clone = CloneId::strip_zeros;
  unsigned rounds = 1;
  InputFormat format = InputFormat::digits;

  /// Throws range / contract / unsupported_width for invalid combinations.
  void validate() const;

  friend bool operator==(const PipelineParams&, const PipelineParams&) = default;
};

struct RoundRecord {
  unsigned pad_count = 0;
  PitStream flag_len;
  std::optional<PitStream> flag_msb;

  std::uint64_t flag_pits() const noexcept {
    return flag_len.size() + (flag_msb ? flag_msb->size() : 0);
  }

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct Container {
  PipelineParams params;
  std::uint64_t original_pit_count = 0;
  std::vector<RoundRecord> rounds;
  PitStream remainder;

  /// Final remainder plus all flags.
  std::uint64_t stored_pits() const noexcept;

  friend bool operator==(const Container&, const Container&) = default;
};

Container encode_pipeline(const PitStream& input, const PipelineParams& params,
                          std::uint64_t cap = kDefaultEnumerationCap);
PitStream decode_pipeline(const Container& c, std::uint64_t cap = kDefaultEnumerationCap);

/// Per-round pit accounting, derived from a container.
struct RoundStats {
  std::uint64_t input_pits;  // including padding
  unsigned pad_count;
  std::uint64_t pait_count;
  std::uint64_t remainder_pits;
  std::uint64_t flag_pits;
};
std::vector<RoundStats> round_stats(const Container& c);

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kHeaderSize = 20;
inline constexpr std::size_t kRoundRecordSize = 18;

std::vector<std::uint8_t> serialize_container(const Container& c);
Container parse_container(std::span<const std::uint8_t> bytes);

/// bytes: 8 pits per byte MSB first (p must be 2); digits: one pit per byte.
PitStream ingest(std::span<const std::uint8_t> bytes, InputFormat format, Radix p);
std::vector<std::uint8_t> emit(const PitStream& s, InputFormat format);

}  // namespace mv2
