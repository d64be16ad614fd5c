#pragma once

// The three MV2 clone transforms.
//
// Each clone splits a sequence of paits into secondary streams:
//   remainder - the variable-length code of every pait, concatenated
//   flag_len  - per pait, (n - L) zero markers then a terminator 1, where L
//               is the code length (clone 2 uses n - 1 in place of n)
//   flag_msb  - clone 2 only: the stripped most significant pit of each pait
// Every pait contributes exactly n + 1 pits across the streams.

#include <cstdint>
#include <optional>
#include <span>

#include "mv2/codebook.hpp"
#include "mv2/pit.hpp"

namespace mv2 {

enum class CloneId : std::uint8_t { strip_zeros = 1, split_msb = 2, codebook = 3 };

/// Throws range for anything but 1, 2 or 3.
CloneId clone_from_int(unsigned id);
inline unsigned to_int(CloneId id) { return static_cast<unsigned>(id); }

struct SecondaryBundle {
  CloneId clone;
  Radix p;
  Width n;
  std::uint64_t pait_count = 0;
  PitStream remainder;
  PitStream flag_len;
  std::optional<PitStream> flag_msb;

  SecondaryBundle(CloneId clone, Radix p, Width n)
      : clone(clone), p(p), n(n), remainder(p), flag_len(p) {
    if (clone == CloneId::split_msb) flag_msb.emplace(p);
  }

  std::uint64_t flag_pits() const noexcept {
    return flag_len.size() + (flag_msb ? flag_msb->size() : 0);
  }
  std::uint64_t total_pits() const noexcept { return remainder.size() + flag_pits(); }

  friend bool operator==(const SecondaryBundle&, const SecondaryBundle&) = default;
};

SecondaryBundle encode_clone1(const PaitBlock& input);
/// Throws contract when the paits do not share one (p, n).
SecondaryBundle encode_clone1(std::span<const Pait> input);
PaitBlock decode_clone1(const SecondaryBundle& bundle);

/// Throws unsupported_width for n < 2.
SecondaryBundle encode_clone2(const PaitBlock& input);
SecondaryBundle encode_clone2(std::span<const Pait> input);
PaitBlock decode_clone2(const SecondaryBundle& bundle);

/// Throws contract when the book's (p, n) differ from the input's.
SecondaryBundle encode_clone3(const PaitBlock& input, const CodeBook& book);
SecondaryBundle encode_clone3(std::span<const Pait> input, const CodeBook& book);
PaitBlock decode_clone3(const SecondaryBundle& bundle, const CodeBook& book);

/// Dispatches on `clone`; `book` is required for clone 3 only.
SecondaryBundle encode(CloneId clone, const PaitBlock& input, const CodeBook* book = nullptr);
PaitBlock decode(const SecondaryBundle& bundle, const CodeBook* book = nullptr);

/// Number of terminators in a unary length flag stream.
std::uint64_t count_terminators(const PitStream& flag_len);

}  // namespace mv2
