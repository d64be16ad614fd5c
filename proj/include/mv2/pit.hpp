#pragma once

// Radix-p digit ("pit") streams and fixed-width words ("paits").
//
// A pait of width n is n pits, most significant first. Every codec in this
// library consumes paits and produces pit streams; all lengths are counted
// in pits, never in bytes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mv2/error.hpp"

namespace mv2 {

using Pit = std::uint16_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

class Radix {
 public:
  static constexpr unsigned kMin = 2;
  static constexpr unsigned kMax = 65535;

  explicit Radix(unsigned p);

  unsigned value() const noexcept { return p_; }
  /// Bits used per pit by pack_pits: ceil(log2 p).
  unsigned bits_per_pit() const noexcept;

  friend bool operator==(Radix, Radix) = default;

 private:
  unsigned p_;
};

class Width {
 public:
  static constexpr unsigned kMin = 1;
  static constexpr unsigned kMax = 4096;

  explicit Width(unsigned n);

  unsigned value() const noexcept { return n_; }

  friend bool operator==(Width, Width) = default;

 private:
  unsigned n_;
};

/// p^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent);

/// Number of paits in A_n, throwing capacity when p^n exceeds `cap`.
std::uint64_t alphabet_size(Radix p, Width n, std::uint64_t cap = kDefaultEnumerationCap);

class Pait {
 public:
  /// Throws range if the digit count is not n or a digit is >= p.
  Pait(Radix p, std::vector<Pit> digits);

  Radix radix() const noexcept { return p_; }
  Width width() const noexcept { return Width(static_cast<unsigned>(digits_.size())); }
  std::span<const Pit> digits() const noexcept { return digits_; }

  friend bool operator==(const Pait&, const Pait&) = default;

 private:
  Radix p_;
  std::vector<Pit> digits_;
};

class PitStream {
 public:
  explicit PitStream(Radix p) : p_(p) {}
  /// Throws range if any pit is >= p.
  PitStream(Radix p, std::vector<Pit> pits);

  Radix radix() const noexcept { return p_; }
  std::size_t size() const noexcept { return pits_.size(); }
  bool empty() const noexcept { return pits_.empty(); }
  std::span<const Pit> pits() const noexcept { return pits_; }
  Pit operator[](std::size_t i) const { return pits_[i]; }

  void reserve(std::size_t n) { pits_.reserve(n); }
  void push_back(Pit pit);
  void append(std::span<const Pit> pits);
  void append_zeros(std::size_t count) { pits_.insert(pits_.end(), count, Pit{0}); }
  /// Drops the last `count` pits.
  void truncate_back(std::size_t count) { pits_.resize(pits_.size() - count); }

  friend bool operator==(const PitStream&, const PitStream&) = default;

 private:
  Radix p_;
  std::vector<Pit> pits_;
};

/// A sequence of paits sharing one (p, n), stored densely as count*n pits.
class PaitBlock {
 public:
  PaitBlock(Radix p, Width n) : p_(p), n_(n) {}

  Radix radix() const noexcept { return p_; }
  Width width() const noexcept { return n_; }
  std::size_t size() const noexcept { return pits_.size() / n_.value(); }
  bool empty() const noexcept { return pits_.empty(); }

  std::span<const Pit> operator[](std::size_t i) const {
    return std::span<const Pit>(pits_).subspan(i * n_.value(), n_.value());
  }
  Pait pait(std::size_t i) const;
  std::span<const Pit> flat() const noexcept { return pits_; }

  void reserve(std::size_t count) { pits_.reserve(count * n_.value()); }
  /// Throws contract when the pait's (p, n) differ from the block's.
  void push_back(const Pait& x);
  /// Appends the n-digit expansion of `value`; value must be < p^n.
  void push_value(std::uint64_t value);
  /// Appends n pits verbatim; pits must already be < p.
  void push_digits(std::span<const Pit> digits);

  friend bool operator==(const PaitBlock&, const PaitBlock&) = default;

 private:
  Radix p_;
  Width n_;
  std::vector<Pit> pits_;
};

/// Throws contract when the paits do not all share one (p, n), or the span is empty.
PaitBlock make_block(std::span<const Pait> paits);

Pait pait_of_value(std::uint64_t value, Radix p, Width n);

/// Numeric value of a pait's digits. Throws range if it exceeds 64 bits.
std::uint64_t value_of_digits(std::span<const Pit> digits, Radix p);
std::uint64_t value_of_pait(const Pait& x);

/// n minus the number of leading zero pits; the all-zero word keeps one pit.
inline unsigned significant_length(std::span<const Pit> digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == 0) ++i;
  return static_cast<unsigned>(digits.size() - i);
}
inline unsigned significant_length(const Pait& x) { return significant_length(x.digits()); }

/// All p^n paits once each, ascending.
PaitBlock main_file(Radix p, Width n, std::uint64_t cap = kDefaultEnumerationCap);
/// Paits with values [first, first + count) in ascending order; no cap.
PaitBlock main_file_range(Radix p, Width n, std::uint64_t first, std::uint64_t count);

struct BlockedStream {
  PaitBlock paits;
  unsigned pad_count;
};

/// Zero-pads to a multiple of n and splits into paits.
BlockedStream block_into_paits(const PitStream& s, Width n);
PitStream flatten(const PaitBlock& block);

/// ceil(log2 p) bits per pit, MSB first, final byte zero-padded.
std::vector<std::uint8_t> pack_pits(const PitStream& s);
std::vector<std::uint8_t> pack_pits(std::span<const Pit> pits, Radix p);
/// Bytes needed to pack `count` pits; nullopt on overflow.
std::optional<std::uint64_t> packed_size(std::uint64_t count, Radix p);
PitStream unpack_pits(std::span<const std::uint8_t> bytes, std::uint64_t count, Radix p);

}  // namespace mv2
