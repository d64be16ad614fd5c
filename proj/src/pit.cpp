#include "mv2/pit.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace mv2 {

Radix::Radix(unsigned p) : p_(p) {
  if (p < kMin || p > kMax) {
    throw Error(Errc::range, "radix " + std::to_string(p) + " outside [2, 65535]");
  }
}

unsigned Radix::bits_per_pit() const noexcept {
  return static_cast<unsigned>(std::bit_width(p_ - 1));
}

Width::Width(unsigned n) : n_(n) {
  if (n < kMin || n > kMax) {
    throw Error(Errc::range, "width " + std::to_string(n) + " outside [1, 4096]");
  }
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    result *= base;
  }
  return result;
}

std::uint64_t alphabet_size(Radix p, Width n, std::uint64_t cap) {
  auto size = checked_pow(p.value(), n.value());
  if (!size || *size > cap) {
    throw Error(Errc::capacity, "alphabet " + std::to_string(p.value()) + "^" +
                                    std::to_string(n.value()) + " exceeds enumeration cap " +
                                    std::to_string(cap));
  }
  return *size;
}

Pait::Pait(Radix p, std::vector<Pit> digits) : p_(p), digits_(std::move(digits)) {
  (void)Width(static_cast<unsigned>(std::min<std::size_t>(digits_.size(), Width::kMax + 1)));
  for (Pit d : digits_) {
    if (d >= p.value()) throw Error(Errc::range, "digit " + std::to_string(d) + " >= radix");
  }
}

PitStream::PitStream(Radix p, std::vector<Pit> pits) : p_(p), pits_(std::move(pits)) {
  for (std::size_t i = 0; i < pits_.size(); ++i) {
    if (pits_[i] >= p.value()) {
      throw Error(Errc::range, "pit " + std::to_string(pits_[i]) + " at offset " +
                                   std::to_string(i) + " >= radix");
    }
  }
}

void PitStream::push_back(Pit pit) {
  if (pit >= p_.value()) throw Error(Errc::range, "pit >= radix");
  pits_.push_back(pit);
}

void PitStream::append(std::span<const Pit> pits) {
  for (Pit pit : pits) {
    if (pit >= p_.value()) throw Error(Errc::range, "pit >= radix");
  }
  pits_.insert(pits_.end(), pits.begin(), pits.end());
}

Pait PaitBlock::pait(std::size_t i) const {
  auto d = (*this)[i];
  return Pait(p_, std::vector<Pit>(d.begin(), d.end()));
}

void PaitBlock::push_back(const Pait& x) {
  if (x.radix() != p_ || x.width() != n_) {
    throw Error(Errc::contract, "pait (p, n) differs from block");
  }
  pits_.insert(pits_.end(), x.digits().begin(), x.digits().end());
}

void PaitBlock::push_value(std::uint64_t value) {
  const std::size_t n = n_.value();
  pits_.resize(pits_.size() + n);
  Pit* out = pits_.data() + pits_.size() - n;
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Pit>(value % p_.value());
    value /= p_.value();
  }
}

void PaitBlock::push_digits(std::span<const Pit> digits) {
  pits_.insert(pits_.end(), digits.begin(), digits.end());
}

PaitBlock make_block(std::span<const Pait> paits) {
  if (paits.empty()) throw Error(Errc::contract, "cannot infer (p, n) from no paits");
  PaitBlock block(paits.front().radix(), paits.front().width());
  block.reserve(paits.size());
  for (const auto& x : paits) block.push_back(x);
  return block;
}

Pait pait_of_value(std::uint64_t value, Radix p, Width n) {
  auto limit = checked_pow(p.value(), n.value());
  if (limit && value >= *limit) {
    throw Error(Errc::range, "value " + std::to_string(value) + " >= p^n");
  }
  PaitBlock block(p, n);
  block.push_value(value);
  return block.pait(0);
}

std::uint64_t value_of_digits(std::span<const Pit> digits, Radix p) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 0;
  for (Pit d : digits) {
    if (value > (kMax - d) / p.value()) throw Error(Errc::range, "pait value exceeds 64 bits");
    value = value * p.value() + d;
  }
  return value;
}

std::uint64_t value_of_pait(const Pait& x) { return value_of_digits(x.digits(), x.radix()); }

PaitBlock main_file(Radix p, Width n, std::uint64_t cap) {
  return main_file_range(p, n, 0, alphabet_size(p, n, cap));
}

PaitBlock main_file_range(Radix p, Width n, std::uint64_t first, std::uint64_t count) {
  PaitBlock block(p, n);
  if (count == 0) return block;
  block.reserve(count);
  block.push_value(first);
  std::vector<Pit> digits(block[0].begin(), block[0].end());
  for (std::uint64_t i = 1; i < count; ++i) {
    // odometer increment
    for (std::size_t j = digits.size(); j-- > 0;) {
      if (++digits[j] < p.value()) break;
      digits[j] = 0;
    }
    block.push_digits(digits);
  }
  return block;
}

BlockedStream block_into_paits(const PitStream& s, Width n) {
  const std::size_t w = n.value();
  const unsigned pad = static_cast<unsigned>((w - s.size() % w) % w);
  PaitBlock block(s.radix(), n);
  block.reserve((s.size() + pad) / w);
  for (std::size_t i = 0; i + w <= s.size(); i += w) {
    block.push_digits(s.pits().subspan(i, w));
  }
  if (pad != 0) {
    std::vector<Pit> tail(s.pits().end() - static_cast<std::ptrdiff_t>(w - pad), s.pits().end());
    tail.resize(w, 0);
    block.push_digits(tail);
  }
  return {std::move(block), pad};
}

PitStream flatten(const PaitBlock& block) {
  PitStream s(block.radix());
  s.reserve(block.flat().size());
  s.append(block.flat());
  return s;
}

std::optional<std::uint64_t> packed_size(std::uint64_t count, Radix p) {
  const std::uint64_t bits = p.bits_per_pit();
  if (count > std::numeric_limits<std::uint64_t>::max() / bits) return std::nullopt;
  return (count * bits + 7) / 8;
}

std::vector<std::uint8_t> pack_pits(std::span<const Pit> pits, Radix p) {
  const unsigned bits = p.bits_per_pit();
  std::vector<std::uint8_t> out(*packed_size(pits.size(), p), 0);
  std::size_t bitpos = 0;
  for (Pit pit : pits) {
    for (unsigned b = bits; b-- > 0; ++bitpos) {
      if ((pit >> b) & 1u) out[bitpos >> 3] |= static_cast<std::uint8_t>(0x80u >> (bitpos & 7));
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_pits(const PitStream& s) { return pack_pits(s.pits(), s.radix()); }

PitStream unpack_pits(std::span<const std::uint8_t> bytes, std::uint64_t count, Radix p) {
  auto need = packed_size(count, p);
  if (!need || *need > bytes.size()) {
    throw Error(Errc::underrun, "need " + std::to_string(count) + " pits but only " +
                                    std::to_string(bytes.size()) + " bytes available");
  }
  const unsigned bits = p.bits_per_pit();
  std::vector<Pit> pits(count);
  std::size_t bitpos = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    unsigned v = 0;
    for (unsigned b = 0; b < bits; ++b, ++bitpos) {
      v = (v << 1) | ((bytes[bitpos >> 3] >> (7 - (bitpos & 7))) & 1u);
    }
    if (v >= p.value()) {
      throw Error(Errc::corruption,
                  "packed pit " + std::to_string(i) + " decodes to " + std::to_string(v) + " >= radix");
    }
    pits[i] = static_cast<Pit>(v);
  }
  return PitStream(p, std::move(pits));
}

}  // namespace mv2
