#include "mv2/pipeline.hpp"

#include <algorithm>
#include <string>

namespace mv2 {

void PipelineParams::validate() const {
  if (rounds < 1 || rounds > 255) {
    throw Error(Errc::range, "rounds " + std::to_string(rounds) + " outside [1, 255]");
  }
  if (format == InputFormat::bytes && p.value() != 2) {
    throw Error(Errc::contract, "bytes input format requires radix 2");
  }
  if (clone == CloneId::split_msb && n.value() < 2) {
    throw Error(Errc::unsupported_width, "clone 2 needs width >= 2");
  }
}

std::uint64_t Container::stored_pits() const noexcept {
  std::uint64_t total = remainder.size();
  for (const auto& r : rounds) total += r.flag_pits();
  return total;
}

namespace {

std::optional<CodeBook> book_for(const PipelineParams& params, std::uint64_t cap) {
  if (params.clone != CloneId::codebook) return std::nullopt;
  return build_codebook(params.p, params.n, cap);
}

}  // namespace

Container encode_pipeline(const PitStream& input, const PipelineParams& params, std::uint64_t cap) {
  params.validate();
  if (input.radix() != params.p) throw Error(Errc::contract, "input radix differs from params");
  const auto book = book_for(params, cap);

  Container c{params, input.size(), {}, PitStream(params.p)};
  c.rounds.reserve(params.rounds);
  PitStream current = input;
  for (unsigned round = 0; round < params.rounds; ++round) {
    auto blocked = block_into_paits(current, params.n);
    auto bundle = encode(params.clone, blocked.paits, book ? &*book : nullptr);
    c.rounds.push_back({blocked.pad_count, std::move(bundle.flag_len), std::move(bundle.flag_msb)});
    current = std::move(bundle.remainder);
  }
  c.remainder = std::move(current);
  return c;
}

PitStream decode_pipeline(const Container& c, std::uint64_t cap) {
  c.params.validate();
  if (c.rounds.size() != c.params.rounds) {
    throw Error(Errc::corruption, "container holds " + std::to_string(c.rounds.size()) +
                                      " rounds, header says " + std::to_string(c.params.rounds));
  }
  const auto book = book_for(c.params, cap);
  const unsigned n = c.params.n.value();

  PitStream current = c.remainder;
  for (std::size_t i = c.rounds.size(); i-- > 0;) {
    const RoundRecord& r = c.rounds[i];
    if (r.pad_count >= n) {
      throw Error(Errc::corruption, "round " + std::to_string(i + 1) + " pad count >= width");
    }
    SecondaryBundle bundle(c.params.clone, c.params.p, c.params.n);
    bundle.remainder = std::move(current);
    bundle.flag_len = r.flag_len;
    if (c.params.clone == CloneId::split_msb) {
      if (!r.flag_msb) throw Error(Errc::corruption, "clone 2 round without flag_msb");
      bundle.flag_msb = r.flag_msb;
      bundle.pait_count = r.flag_msb->size();
    } else {
      if (r.flag_msb) throw Error(Errc::corruption, "flag_msb present for clone " +
                                                        std::to_string(to_int(c.params.clone)));
      bundle.pait_count = count_terminators(r.flag_len);
    }
    PitStream flat = flatten(decode(bundle, book ? &*book : nullptr));
    if (flat.size() < r.pad_count ||
        !std::all_of(flat.pits().end() - r.pad_count, flat.pits().end(), [](Pit x) { return x == 0; })) {
      throw Error(Errc::corruption, "round " + std::to_string(i + 1) + " padding is not zero");
    }
    flat.truncate_back(r.pad_count);
    current = std::move(flat);
  }
  if (current.size() != c.original_pit_count) {
    throw Error(Errc::corruption, "decoded " + std::to_string(current.size()) + " pits, expected " +
                                      std::to_string(c.original_pit_count));
  }
  return current;
}

std::vector<RoundStats> round_stats(const Container& c) {
  const std::uint64_t n = c.params.n.value();
  std::vector<RoundStats> out;
  for (const auto& r : c.rounds) {
    const std::uint64_t paits = r.flag_msb ? r.flag_msb->size() : count_terminators(r.flag_len);
    out.push_back({paits * n, r.pad_count, paits, paits * (n + 1) - r.flag_pits(), r.flag_pits()});
  }
  return out;
}

PitStream ingest(std::span<const std::uint8_t> bytes, InputFormat format, Radix p) {
  std::vector<Pit> pits;
  if (format == InputFormat::bytes) {
    if (p.value() != 2) throw Error(Errc::contract, "bytes input format requires radix 2");
    pits.reserve(bytes.size() * 8);
    for (std::uint8_t b : bytes) {
      for (int bit = 7; bit >= 0; --bit) pits.push_back(static_cast<Pit>((b >> bit) & 1u));
    }
  } else {
    pits.reserve(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      if (bytes[i] >= p.value()) {
        throw Error(Errc::invalid_digit, "digit " + std::to_string(bytes[i]) + " at offset " +
                                             std::to_string(i) + " >= radix " + std::to_string(p.value()));
      }
      pits.push_back(bytes[i]);
    }
  }
  return PitStream(p, std::move(pits));
}

std::vector<std::uint8_t> emit(const PitStream& s, InputFormat format) {
  std::vector<std::uint8_t> out;
  if (format == InputFormat::bytes) {
    if (s.radix().value() != 2 || s.size() % 8 != 0) {
      throw Error(Errc::contract, "bytes output needs a radix-2 stream with a multiple of 8 pits");
    }
    out.resize(s.size() / 8, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | (s[i] << (7 - i % 8)));
    }
  } else {
    out.reserve(s.size());
    for (Pit x : s.pits()) {
      if (x > 0xff) throw Error(Errc::range, "pit " + std::to_string(x) + " does not fit a byte");
      out.push_back(static_cast<std::uint8_t>(x));
    }
  }
  return out;
}

}  // namespace mv2
