#include <boost/crc.hpp>

#include <array>
#include <string>

#include "mv2/pipeline.hpp"

namespace mv2 {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'M', 'V', '2', 'C'};

std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

class Writer {
 public:
  template <typename T>
  void put(T value, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) {
      out_.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
    }
  }
  void put_bytes(std::span<const std::uint8_t> bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
  std::vector<std::uint8_t>& bytes() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : in_(bytes) {}

  std::uint64_t get(std::size_t width, const char* field) {
    if (in_.size() - pos_ < width) {
      throw Error(Errc::truncated, std::string("truncated container: missing ") + field);
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }
  std::size_t position() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void put_stream(Writer& w, const PitStream& s) { w.put_bytes(pack_pits(s)); }

}  // namespace

std::vector<std::uint8_t> serialize_container(const Container& c) {
  c.params.validate();
  Writer w;
  w.put_bytes(kMagic);
  w.put(kContainerVersion, 1);
  w.put(c.params.p.value(), 2);
  w.put(c.params.n.value(), 2);
  w.put(to_int(c.params.clone), 1);
  w.put(c.params.rounds, 1);
  w.put(static_cast<unsigned>(c.params.format), 1);
  w.put(c.original_pit_count, 8);
  for (const auto& r : c.rounds) {
    w.put(r.pad_count, 2);
    w.put(r.flag_len.size(), 8);
    w.put(r.flag_msb ? r.flag_msb->size() : 0, 8);
  }
  w.put(c.remainder.size(), 8);
  put_stream(w, c.remainder);
  for (const auto& r : c.rounds) {
    if (r.flag_msb) put_stream(w, *r.flag_msb);
    put_stream(w, r.flag_len);
  }
  w.put(crc32(w.bytes()), 4);
  return std::move(w.bytes());
}

Container parse_container(std::span<const std::uint8_t> bytes) {
  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    if (i == bytes.size()) throw Error(Errc::truncated, "truncated container: missing magic");
    if (bytes[i] != kMagic[i]) throw Error(Errc::bad_magic, "bad magic: not an MV2C container");
  }
  Reader r(bytes.subspan(kMagic.size()));
  const auto version = r.get(1, "version");
  if (version != kContainerVersion) {
    throw Error(Errc::unsupported_version, "unsupported container version " + std::to_string(version));
  }
  const auto p_raw = r.get(2, "radix");
  const auto n_raw = r.get(2, "width");
  const auto clone_raw = r.get(1, "clone id");
  const auto rounds = r.get(1, "round count");
  const auto format_raw = r.get(1, "input format");
  const auto original = r.get(8, "original pit count");

  struct Counts {
    std::uint64_t pad, flag_len, flag_msb;
  };
  std::vector<Counts> counts;
  for (std::uint64_t i = 0; i < rounds; ++i) {
    Counts k;
    k.pad = r.get(2, "round record");
    k.flag_len = r.get(8, "round record");
    k.flag_msb = r.get(8, "round record");
    counts.push_back(k);
  }
  const auto remainder_count = r.get(8, "remainder count");

  auto bad = [](const std::string& what) { return Error(Errc::corruption, "corrupt header: " + what); };
  if (p_raw < Radix::kMin) throw bad("radix " + std::to_string(p_raw));
  if (n_raw < Width::kMin || n_raw > Width::kMax) throw bad("width " + std::to_string(n_raw));
  if (clone_raw < 1 || clone_raw > 3) throw bad("clone id " + std::to_string(clone_raw));
  if (format_raw > 1) throw bad("input format " + std::to_string(format_raw));
  const Radix p(static_cast<unsigned>(p_raw));

  // Expected size: header + all packed streams + CRC.
  const std::size_t header_end = kMagic.size() + r.position();
  std::uint64_t expected = header_end + 4;
  auto add_stream = [&](std::uint64_t count) {
    auto size = packed_size(count, p);
    if (!size || *size > bytes.size()) throw Error(Errc::truncated, "truncated container: stream section");
    expected += *size;
  };
  add_stream(remainder_count);
  for (const auto& k : counts) {
    add_stream(k.flag_msb);
    add_stream(k.flag_len);
  }
  if (bytes.size() < expected) {
    throw Error(Errc::truncated, "truncated container: " + std::to_string(bytes.size()) + " of " +
                                     std::to_string(expected) + " bytes");
  }
  if (bytes.size() > expected) {
    throw Error(Errc::corruption, "container has " + std::to_string(bytes.size() - expected) +
                                      " trailing bytes");
  }
  const auto body = bytes.first(bytes.size() - 4);
  const auto tail = bytes.last(4);
  const std::uint32_t stored = (std::uint32_t{tail[0]} << 24) | (std::uint32_t{tail[1]} << 16) |
                               (std::uint32_t{tail[2]} << 8) | std::uint32_t{tail[3]};
  if (crc32(body) != stored) throw Error(Errc::checksum_mismatch, "checksum mismatch");

  const auto clone = static_cast<CloneId>(clone_raw);
  PipelineParams params{p, Width(static_cast<unsigned>(n_raw)), clone, static_cast<unsigned>(rounds),
                        static_cast<InputFormat>(format_raw)};
  try {
    params.validate();
  } catch (const Error& e) {
    throw bad(e.what());
  }

  std::size_t pos = header_end;
  auto take_stream = [&](std::uint64_t count) {
    const auto size = static_cast<std::size_t>(*packed_size(count, p));
    auto s = unpack_pits(bytes.subspan(pos, size), count, p);
    pos += size;
    return s;
  };
  Container c{params, original, {}, take_stream(remainder_count)};
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& k = counts[i];
    if (k.pad >= n_raw) throw bad("round " + std::to_string(i + 1) + " pad count");
    if (clone != CloneId::split_msb && k.flag_msb != 0) {
      throw bad("flag_msb count for clone " + std::to_string(clone_raw));
    }
    RoundRecord rec{static_cast<unsigned>(k.pad), PitStream(p), std::nullopt};
    if (clone == CloneId::split_msb) rec.flag_msb = take_stream(k.flag_msb);
    rec.flag_len = take_stream(k.flag_len);
    c.rounds.push_back(std::move(rec));
  }
  return c;
}

}  // namespace mv2
