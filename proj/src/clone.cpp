#include "mv2/clone.hpp"

#include <algorithm>
#include <string>

namespace mv2 {

CloneId clone_from_int(unsigned id) {
  if (id < 1 || id > 3) throw Error(Errc::range, "clone id " + std::to_string(id) + " not in {1,2,3}");
  return static_cast<CloneId>(id);
}

namespace {

// Appends `zeros` markers and one terminator.
void put_unary(PitStream& flag, unsigned zeros) {
  flag.append_zeros(zeros);
  flag.push_back(1);
}

class StreamCursor {
 public:
  StreamCursor(const PitStream& s, const char* name) : s_(s), name_(name) {}

  bool exhausted() const noexcept { return pos_ == s_.size(); }
  std::size_t position() const noexcept { return pos_; }

  // Reads one unary record; returns the number of zero markers.
  unsigned read_unary(unsigned max_zeros) {
    unsigned zeros = 0;
    for (;;) {
      if (pos_ == s_.size()) {
        throw Error(Errc::truncation, std::string(name_) + " exhausted inside a length record");
      }
      const Pit pit = s_[pos_++];
      if (pit == 1) return zeros;
      if (pit != 0) {
        throw Error(Errc::corruption, std::string(name_) + " holds pit " + std::to_string(pit) +
                                          " at offset " + std::to_string(pos_ - 1));
      }
      if (++zeros > max_zeros) {
        throw Error(Errc::corruption, std::string(name_) + " record longer than the pait width");
      }
    }
  }

  std::span<const Pit> take(std::size_t count) {
    if (s_.size() - pos_ < count) {
      throw Error(Errc::length_mismatch, std::string(name_) + " underrun at offset " +
                                             std::to_string(pos_));
    }
    auto out = s_.pits().subspan(pos_, count);
    pos_ += count;
    return out;
  }

  void expect_consumed() const {
    if (!exhausted()) {
      throw Error(Errc::length_mismatch, std::string(name_) + " has " +
                                             std::to_string(s_.size() - pos_) + " unread pits");
    }
  }

 private:
  const PitStream& s_;
  const char* name_;
  std::size_t pos_ = 0;
};

void expect_clone(const SecondaryBundle& bundle, CloneId clone) {
  if (bundle.clone != clone) {
    throw Error(Errc::contract, "bundle holds clone " + std::to_string(to_int(bundle.clone)) +
                                    ", expected " + std::to_string(to_int(clone)));
  }
  if (bundle.remainder.radix() != bundle.p || bundle.flag_len.radix() != bundle.p ||
      (bundle.flag_msb && bundle.flag_msb->radix() != bundle.p)) {
    throw Error(Errc::contract, "bundle stream radix differs from bundle radix");
  }
  if (bundle.flag_msb.has_value() != (clone == CloneId::split_msb)) {
    throw Error(Errc::contract, "flag_msb present iff clone 2");
  }
}

void check_book(Radix p, Width n, const CodeBook& book) {
  if (book.radix() != p || book.width() != n) {
    throw Error(Errc::contract, "codebook (p, n) differs from input");
  }
}

// Left-pads a canonical code to the scratch width. A significant-digit
// code longer than one pit never starts with zero.
void push_stripped(PaitBlock& out, std::span<const Pit> code, std::vector<Pit>& scratch) {
  if (code.size() > 1 && code.front() == 0) {
    throw Error(Errc::corruption, "remainder code of length " + std::to_string(code.size()) +
                                      " has a leading zero");
  }
  if (code.size() > scratch.size()) throw Error(Errc::corruption, "remainder code wider than a pait");
  const auto zeros = scratch.size() - code.size();
  std::fill_n(scratch.begin(), zeros, Pit{0});
  std::copy(code.begin(), code.end(), scratch.begin() + static_cast<std::ptrdiff_t>(zeros));
  out.push_digits(scratch);
}

}  // namespace

std::uint64_t count_terminators(const PitStream& flag_len) {
  return static_cast<std::uint64_t>(std::count(flag_len.pits().begin(), flag_len.pits().end(), Pit{1}));
}

SecondaryBundle encode_clone1(const PaitBlock& input) {
  const unsigned n = input.width().value();
  SecondaryBundle out(CloneId::strip_zeros, input.radix(), input.width());
  out.pait_count = input.size();
  out.flag_len.reserve(input.size() * 2);
  out.remainder.reserve(input.flat().size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto x = input[i];
    const unsigned length = significant_length(x);
    out.remainder.append(x.last(length));
    put_unary(out.flag_len, n - length);
  }
  return out;
}

SecondaryBundle encode_clone1(std::span<const Pait> input) { return encode_clone1(make_block(input)); }

PaitBlock decode_clone1(const SecondaryBundle& bundle) {
  expect_clone(bundle, CloneId::strip_zeros);
  const unsigned n = bundle.n.value();
  PaitBlock out(bundle.p, bundle.n);
  out.reserve(bundle.pait_count);
  StreamCursor flag(bundle.flag_len, "flag_len");
  StreamCursor rem(bundle.remainder, "remainder");
  std::vector<Pit> scratch(n);
  for (std::uint64_t i = 0; i < bundle.pait_count; ++i) {
    const unsigned length = n - flag.read_unary(n - 1);
    push_stripped(out, rem.take(length), scratch);
  }
  flag.expect_consumed();
  rem.expect_consumed();
  return out;
}

SecondaryBundle encode_clone2(const PaitBlock& input) {
  const unsigned n = input.width().value();
  if (n < 2) throw Error(Errc::unsupported_width, "clone 2 needs width >= 2");
  SecondaryBundle out(CloneId::split_msb, input.radix(), input.width());
  out.pait_count = input.size();
  out.flag_msb->reserve(input.size());
  out.flag_len.reserve(input.size() * 2);
  out.remainder.reserve(input.flat().size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto x = input[i];
    out.flag_msb->push_back(x.front());
    const auto low = x.subspan(1);
    const unsigned length = significant_length(low);
    out.remainder.append(low.last(length));
    put_unary(out.flag_len, n - 1 - length);
  }
  return out;
}

SecondaryBundle encode_clone2(std::span<const Pait> input) { return encode_clone2(make_block(input)); }

PaitBlock decode_clone2(const SecondaryBundle& bundle) {
  expect_clone(bundle, CloneId::split_msb);
  const unsigned n = bundle.n.value();
  if (n < 2) throw Error(Errc::unsupported_width, "clone 2 needs width >= 2");
  PaitBlock out(bundle.p, bundle.n);
  out.reserve(bundle.pait_count);
  StreamCursor msb(*bundle.flag_msb, "flag_msb");
  StreamCursor flag(bundle.flag_len, "flag_len");
  StreamCursor rem(bundle.remainder, "remainder");
  std::vector<Pit> scratch(n);
  for (std::uint64_t i = 0; i < bundle.pait_count; ++i) {
    if (msb.exhausted()) throw Error(Errc::underrun, "flag_msb exhausted after " + std::to_string(i) + " paits");
    const Pit top = msb.take(1).front();
    const unsigned length = n - 1 - flag.read_unary(n - 2);
    const auto code = rem.take(length);
    if (code.size() > 1 && code.front() == 0) {
      throw Error(Errc::corruption, "remainder code has a leading zero");
    }
    std::fill(scratch.begin(), scratch.end(), Pit{0});
    scratch[0] = top;
    std::copy(code.begin(), code.end(), scratch.end() - static_cast<std::ptrdiff_t>(length));
    out.push_digits(scratch);
  }
  msb.expect_consumed();
  flag.expect_consumed();
  rem.expect_consumed();
  return out;
}

SecondaryBundle encode_clone3(const PaitBlock& input, const CodeBook& book) {
  check_book(input.radix(), input.width(), book);
  const unsigned n = input.width().value();
  const unsigned p = input.radix().value();
  SecondaryBundle out(CloneId::codebook, input.radix(), input.width());
  out.pait_count = input.size();
  out.flag_len.reserve(input.size() * 2);
  out.remainder.reserve(input.flat().size());
  std::vector<Pit> digits(n);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Code code = book.forward(value_of_digits(input[i], input.radix()));
    std::uint64_t v = code.value;
    for (unsigned j = code.length; j-- > 0;) {
      digits[j] = static_cast<Pit>(v % p);
      v /= p;
    }
    out.remainder.append(std::span<const Pit>(digits).first(code.length));
    put_unary(out.flag_len, n - code.length);
  }
  return out;
}

SecondaryBundle encode_clone3(std::span<const Pait> input, const CodeBook& book) {
  return encode_clone3(make_block(input), book);
}

PaitBlock decode_clone3(const SecondaryBundle& bundle, const CodeBook& book) {
  expect_clone(bundle, CloneId::codebook);
  check_book(bundle.p, bundle.n, book);
  const unsigned n = bundle.n.value();
  PaitBlock out(bundle.p, bundle.n);
  out.reserve(bundle.pait_count);
  StreamCursor flag(bundle.flag_len, "flag_len");
  StreamCursor rem(bundle.remainder, "remainder");
  for (std::uint64_t i = 0; i < bundle.pait_count; ++i) {
    const unsigned length = n - flag.read_unary(n - 1);
    const auto code = rem.take(length);
    const auto value = book.inverse({length, value_of_digits(code, bundle.p)});
    if (!value) {
      throw Error(Errc::corruption, "code of length " + std::to_string(length) + " not in codebook");
    }
    out.push_value(*value);
  }
  flag.expect_consumed();
  rem.expect_consumed();
  return out;
}

SecondaryBundle encode(CloneId clone, const PaitBlock& input, const CodeBook* book) {
  switch (clone) {
    case CloneId::strip_zeros: return encode_clone1(input);
    case CloneId::split_msb: return encode_clone2(input);
    case CloneId::codebook:
      if (!book) throw Error(Errc::contract, "clone 3 needs a codebook");
      return encode_clone3(input, *book);
  }
  throw Error(Errc::contract, "unknown clone");
}

PaitBlock decode(const SecondaryBundle& bundle, const CodeBook* book) {
  switch (bundle.clone) {
    case CloneId::strip_zeros: return decode_clone1(bundle);
    case CloneId::split_msb: return decode_clone2(bundle);
    case CloneId::codebook:
      if (!book) throw Error(Errc::contract, "clone 3 needs a codebook");
      return decode_clone3(bundle, *book);
  }
  throw Error(Errc::contract, "unknown clone");
}

}  // namespace mv2
