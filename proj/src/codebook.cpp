#include "mv2/codebook.hpp"

#include <algorithm>
#include <string>

namespace mv2 {

CodeBook build_codebook(Radix p, Width n, std::uint64_t cap) {
  CodeBook book(p, n);
  book.size_ = alphabet_size(p, n, cap);
  book.histogram_.push_back(0);
  book.offsets_.push_back(0);

  std::uint64_t left = book.size_;
  std::uint64_t next = 0;
  std::uint64_t level = 1;
  for (unsigned length = 1; left > 0; ++length) {
    level *= p.value();  // p^length <= p^n fits since p^n does
    const std::uint64_t used = std::min(level, left);
    book.histogram_.push_back(used);
    book.offsets_.push_back(next);
    next += used;
    left -= used;
  }
  return book;
}

Code CodeBook::forward(std::uint64_t value) const {
  if (value >= size_) throw Error(Errc::range, "value " + std::to_string(value) + " >= p^n");
  // offsets_ is ascending; find the last level starting at or before value
  auto it = std::upper_bound(offsets_.begin() + 1, offsets_.end(), value);
  const auto length = static_cast<unsigned>(std::distance(offsets_.begin(), it) - 1);
  return {length, value - offsets_[length]};
}

std::optional<std::uint64_t> CodeBook::inverse(Code code) const noexcept {
  if (code.length == 0 || code.length >= histogram_.size()) return std::nullopt;
  if (code.value >= histogram_[code.length]) return std::nullopt;
  return offsets_[code.length] + code.value;
}

std::uint64_t CodeBook::total_code_pits() const noexcept {
  std::uint64_t total = 0;
  for (std::size_t length = 1; length < histogram_.size(); ++length) {
    total += length * histogram_[length];
  }
  return total;
}

}  // namespace mv2
