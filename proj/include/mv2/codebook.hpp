#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mv2/pit.hpp"

namespace mv2 {

struct Code {
  unsigned length;
  std::uint64_t value;

  friend bool operator==(const Code&, const Code&) = default;
};

/// Canonical shortest-first bijection from A_n onto codes of length <= n.
///
/// Every length k is filled with all p^k codes while elements remain; the
/// last level used is partially filled from code value 0 upward. Pait value
/// i maps to the i-th code in (length, value) order, so both directions are
/// a lookup in the per-length offset table.
class CodeBook {
 public:
  Radix radix() const noexcept { return p_; }
  Width width() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  unsigned max_length() const noexcept { return static_cast<unsigned>(histogram_.size()) - 1; }

  /// Number of codes of length L (0 for L outside [1, max_length]).
  std::uint64_t count(unsigned length) const noexcept {
    return length < histogram_.size() ? histogram_[length] : 0;
  }
  /// Index L holds count(L); index 0 is unused and zero.
  const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }

  /// Throws range for value >= p^n.
  Code forward(std::uint64_t value) const;
  std::optional<std::uint64_t> inverse(Code code) const noexcept;

  /// Σ L * count(L): the clone-3 remainder length of the main file.
  std::uint64_t total_code_pits() const noexcept;

 private:
  friend CodeBook build_codebook(Radix p, Width n, std::uint64_t cap);
  CodeBook(Radix p, Width n) : p_(p), n_(n) {}

  Radix p_;
  Width n_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> histogram_;
  std::vector<std::uint64_t> offsets_;
};

CodeBook build_codebook(Radix p, Width n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mv2
