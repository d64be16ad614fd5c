#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mv2 {

enum class Errc {
  range,
  capacity,
  contract,
  unsupported_width,
  underrun,
  corruption,
  truncation,
  length_mismatch,
  bad_magic,
  unsupported_version,
  truncated,
  checksum_mismatch,
  invalid_digit,
  degenerate_ratio,
};

std::string_view to_string(Errc code);

/// True for errors caused by bad parameters rather than bad data.
bool is_usage_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mv2
