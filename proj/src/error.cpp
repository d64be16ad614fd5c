#include "mv2/error.hpp"

namespace mv2 {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::range: return "range";
    case Errc::capacity: return "capacity";
    case Errc::contract: return "contract";
    case Errc::unsupported_width: return "unsupported-width";
    case Errc::underrun: return "underrun";
    case Errc::corruption: return "corruption";
    case Errc::truncation: return "truncation";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::bad_magic: return "bad-magic";
    case Errc::unsupported_version: return "unsupported-version";
    case Errc::truncated: return "truncated";
    case Errc::checksum_mismatch: return "checksum-mismatch";
    case Errc::invalid_digit: return "invalid-digit";
    case Errc::degenerate_ratio: return "degenerate-ratio";
  }
  return "unknown";
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::range:
    case Errc::capacity:
    case Errc::contract:
    case Errc::unsupported_width:
    case Errc::degenerate_ratio:
      return true;
    default:
      return false;
  }
}

}  // namespace mv2
