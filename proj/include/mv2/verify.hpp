#pragma once

// Main-file verification: encode the main file with each clone, measure the
// streams, evaluate the closed forms and compare against the numbers printed
// for p = 2, n = 8.

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mv2/analytics.hpp"
#include "mv2/clone.hpp"

namespace mv2 {

enum class Verdict { match, paper_erratum, model_only, mismatch };

std::string_view to_string(Verdict v);

struct VerificationEntry {
  std::string quantity;
  std::optional<Ratio> paper;
  std::string paper_text;  // as printed, e.g. "384/512"; empty when paper is absent
  Ratio formula;
  Ratio measured;
  Verdict verdict = Verdict::match;
};

struct RankedClone {
  CloneId clone;
  Ratio measured_ratio;
};

struct VerificationReport {
  unsigned p = 0;
  unsigned n = 0;
  std::vector<CloneId> clones;
  std::vector<VerificationEntry> entries;  // sorted by quantity
  std::vector<RankedClone> ranking;        // ascending measured ratio

  const VerificationEntry* find(std::string_view quantity) const;
  std::size_t count(Verdict v) const;
  bool has_regression() const { return count(Verdict::mismatch) != 0; }
};

/// Clone 2 is skipped silently for n < 2 when `clones` is empty (all clones);
/// requesting it explicitly throws unsupported_width.
VerificationReport run_verification(Radix p, Width n, std::vector<CloneId> clones = {},
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Quantities whose printed value is known to disagree with the measurement.
bool is_known_erratum(std::string_view quantity);

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Main-file stream lengths for one clone, measured chunk by chunk.
struct MainFileMeasurement {
  std::uint64_t paits = 0;
  std::uint64_t remainder = 0;
  std::uint64_t flag_len = 0;
  std::uint64_t flag_msb = 0;
};
MainFileMeasurement measure_main_file(CloneId clone, Radix p, Width n,
                                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mv2
