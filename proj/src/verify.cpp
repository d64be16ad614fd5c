#include "mv2/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "mv2/pipeline.hpp"

namespace mv2 {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::paper_erratum: return "paper_erratum";
    case Verdict::model_only: return "model_only";
    case Verdict::mismatch: return "mismatch";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kChunkPaits = std::uint64_t{1} << 16;
// Multi-round measurements re-encode the whole main file m times.
constexpr std::uint64_t kGrowthPitLimit = std::uint64_t{1} << 22;
constexpr unsigned kGrowthRounds = 10;

constexpr std::array<std::string_view, 2> kKnownErrata{"clone2.flag_len", "clone2.ratio"};

// Numbers printed for p = 2, n = 8.
const std::map<std::string, std::string>& printed_values() {
  static const std::map<std::string, std::string> table{
      {"clone1.ratio", "897/1024"},
      {"clone1.flag_len", "510"},
      {"clone1.total_expansion", "9/8"},
      {"clone1.growth.m1", "9/8"},
      {"clone2.ratio", "384/512"},
      {"clone2.flag_msb", "256"},
      {"clone2.flag_len", "1020"},
      {"clone2.total_expansion", "9/8"},
      {"clone2.growth.m1", "9/8"},
      {"clone3.ratio", "777/1024"},
      {"clone3.flag_len", "750"},
      {"ranking.best_clone", "2"},
  };
  return table;
}

std::string prefix(CloneId c) { return "clone" + std::to_string(to_int(c)) + "."; }

Verdict judge(const VerificationEntry& e, bool model_only) {
  if (model_only) return Verdict::model_only;
  if (e.formula != e.measured) return Verdict::mismatch;
  if (e.paper && *e.paper != e.measured) {
    return is_known_erratum(e.quantity) ? Verdict::paper_erratum : Verdict::mismatch;
  }
  return Verdict::match;
}

Ratio measured_growth(CloneId clone, Radix p, Width n, std::uint64_t cap) {
  const PitStream input = flatten(main_file(p, n, cap));
  const Container c = encode_pipeline(input, {p, n, clone, kGrowthRounds, InputFormat::digits}, cap);
  return Ratio(c.stored_pits(), input.size());
}

}  // namespace

bool is_known_erratum(std::string_view quantity) {
  return std::find(kKnownErrata.begin(), kKnownErrata.end(), quantity) != kKnownErrata.end();
}

const VerificationEntry* VerificationReport::find(std::string_view quantity) const {
  for (const auto& e : entries) {
    if (e.quantity == quantity) return &e;
  }
  return nullptr;
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const auto& e) { return e.verdict == v; }));
}

MainFileMeasurement measure_main_file(CloneId clone, Radix p, Width n, std::uint64_t cap) {
  const std::uint64_t total = alphabet_size(p, n, cap);
  const auto book = clone == CloneId::codebook ? std::optional(build_codebook(p, n, cap)) : std::nullopt;
  MainFileMeasurement m;
  // encoding is context-free, so chunk lengths add up
  for (std::uint64_t first = 0; first < total; first += kChunkPaits) {
    const auto chunk = main_file_range(p, n, first, std::min(kChunkPaits, total - first));
    const auto bundle = encode(clone, chunk, book ? &*book : nullptr);
    m.paits += bundle.pait_count;
    m.remainder += bundle.remainder.size();
    m.flag_len += bundle.flag_len.size();
    m.flag_msb += bundle.flag_msb ? bundle.flag_msb->size() : 0;
  }
  return m;
}

VerificationReport run_verification(Radix p, Width n, std::vector<CloneId> clones, std::uint64_t cap) {
  if (clones.empty()) {
    clones = {CloneId::strip_zeros, CloneId::codebook};
    if (n.value() >= 2) clones.insert(clones.begin() + 1, CloneId::split_msb);
  }
  std::sort(clones.begin(), clones.end());
  clones.erase(std::unique(clones.begin(), clones.end()), clones.end());

  VerificationReport report;
  report.p = p.value();
  report.n = n.value();
  report.clones = clones;

  const bool printed = p.value() == 2 && n.value() == 8;
  const Ratio input_pits = Ratio(BigInt(n.value()) * big_pow(p.value(), n.value()));
  const Ratio kf = expansion_factor(n);

  auto add = [&](std::string quantity, Ratio formula, Ratio measured, std::optional<Ratio> paper,
                 bool model_only = false) {
    std::string text = paper ? to_fraction_string(*paper) : std::string();
    if (!paper && printed) {
      if (auto it = printed_values().find(quantity); it != printed_values().end()) {
        text = it->second;
        paper = parse_ratio(text);
      }
    }
    VerificationEntry e{std::move(quantity), std::move(paper), std::move(text), std::move(formula),
                        std::move(measured)};
    e.verdict = judge(e, model_only);
    report.entries.push_back(std::move(e));
  };

  for (CloneId clone : clones) {
    const auto m = measure_main_file(clone, p, n, cap);
    const std::string q = prefix(clone);
    const Ratio ratio = Ratio(m.remainder) / input_pits;
    Ratio k;
    switch (clone) {
      case CloneId::strip_zeros:
        k = ratio_clone1(p, n);
        add(q + "flag_len", Ratio(flag_len_clone1(p, n)), Ratio(m.flag_len), std::nullopt);
        break;
      case CloneId::split_msb: {
        k = ratio_clone2(p, n);
        const auto lf = flag_lens_clone2(p, n);
        add(q + "flag_msb", Ratio(lf.msb), Ratio(m.flag_msb), std::nullopt);
        add(q + "flag_len", Ratio(lf.corrected_len), Ratio(m.flag_len), Ratio(lf.paper_len));
        break;
      }
      case CloneId::codebook: {
        k = ratio_clone3(p, n);
        const auto lf = flag_len_clone3(p, n);
        add(q + "flag_len", Ratio(lf.length), Ratio(m.flag_len), std::nullopt, !lf.describes_unary_flag());
        break;
      }
    }
    add(q + "ratio", k, ratio, std::nullopt);
    const Ratio expansion = Ratio(m.remainder + m.flag_len + m.flag_msb) / input_pits;
    add(q + "total_expansion", kf, expansion, std::nullopt);
    if (k != 1) {
      add(q + "growth.m1", growth_after_rounds(k, kf, 1), expansion, std::nullopt);
      if (input_pits <= kGrowthPitLimit) {
        add(q + "growth.m" + std::to_string(kGrowthRounds), growth_after_rounds(k, kf, kGrowthRounds),
            measured_growth(clone, p, n, cap), std::nullopt, true);
      }
    }
    report.ranking.push_back({clone, ratio});
  }

  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [](const auto& a, const auto& b) { return a.measured_ratio < b.measured_ratio; });

  if (clones.size() == 3) {
    auto best_formula = CloneId::strip_zeros;
    Ratio best = ratio_clone1(p, n);
    for (auto [clone, k] : {std::pair{CloneId::split_msb, ratio_clone2(p, n)},
                            std::pair{CloneId::codebook, ratio_clone3(p, n)}}) {
      if (k < best) {
        best = k;
        best_formula = clone;
      }
    }
    add("ranking.best_clone", Ratio(to_int(best_formula)), Ratio(to_int(report.ranking.front().clone)),
        std::nullopt);
  }

  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& a, const auto& b) { return a.quantity < b.quantity; });
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"quantity", e.quantity},
                       {"paper", e.paper ? nlohmann::json(e.paper_text) : nlohmann::json()},
                       {"formula", to_fraction_string(e.formula)},
                       {"measured", to_fraction_string(e.measured)},
                       {"verdict", std::string(to_string(e.verdict))}});
  }
  nlohmann::json ranking = nlohmann::json::array();
  for (const auto& r : report.ranking) {
    ranking.push_back({{"clone", to_int(r.clone)}, {"measured_ratio", to_fraction_string(r.measured_ratio)}});
  }
  return {{"radix", report.p}, {"width", report.n}, {"entries", entries}, {"ranking", ranking}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "main file p=" << report.p << " n=" << report.n << "\n";
  std::size_t w = 8;
  for (const auto& e : report.entries) w = std::max(w, e.quantity.size());
  for (const auto& e : report.entries) {
    out << e.quantity << std::string(w + 2 - e.quantity.size(), ' ')
        << "paper=" << (e.paper ? e.paper_text : "-")
        << " formula=" << to_fraction_string(e.formula) << " measured=" << to_fraction_string(e.measured)
        << " (" << to_decimal_string(e.measured, 6) << ") " << to_string(e.verdict) << "\n";
  }
  out << "ranking:";
  for (const auto& r : report.ranking) {
    out << " clone" << to_int(r.clone) << "=" << to_fraction_string(r.measured_ratio);
  }
  out << "\n";
  return out.str();
}

}  // namespace mv2
