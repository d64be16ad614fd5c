// mv2: encode/decode MV2 containers, dump codebooks, evaluate the closed
// forms and verify them against the main file.
//
// Exit status: 0 ok, 1 usage error, 2 data/corruption error, 3 verification
// regression.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "mv2/analytics.hpp"
#include "mv2/codebook.hpp"
#include "mv2/pipeline.hpp"
#include "mv2/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitRegression = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

std::string fraction_and_decimal(const mv2::Ratio& r, unsigned digits) {
  return mv2::to_fraction_string(r) + " (" + mv2::to_decimal_string(r, digits) + ")";
}

nlohmann::json ratio_json(const mv2::Ratio& r, unsigned digits) {
  return {{"exact", mv2::to_fraction_string(r)}, {"decimal", mv2::to_decimal_string(r, digits)}};
}

struct EncodeArgs {
  unsigned clone = 1;
  unsigned radix = 2;
  unsigned width = 8;
  unsigned rounds = 1;
  std::string format = "bytes";
  std::string input, output;
  bool json = false;
};

int run_encode(const EncodeArgs& a) {
  const mv2::Radix p(a.radix);
  const mv2::PipelineParams params{p, mv2::Width(a.width), mv2::clone_from_int(a.clone), a.rounds,
                                   a.format == "bytes" ? mv2::InputFormat::bytes : mv2::InputFormat::digits};
  params.validate();
  const auto input = mv2::ingest(read_file(a.input), params.format, p);
  const auto container = mv2::encode_pipeline(input, params);
  write_file(a.output, mv2::serialize_container(container));

  const auto stats = mv2::round_stats(container);
  const mv2::Ratio ratio = input.empty() ? mv2::Ratio(0) : mv2::Ratio(container.remainder.size(), input.size());
  if (a.json) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& s : stats) {
      rounds.push_back({{"input_pits", s.input_pits}, {"pad", s.pad_count}, {"paits", s.pait_count},
                        {"remainder_pits", s.remainder_pits}, {"flag_pits", s.flag_pits}});
    }
    std::cout << nlohmann::json{{"input_pits", input.size()},
                                {"remainder_pits", container.remainder.size()},
                                {"rounds", rounds},
                                {"total_pits", container.stored_pits()},
                                {"ratio", mv2::to_fraction_string(ratio)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "input pits: " << input.size() << "\n";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    std::cout << "round " << i + 1 << ": input " << stats[i].input_pits << " (pad " << stats[i].pad_count
              << "), remainder " << stats[i].remainder_pits << ", flag " << stats[i].flag_pits << "\n";
  }
  std::cout << "remainder pits: " << container.remainder.size() << "\n"
            << "total pits: " << container.stored_pits() << "\n"
            << "remainder ratio: " << fraction_and_decimal(ratio, 6) << "\n";
  return 0;
}

int run_decode(const std::string& input, const std::string& output) {
  const auto container = mv2::parse_container(read_file(input));
  const auto pits = mv2::decode_pipeline(container);
  write_file(output, mv2::emit(pits, container.params.format));
  return 0;
}

int run_verify(unsigned radix, unsigned width, const std::vector<unsigned>& clone_ids, bool json) {
  std::vector<mv2::CloneId> clones;
  for (unsigned id : clone_ids) clones.push_back(mv2::clone_from_int(id));
  const auto report = mv2::run_verification(mv2::Radix(radix), mv2::Width(width), clones);
  if (json) {
    std::cout << mv2::to_json(report).dump(2) << "\n";
  } else {
    std::cout << mv2::to_text(report);
  }
  if (report.has_regression()) {
    std::cerr << "verification regression: " << report.count(mv2::Verdict::mismatch) << " mismatching entries\n";
    return kExitRegression;
  }
  return 0;
}

int run_analytics(unsigned radix, unsigned width, unsigned rounds, unsigned digits, bool json) {
  const mv2::Radix p(radix);
  const mv2::Width n(width);
  if (rounds < 1) throw mv2::Error(mv2::Errc::range, "rounds must be >= 1");
  const auto f = mv2::formula_set(p, n);

  struct Growth {
    unsigned clone;
    std::optional<std::vector<mv2::Ratio>> values;
  };
  std::vector<std::pair<unsigned, mv2::Ratio>> ks{{1, f.k1}};
  if (f.k2) ks.emplace_back(2, *f.k2);
  ks.emplace_back(3, f.k3);
  std::vector<Growth> growth;
  for (const auto& [clone, k] : ks) {
    Growth g{clone, std::nullopt};
    if (k != 1) {
      g.values.emplace();
      for (unsigned m = 1; m <= rounds; ++m) g.values->push_back(mv2::growth_after_rounds(k, f.kf, m));
    }
    growth.push_back(std::move(g));
  }

  if (json) {
    nlohmann::json out{{"radix", f.p},
                       {"width", f.n},
                       {"k1", ratio_json(f.k1, digits)},
                       {"k2", f.k2 ? ratio_json(*f.k2, digits) : nlohmann::json()},
                       {"k3", ratio_json(f.k3, digits)},
                       {"lf_clone1", f.lf1_clone1.str()},
                       {"lf_clone3", f.lf_clone3.length.str()},
                       {"lf_clone3_model_only", !f.lf_clone3.describes_unary_flag()},
                       {"kf", ratio_json(f.kf, digits)},
                       {"delta_L", f.delta_L.str()}};
    if (f.lf_clone2) {
      out["lf_clone2"] = {{"msb", f.lf_clone2->msb.str()},
                          {"paper_len", f.lf_clone2->paper_len.str()},
                          {"corrected_len", f.lf_clone2->corrected_len.str()}};
    } else {
      out["lf_clone2"] = nullptr;
    }
    nlohmann::json g = nlohmann::json::object();
    for (const auto& gr : growth) {
      const std::string key = "clone" + std::to_string(gr.clone);
      if (!gr.values) {
        g[key] = nullptr;
        continue;
      }
      g[key] = nlohmann::json::array();
      for (const auto& v : *gr.values) g[key].push_back(ratio_json(v, digits));
    }
    out["growth"] = g;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "p=" << f.p << " n=" << f.n << "\n"
            << "k1 = " << fraction_and_decimal(f.k1, digits) << "\n"
            << "k2 = " << (f.k2 ? fraction_and_decimal(*f.k2, digits) : "n/a (width < 2)") << "\n"
            << "k3 = " << fraction_and_decimal(f.k3, digits) << "\n"
            << "clone1 flag = " << f.lf1_clone1 << "\n";
  if (f.lf_clone2) {
    std::cout << "clone2 flag_msb = " << f.lf_clone2->msb << ", flag_len = " << f.lf_clone2->corrected_len
              << " (printed formula " << f.lf_clone2->paper_len << ")\n";
  }
  std::cout << "clone3 flag = " << f.lf_clone3.length;
  if (f.lf_clone3.m) std::cout << " (reference model, m=" << *f.lf_clone3.m << ")";
  std::cout << "\n"
            << "kf = " << fraction_and_decimal(f.kf, digits) << "\n"
            << "delta_L = " << f.delta_L << "\n";
  for (const auto& gr : growth) {
    if (!gr.values) {
      std::cout << "growth clone" << gr.clone << ": degenerate-ratio (k = 1, model undefined)\n";
      continue;
    }
    for (std::size_t m = 0; m < gr.values->size(); ++m) {
      std::cout << "growth clone" << gr.clone << " m=" << m + 1 << " = "
                << mv2::to_decimal_string((*gr.values)[m], digits) << "  [" << mv2::to_fraction_string((*gr.values)[m])
                << "]\n";
    }
  }
  return 0;
}

std::string code_digits(const mv2::Code& code, unsigned p) {
  std::string s(code.length, '0');
  std::uint64_t v = code.value;
  for (unsigned i = code.length; i-- > 0;) {
    const unsigned d = static_cast<unsigned>(v % p);
    s[i] = static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
    v /= p;
  }
  return p <= 36 ? s : std::to_string(code.value);
}

int run_codebook(unsigned radix, unsigned width, std::uint64_t limit, bool json) {
  const auto book = mv2::build_codebook(mv2::Radix(radix), mv2::Width(width));
  const auto rows = std::min<std::uint64_t>(limit, book.size());
  if (json) {
    nlohmann::json hist = nlohmann::json::object();
    for (unsigned l = 1; l <= book.max_length(); ++l) hist[std::to_string(l)] = book.count(l);
    nlohmann::json table = nlohmann::json::array();
    for (std::uint64_t v = 0; v < rows; ++v) {
      const auto c = book.forward(v);
      table.push_back({{"element", v}, {"length", c.length}, {"code", c.value}});
    }
    std::cout << nlohmann::json{{"radix", radix}, {"width", width}, {"histogram", hist}, {"rows", table}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << "histogram";
  for (unsigned l = 1; l <= book.max_length(); ++l) std::cout << " " << l << ":" << book.count(l);
  std::cout << "\n";
  for (std::uint64_t v = 0; v < rows; ++v) {
    const auto c = book.forward(v);
    std::cout << v << " -> L=" << c.length << " " << code_digits(c, radix) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MV2 multi-radix recoding codec"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode a file into an MV2 container");
  encode->add_option("--clone", enc.clone, "Clone 1, 2 or 3")->check(CLI::Range(1, 3));
  encode->add_option("--radix", enc.radix, "Pit radix p");
  encode->add_option("--width", enc.width, "Pits per pait n");
  encode->add_option("--rounds", enc.rounds, "Recoding rounds m");
  encode->add_option("--input-format", enc.format, "bytes or digits")
      ->check(CLI::IsMember({"bytes", "digits"}));
  encode->add_flag("--json", enc.json, "Print the summary as JSON");
  encode->add_option("input", enc.input)->required();
  encode->add_option("output", enc.output)->required();

  std::string dec_in, dec_out;
  auto* decode = app.add_subcommand("decode", "Decode an MV2 container");
  decode->add_option("input", dec_in)->required();
  decode->add_option("output", dec_out)->required();

  unsigned radix = 2, width = 8, rounds = 10, digits = 6;
  std::vector<unsigned> clones;
  bool json = false;
  std::uint64_t limit = 16;

  auto* verify = app.add_subcommand("verify", "Check every closed form against the main file");
  verify->add_option("--radix", radix);
  verify->add_option("--width", width);
  verify->add_option("--clone", clones, "Restrict to these clones")->check(CLI::Range(1, 3));
  verify->add_flag("--json", json);

  auto* analytics = app.add_subcommand("analytics", "Evaluate ratios, flag lengths and growth");
  analytics->add_option("--radix", radix);
  analytics->add_option("--width", width);
  analytics->add_option("--rounds", rounds);
  analytics->add_option("--digits", digits, "Decimal places in renderings");
  analytics->add_flag("--json", json);

  auto* codebook = app.add_subcommand("codebook", "Print the clone-3 codebook");
  codebook->add_option("--radix", radix);
  codebook->add_option("--width", width);
  codebook->add_option("--limit", limit, "Rows to print");
  codebook->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*encode) return run_encode(enc);
    if (*decode) return run_decode(dec_in, dec_out);
    if (*verify) return run_verify(radix, width, clones, json);
    if (*analytics) return run_analytics(radix, width, rounds, digits, json);
    if (*codebook) return run_codebook(radix, width, limit, json);
  } catch (const mv2::Error& e) {
    std::cerr << "error (" << mv2::to_string(e.code()) << "): " << e.what() << "\n";
    return mv2::is_usage_error(e.code()) ? kExitUsage : kExitData;
  } catch (const IoError& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
