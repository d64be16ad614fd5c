#pragma once

// Closed-form compression ratios, flag lengths and the multi-round growth
// model, all evaluated in exact rational arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "mv2/pit.hpp"

namespace mv2 {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

BigInt big_pow(unsigned base, unsigned exponent);

/// k1 = (n p^n - (n+1) p^(n-1) + 1) / (n (p-1) p^(n-1))
Ratio ratio_clone1(Radix p, Width n);
/// k2 = ((n-1) p^(n-1) - n p^(n-2) + 1) / (n (p-1) p^(n-2)); n >= 2.
Ratio ratio_clone2(Radix p, Width n);
/// k3 = (n p^(n+2) - (2n+1) p^(n+1) + n p^n + n p^2 + (1-n) p) / (n p^n (p-1)^2)
Ratio ratio_clone3(Radix p, Width n);

/// (p^(n+1) - p) / (p - 1)
BigInt flag_len_clone1(Radix p, Width n);

struct Clone2FlagLengths {
  BigInt msb;            // p^n
  BigInt paper_len;      // (p^(n+2) - p^2) / (p - 1), as printed
  BigInt corrected_len;  // (p^(n+1) - p^2) / (p - 1), forced by conservation
};
/// n >= 2.
Clone2FlagLengths flag_lens_clone2(Radix p, Width n);

struct Clone3FlagModel {
  BigInt length;
  /// Smallest m >= 1 with (p^m - 1)/(p - 1) >= n - 1; absent for p = 2.
  std::optional<unsigned> m;
  /// The p = 2 case matches the measured unary flag; the p != 2 case is a
  /// reference model only.
  bool describes_unary_flag() const noexcept { return !m.has_value(); }
};
Clone3FlagModel flag_len_clone3(Radix p, Width n);

/// (n + 1) / n
Ratio expansion_factor(Width n);
/// p^n
BigInt delta_L(Radix p, Width n);

/// ((kf - 1) k^m + k - kf) / (k - 1). Throws degenerate_ratio for k = 1.
Ratio growth_after_rounds(const Ratio& k, const Ratio& kf, unsigned m);

struct FormulaSet {
  unsigned p;
  unsigned n;
  Ratio k1;
  std::optional<Ratio> k2;
  Ratio k3;
  BigInt lf1_clone1;
  std::optional<Clone2FlagLengths> lf_clone2;
  Clone3FlagModel lf_clone3;
  Ratio kf;
  BigInt delta_L;
};
FormulaSet formula_set(Radix p, Width n);

/// "897/1024", or "510" for integers.
std::string to_fraction_string(const Ratio& r);
/// Rounded half away from zero to `digits` decimals, e.g. "1.7".
std::string to_decimal_string(const Ratio& r, unsigned digits);
/// Parses "a/b" or "a".
Ratio parse_ratio(const std::string& text);

}  // namespace mv2
