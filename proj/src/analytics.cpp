#include "mv2/analytics.hpp"

namespace mv2 {

BigInt big_pow(unsigned base, unsigned exponent) { return boost::multiprecision::pow(BigInt(base), exponent); }

namespace {

Ratio frac(const BigInt& num, const BigInt& den) { return Ratio(num, den); }

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw Error(Errc::contract, "formula does not evaluate to an integer");
  return q;
}

void require_clone2_width(Width n) {
  if (n.value() < 2) throw Error(Errc::unsupported_width, "clone 2 needs width >= 2");
}

}  // namespace

Ratio ratio_clone1(Radix p, Width n) {
  const unsigned pv = p.value();
  const unsigned nv = n.value();
  const BigInt pn1 = big_pow(pv, nv - 1);
  return frac(BigInt(nv) * pn1 * pv - BigInt(nv + 1) * pn1 + 1, BigInt(nv) * (pv - 1) * pn1);
}

Ratio ratio_clone2(Radix p, Width n) {
  require_clone2_width(n);
  const unsigned pv = p.value();
  const unsigned nv = n.value();
  const BigInt pn2 = big_pow(pv, nv - 2);
  return frac(BigInt(nv - 1) * pn2 * pv - BigInt(nv) * pn2 + 1, BigInt(nv) * (pv - 1) * pn2);
}

Ratio ratio_clone3(Radix p, Width n) {
  const BigInt pp = p.value();
  const BigInt nn = n.value();
  const BigInt pn = big_pow(p.value(), n.value());
  const BigInt num = nn * pn * pp * pp - pn * pp * (2 * nn + 1) + pn * nn + pp * pp * nn + pp * (1 - nn);
  return frac(num, nn * pn * (pp - 1) * (pp - 1));
}

BigInt flag_len_clone1(Radix p, Width n) {
  const unsigned pv = p.value();
  return exact_div(big_pow(pv, n.value() + 1) - pv, BigInt(pv - 1));
}

Clone2FlagLengths flag_lens_clone2(Radix p, Width n) {
  require_clone2_width(n);
  const unsigned pv = p.value();
  const BigInt p2 = BigInt(pv) * pv;
  return {big_pow(pv, n.value()),
          exact_div(big_pow(pv, n.value() + 2) - p2, BigInt(pv - 1)),
          exact_div(big_pow(pv, n.value() + 1) - p2, BigInt(pv - 1))};
}

Clone3FlagModel flag_len_clone3(Radix p, Width n) {
  const unsigned pv = p.value();
  const unsigned nv = n.value();
  if (pv == 2) return {BigInt(3) * big_pow(2, nv) - 2 * nv - 2, std::nullopt};

  unsigned m = 1;
  while ((big_pow(pv, m) - 1) / (pv - 1) < nv - 1) ++m;
  const BigInt q = pv - 1;
  const BigInt num = BigInt(m - 1) * pow(q, m + 1) - BigInt(m) * pow(q, m) + q;
  const BigInt den = BigInt(pv - 2) * (pv - 2);
  return {big_pow(pv, nv) + exact_div(num, den), m};
}

Ratio expansion_factor(Width n) { return Ratio(n.value() + 1, n.value()); }

BigInt delta_L(Radix p, Width n) { return big_pow(p.value(), n.value()); }

Ratio growth_after_rounds(const Ratio& k, const Ratio& kf, unsigned m) {
  if (m < 1) throw Error(Errc::range, "growth needs at least one round");
  if (k == 1) throw Error(Errc::degenerate_ratio, "growth model is undefined for k = 1");
  const Ratio km(pow(numerator(k), m), pow(denominator(k), m));
  return ((kf - 1) * km + k - kf) / (k - 1);
}

FormulaSet formula_set(Radix p, Width n) {
  FormulaSet f{p.value(),           n.value(),          ratio_clone1(p, n),  std::nullopt,
               ratio_clone3(p, n),  flag_len_clone1(p, n), std::nullopt,   flag_len_clone3(p, n),
               expansion_factor(n), delta_L(p, n)};
  if (n.value() >= 2) {
    f.k2 = ratio_clone2(p, n);
    f.lf_clone2 = flag_lens_clone2(p, n);
  }
  return f;
}

std::string to_fraction_string(const Ratio& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Ratio& r, unsigned digits) {
  const bool negative = r < 0;
  const Ratio a = negative ? Ratio(-r) : r;
  const BigInt scale = big_pow(10, digits);
  // round half away from zero
  const BigInt scaled = BigInt(numerator(a) * scale * 2 + denominator(a)) / (denominator(a) * 2);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return (negative && scaled != 0 ? "-" : "") + s;
}

Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Ratio(BigInt(text));
  return Ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace mv2
