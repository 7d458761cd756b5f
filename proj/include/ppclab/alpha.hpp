#pragma once

// Generator vectors for Kronecker sequences. Each component carries its
// fractional part both as a double and as a 128-bit fixed-point fraction;
// the latter makes frac(n * alpha) an exact modular multiply, so sequence
// values stay correct to the last bit even at n in the millions, where a
// plain double product would have drifted by many thresholds.
//
// Preset vectors are quadratic surds: badly approximable by construction
// (eventually periodic continued fractions, bounded partial quotients), and
// together with 1 linearly independent over Q. Custom vectors parsed from
// decimal literals are accepted but flagged unverified: a finite decimal
// carries only finitely many certain partial quotients.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppclab/continued_fraction.hpp"

namespace ppclab {

namespace detail {

using uint128 = unsigned __int128;

inline uint128 frac_bits128(const BigFloat& x) {
  BigFloat f = x - floor(x);
  BigFloat scaled = ldexp(f, 128);
  BigInt n = scaled.convert_to<BigInt>();
  if (n < 0) n = 0;
  const BigInt limit = BigInt(1) << 128;
  if (n >= limit) n = limit - 1;
  const std::uint64_t hi = static_cast<std::uint64_t>(n >> 64);
  const std::uint64_t lo =
      static_cast<std::uint64_t>(n & BigInt(0xFFFFFFFFFFFFFFFFULL));
  return (static_cast<uint128>(hi) << 64) | lo;
}

// Value in [0,1); the torus identifies 1.0 with 0.0, so a carry out of the
// top bits clamps to 0.
inline double unit_from_bits(uint128 v) {
  const double x = static_cast<double>(static_cast<std::uint64_t>(v >> 64)) * 0x1.0p-64 +
                   static_cast<double>(static_cast<std::uint64_t>(v)) * 0x1.0p-128;
  return x >= 1.0 ? 0.0 : x;
}

// frac(n * alpha) with alpha given in 1/2^128 units; the multiply wraps mod
// 2^128, which is exactly reduction mod 1.
inline double kronecker_coord(uint128 alpha_bits, std::uint64_t n) {
  return unit_from_bits(alpha_bits * static_cast<uint128>(n));
}

inline double min_convergent_product(const ContinuedFraction& cf,
                                     const BigFloat& value) {
  BigFloat best = -1;
  for (const Convergent& c : cf.convergents) {
    BigFloat y = BigFloat(c.q) * value;
    BigFloat dist = abs(y - floor(y + BigFloat(0.5)));
    BigFloat prod = BigFloat(c.q) * dist;
    if (best < 0 || prod < best) best = prod;
  }
  return best.convert_to<double>();
}

}  // namespace detail

struct AlphaComponent {
  double value = 0.0;                // frac(alpha) as a double
  detail::uint128 frac_bits = 0;     // frac(alpha) in 1/2^128 units
  ContinuedFraction cf;              // expansion of the fractional part
  BigInt max_quotient;               // over the computed partial quotients
  double badness = 0.0;              // min over convergents of q*||q alpha||
};

class AlphaVector {
 public:
  static constexpr int kCfDepth = 50;

  static AlphaVector preset(std::string_view name) {
    AlphaVector out;
    out.name_ = std::string(name);
    out.verified_ = true;
    if (name == "golden") {
      out.push_surd(QuadraticSurd(-1, 1, 5, 2));  // (sqrt(5)-1)/2
      out.note_ =
          "golden ratio fractional part; all partial quotients 1, "
          "{1, alpha} independent over Q";
    } else if (name == "sqrt2") {
      out.push_surd(QuadraticSurd(-1, 1, 2, 1));  // sqrt(2)-1
      out.note_ = "sqrt(2)-1; partial quotients all 2";
    } else if (name == "sqrt23") {
      out.push_surd(QuadraticSurd(-1, 1, 2, 1));
      out.push_surd(QuadraticSurd(-1, 1, 3, 1));  // sqrt(3)-1
      out.note_ =
          "frac parts of sqrt(2), sqrt(3); 1, sqrt(2), sqrt(3) are linearly "
          "independent over Q and each component is a quadratic surd";
    } else if (name == "sqrt235") {
      out.push_surd(QuadraticSurd(-1, 1, 2, 1));
      out.push_surd(QuadraticSurd(-1, 1, 3, 1));
      out.push_surd(QuadraticSurd(-2, 1, 5, 1));  // sqrt(5)-2
      out.note_ =
          "frac parts of sqrt(2), sqrt(3), sqrt(5); 1 and the three roots are "
          "linearly independent over Q; all components quadratic surds";
    } else {
      throw std::invalid_argument("unknown alpha preset: " + std::string(name));
    }
    return out;
  }

  // Comma-free list of plain decimal literals, one per dimension. Badness is
  // profiled only as far as the digits allow; verified() stays false.
  static AlphaVector custom(const std::vector<std::string>& decimals) {
    if (decimals.empty())
      throw std::invalid_argument("alpha needs at least one component");
    AlphaVector out;
    out.name_ = "custom";
    out.verified_ = false;
    out.note_ = "custom decimal alpha; badness and independence unverified";
    for (const auto& text : decimals) {
      DecimalReal dec = DecimalReal::parse(text);
      AlphaComponent comp;
      BigFloat v = value_hp(CfValue(dec));
      comp.frac_bits = detail::frac_bits128(v);
      comp.value = detail::unit_from_bits(comp.frac_bits);
      if (comp.value <= 0.0 || comp.value >= 1.0)
        throw std::invalid_argument("alpha component has no usable fractional part: " + text);
      comp.cf = cf_expand_available(dec, kCfDepth);
      comp.max_quotient = 0;
      for (const BigInt& a : comp.cf.quotients)
        if (a > comp.max_quotient) comp.max_quotient = a;
      comp.badness = detail::min_convergent_product(comp.cf, v);
      out.components_.push_back(std::move(comp));
    }
    return out;
  }

  // "golden", "sqrt2", "sqrt23", "sqrt235", or comma-separated decimals.
  static AlphaVector parse(std::string_view text) {
    if (text == "golden" || text == "sqrt2" || text == "sqrt23" ||
        text == "sqrt235")
      return preset(text);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        parts.emplace_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    return custom(parts);
  }

  int dim() const { return static_cast<int>(components_.size()); }
  const AlphaComponent& component(int i) const { return components_[i]; }
  double value(int i) const { return components_[i].value; }
  const std::string& name() const { return name_; }
  bool verified() const { return verified_; }
  const std::string& independence_note() const { return note_; }

 private:
  void push_surd(const QuadraticSurd& surd) {
    AlphaComponent comp;
    BigFloat v = surd.value();
    comp.frac_bits = detail::frac_bits128(v);
    comp.value = detail::unit_from_bits(comp.frac_bits);
    comp.cf = cf_expand(surd, kCfDepth);
    comp.max_quotient = 0;
    for (const BigInt& a : comp.cf.quotients)
      if (a > comp.max_quotient) comp.max_quotient = a;
    comp.badness = detail::min_convergent_product(comp.cf, v);
    components_.push_back(std::move(comp));
  }

  std::vector<AlphaComponent> components_;
  std::string name_;
  std::string note_;
  bool verified_ = false;
};

}  // namespace ppclab
