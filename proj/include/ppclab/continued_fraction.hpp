#pragma once

// Exact continued-fraction machinery. Floating point corrupts partial
// quotients once convergent denominators outgrow the mantissa, so every
// expansion here runs in exact arithmetic:
//
//   * rationals            exact Euclid, terminates,
//   * quadratic surds      the classical (P + sqrt(D))/Q recurrence on
//                          integers, valid to any depth,
//   * decimal literals     interval arithmetic on exact rational bounds; a
//                          quotient is emitted only when both interval ends
//                          agree on it, otherwise a PrecisionError is raised
//                          rather than a silently wrong quotient.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ppclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rat_floor(const BigRat& x) {
  return floor_div(numerator(x), denominator(x));
}

}  // namespace detail

// Quadratic irrational (a + b*sqrt(radicand))/c, stored in the canonical
// (p + sqrt(d))/q form with q dividing d - p^2, which keeps the expansion
// recurrence in integers.
class QuadraticSurd {
 public:
  QuadraticSurd(long long a, long long b, long long radicand, long long c) {
    if (c == 0) throw std::invalid_argument("surd denominator must be nonzero");
    if (b == 0) throw std::invalid_argument("surd coefficient b must be nonzero");
    if (radicand < 2)
      throw std::invalid_argument("surd radicand must be >= 2");
    BigInt rad = radicand;
    BigInt s = sqrt(rad);
    if (s * s == rad)
      throw std::invalid_argument("surd radicand must not be a perfect square");
    BigInt A = a, B = b, C = c;
    if (B < 0) {  // (a - |b| sqrt(D))/c == (-a + |b| sqrt(D))/(-c)
      A = -A;
      C = -C;
      B = -B;
    }
    p_ = A;
    d_ = B * B * rad;
    q_ = C;
    if ((d_ - p_ * p_) % q_ != 0) {
      BigInt aq = abs(q_);
      p_ *= aq;
      d_ *= q_ * q_;
      q_ *= aq;
    }
  }

  const BigInt& p() const { return p_; }
  const BigInt& d() const { return d_; }
  const BigInt& q() const { return q_; }

  BigFloat value() const {
    return (BigFloat(p_) + sqrt(BigFloat(d_))) / BigFloat(q_);
  }

 private:
  BigInt p_, d_, q_;
};

// Decimal literal with its implied uncertainty: "0.7548776662" is the exact
// rational 7548776662/10^10 plus-or-minus half a unit in the last place.
struct DecimalReal {
  BigRat value;
  BigRat half_ulp;
  std::string text;

  static DecimalReal parse(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    BigInt digits = 0;
    int frac_digits = -1;
    bool any = false;
    for (; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '.') {
        if (frac_digits >= 0)
          throw std::invalid_argument("bad decimal literal: " + std::string(s));
        frac_digits = 0;
        continue;
      }
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad decimal literal: " + std::string(s));
      digits = digits * 10 + (ch - '0');
      if (frac_digits >= 0) ++frac_digits;
      any = true;
    }
    if (!any) throw std::invalid_argument("bad decimal literal: " + std::string(s));
    if (frac_digits < 0) frac_digits = 0;
    BigInt scale = 1;
    for (int k = 0; k < frac_digits; ++k) scale *= 10;
    BigRat v(digits, scale);
    if (neg) v = -v;
    return DecimalReal{v, BigRat(1, 2 * scale), std::string(s)};
  }
};

using CfValue = std::variant<BigRat, QuadraticSurd, DecimalReal>;

struct Convergent {
  BigInt p, q;
};

struct ContinuedFraction {
  BigInt a0;
  std::vector<BigInt> quotients;        // a_1 .. a_K, each >= 1
  std::vector<Convergent> convergents;  // p_k/q_k for every emitted term
  bool terminated = false;              // rational input fully expanded
};

namespace detail {

// Accumulates p_k = a_k p_{k-1} + p_{k-2}, q_k likewise.
class ConvergentBuilder {
 public:
  void push(const BigInt& a, ContinuedFraction& out) {
    BigInt p = a * p1_ + p2_;
    BigInt q = a * q1_ + q2_;
    p2_ = std::exchange(p1_, p);
    q2_ = std::exchange(q1_, q);
    out.convergents.push_back({p, q});
  }

 private:
  BigInt p1_ = 1, q1_ = 0;  // index k-1
  BigInt p2_ = 0, q2_ = 1;  // index k-2
};

}  // namespace detail

// Exact expansion of a rational; stops early at the exact representation.
inline ContinuedFraction cf_expand(const BigRat& x, int depth) {
  if (depth < 0) throw std::invalid_argument("cf depth must be >= 0");
  ContinuedFraction out;
  detail::ConvergentBuilder build;
  BigInt n = numerator(x), d = denominator(x);
  for (int k = 0; k <= depth; ++k) {
    BigInt a = detail::floor_div(n, d);
    if (k == 0)
      out.a0 = a;
    else
      out.quotients.push_back(a);
    build.push(a, out);
    BigInt r = n - a * d;
    if (r == 0) {
      out.terminated = true;
      return out;
    }
    n = d;
    d = r;
  }
  return out;
}

// Exact expansion of a quadratic surd to any depth.
inline ContinuedFraction cf_expand(const QuadraticSurd& x, int depth) {
  if (depth < 0) throw std::invalid_argument("cf depth must be >= 0");
  ContinuedFraction out;
  detail::ConvergentBuilder build;
  const BigInt s = sqrt(x.d());  // floor(sqrt(d)), exact
  BigInt P = x.p(), Q = x.q();
  for (int k = 0; k <= depth; ++k) {
    // floor((P + sqrt(d))/Q); sqrt(d) is irrational, so the floor equals the
    // integer formula below for either sign of Q.
    BigInt a = Q > 0 ? detail::floor_div(P + s, Q)
                     : -(detail::floor_div(P + s, -Q) + 1);
    if (k == 0)
      out.a0 = a;
    else
      out.quotients.push_back(a);
    build.push(a, out);
    P = a * Q - P;
    Q = (x.d() - P * P) / Q;
  }
  return out;
}

namespace detail {

inline ContinuedFraction expand_interval(BigRat lo, BigRat hi, int depth,
                                         const std::string& what) {
  ContinuedFraction out;
  ConvergentBuilder build;
  for (int k = 0; k <= depth; ++k) {
    BigInt alo = rat_floor(lo), ahi = rat_floor(hi);
    if (alo != ahi)
      throw PrecisionError("precision of '" + what +
                           "' exhausted at depth " + std::to_string(k));
    if (k == 0)
      out.a0 = alo;
    else
      out.quotients.push_back(alo);
    build.push(alo, out);
    BigRat rlo = lo - BigRat(alo), rhi = hi - BigRat(alo);
    if (rhi == 0) {
      out.terminated = true;  // exact integer remainder
      return out;
    }
    if (rlo == 0)
      throw PrecisionError("precision of '" + what +
                           "' exhausted at depth " + std::to_string(k));
    lo = 1 / rhi;
    hi = 1 / rlo;
  }
  return out;
}

}  // namespace detail

// Interval expansion of a decimal literal. Throws PrecisionError as soon as
// the implied uncertainty makes the next quotient ambiguous.
inline ContinuedFraction cf_expand(const DecimalReal& x, int depth) {
  if (depth < 0) throw std::invalid_argument("cf depth must be >= 0");
  return detail::expand_interval(x.value - x.half_ulp, x.value + x.half_ulp,
                                 depth, x.text);
}

inline ContinuedFraction cf_expand(const CfValue& x, int depth) {
  return std::visit([depth](const auto& v) { return cf_expand(v, depth); }, x);
}

// As cf_expand for a decimal, but keeps whatever prefix is certain instead of
// throwing. Used for custom (unverified) alphas.
inline ContinuedFraction cf_expand_available(const DecimalReal& x, int depth) {
  for (int k = depth; k >= 0; --k) {
    try {
      return cf_expand(x, k);
    } catch (const PrecisionError&) {
      continue;
    }
  }
  throw PrecisionError("no certain quotients in '" + x.text + "'");
}

inline BigFloat value_hp(const CfValue& x) {
  struct Visitor {
    BigFloat operator()(const BigRat& r) const {
      return BigFloat(numerator(r)) / BigFloat(denominator(r));
    }
    BigFloat operator()(const QuadraticSurd& s) const { return s.value(); }
    BigFloat operator()(const DecimalReal& d) const {
      return BigFloat(numerator(d.value)) / BigFloat(denominator(d.value));
    }
  };
  return std::visit(Visitor{}, x);
}

struct BadnessProfile {
  BigInt max_quotient;  // max over a_1..a_K
  double min_product;   // min over computed convergents of q * ||q alpha||
};

// Diagnostics for how badly approximable x is. Bounded partial quotients and
// a min product staying away from zero are the numeric signature of a badly
// approximable number. Rational input is rejected: the product collapses to
// zero at the exact denominator.
inline BadnessProfile badness_profile(const CfValue& x, int depth) {
  if (std::holds_alternative<BigRat>(x))
    throw std::invalid_argument(
        "badness_profile: rational input has no badness constant");
  ContinuedFraction cf = cf_expand(x, depth);
  BadnessProfile out;
  out.max_quotient = 0;
  for (const BigInt& a : cf.quotients)
    if (a > out.max_quotient) out.max_quotient = a;
  const BigFloat val = value_hp(x);
  BigFloat best = -1;
  for (const Convergent& c : cf.convergents) {
    BigFloat y = BigFloat(c.q) * val;
    BigFloat dist = abs(y - floor(y + BigFloat(0.5)));
    BigFloat prod = BigFloat(c.q) * dist;
    if (best < 0 || prod < best) best = prod;
  }
  out.min_product = best.convert_to<double>();
  return out;
}

}  // namespace ppclab
