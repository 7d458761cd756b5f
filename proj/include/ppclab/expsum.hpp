#pragma once

// Exponential sums over the torus: the geometric sum sum_{j=1}^N e(j theta),
// Weyl sums of a point set, and the normalized growth ratio used to certify
// that Kronecker exponential sums stay square-root small for badly
// approximable generators.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ppclab/alpha.hpp"
#include "ppclab/parallel.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

// Integer frequency vector with at least one nonzero component.
struct FrequencyVector {
  std::vector<long long> h;

  explicit FrequencyVector(std::vector<long long> components)
      : h(std::move(components)) {
    if (h.empty())
      throw std::invalid_argument("frequency vector needs at least one component");
    bool nonzero = false;
    for (long long v : h) nonzero = nonzero || v != 0;
    if (!nonzero)
      throw std::invalid_argument("frequency vector must be nonzero");
  }

  int dim() const { return static_cast<int>(h.size()); }
};

namespace detail {

inline std::complex<double> unit_exp(double t) {
  const double ph = 2.0 * std::numbers::pi * t;
  return {std::cos(ph), std::sin(ph)};
}

// Distance from theta to the nearest integer.
inline double dist_to_int(double theta) {
  const double f = theta - std::floor(theta);
  return f > 0.5 ? 1.0 - f : f;
}

}  // namespace detail

// sum_{j=1}^N e(j theta). Closed form e((N+1)theta/2) sin(N pi theta) /
// sin(pi theta) away from integer theta; direct summation inside the tiny
// denominator window where the ratio would lose digits. Callers get the best
// accuracy by passing theta already reduced mod 1.
inline std::complex<double> geometric_exp_sum(double theta, std::uint64_t n) {
  if (n == 0) return {0.0, 0.0};
  const double dist = detail::dist_to_int(theta);
  if (dist < 1e-9) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t j = 1; j <= n; ++j)
      acc += detail::unit_exp(static_cast<double>(j) * theta);
    return acc;
  }
  const double pi = std::numbers::pi;
  const double ratio =
      std::sin(static_cast<double>(n) * pi * theta) / std::sin(pi * theta);
  const double mid = std::fmod(static_cast<double>(n + 1) * theta * 0.5, 1.0);
  return detail::unit_exp(mid) * ratio;
}

// Exact fractional part of <r, alpha> using the 128-bit fixed-point
// components; immune to the cancellation a double dot product would suffer.
inline double frac_inner(const AlphaVector& alpha, const FrequencyVector& r) {
  if (alpha.dim() != r.dim())
    throw std::invalid_argument("frequency/alpha dimension mismatch");
  detail::uint128 acc = 0;
  for (int i = 0; i < r.dim(); ++i) {
    const long long c = r.h[i];
    if (c == 0) continue;
    const std::uint64_t mag =
        c > 0 ? static_cast<std::uint64_t>(c)
              : static_cast<std::uint64_t>(-(c + 1)) + 1;
    detail::uint128 term =
        alpha.component(i).frac_bits * static_cast<detail::uint128>(mag);
    if (c < 0) term = static_cast<detail::uint128>(0) - term;
    acc += term;
  }
  return detail::unit_from_bits(acc);
}

// (1/N) sum_j e(<r, x_j>).
inline std::complex<double> weyl_sum(const TorusPointSet& points,
                                     const FrequencyVector& r) {
  if (points.dim() != r.dim())
    throw std::invalid_argument("frequency/point dimension mismatch");
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("weyl_sum needs a nonempty point set");
  const int d = points.dim();
  const double* flat = points.flat().data();

  constexpr std::size_t kChunk = 8192;
  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::complex<double>> partial(n_chunks, {0.0, 0.0});
  parallel_chunks(n, kChunk, [&](std::size_t c, std::size_t b, std::size_t e) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = b; j < e; ++j) {
      double phase = 0.0;
      for (int i = 0; i < d; ++i)
        phase += static_cast<double>(r.h[i]) * flat[j * d + i];
      acc += detail::unit_exp(phase);
    }
    partial[c] = acc;
  });
  std::complex<double> total{0.0, 0.0};
  for (const auto& p : partial) total += p;  // fixed combine order
  return total / static_cast<double>(n);
}

// |sum_{j=1}^N e(j <r, alpha>)| / (min_i r_i^{1/2-delta} * N^{1/2+delta}).
// For badly approximable alpha this ratio stays bounded uniformly in r and N.
inline double expsum_growth_ratio(const AlphaVector& alpha,
                                  const FrequencyVector& r, std::uint64_t n,
                                  double delta) {
  if (alpha.dim() != r.dim())
    throw std::invalid_argument("frequency/alpha dimension mismatch");
  if (!(delta > 0.0 && delta <= 0.5))
    throw std::invalid_argument("delta must lie in (0, 1/2]");
  if (n == 0) throw std::invalid_argument("N must be >= 1");
  long long rmin = 0;
  for (long long v : r.h) {
    if (v < 1)
      throw std::invalid_argument("growth ratio needs positive frequency components");
    if (rmin == 0 || v < rmin) rmin = v;
  }
  const double theta = frac_inner(alpha, r);
  const double mag = std::abs(geometric_exp_sum(theta, n));
  const double denom = std::pow(static_cast<double>(rmin), 0.5 - delta) *
                       std::pow(static_cast<double>(n), 0.5 + delta);
  return mag / denom;
}

}  // namespace ppclab
