#pragma once

// Closed-form analytic kernels behind the perturbed-sequence results: the
// normalized sinc function, exact expectations of pair phase products over
// independent uniform perturbations (classified by which of the four pair
// indices coincide), the triangular density of a scaled difference of
// uniforms, and two certified series bounds — the damped exponential-sum
// moment that controls the variance of perturbed pair counts, and the
// resonance sum whose closed-form majorant makes the moment summable.
//
// Every truncated series carries an analytic tail bound; a check reports
// satisfied only if the untruncated inequality is certified, i.e. the
// truncated sum plus its tail bound stays below the right-hand side.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppclab/alpha.hpp"
#include "ppclab/expsum.hpp"
#include "ppclab/io.hpp"

namespace ppclab {

// sin(pi x)/(pi x), with the removable singularity filled in: sinc_pi(0)=1.
// Exactly zero at nonzero integers (the sine zeros), even, |sinc_pi| <= 1.
inline double sinc_pi(double x) {
  if (std::nearbyint(x) == x) return x == 0.0 ? 1.0 : 0.0;
  const double t = std::numbers::pi * x;
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  }
  return std::sin(t) / t;
}

// Index-coincidence pattern of an ordered pair of ordered pairs (k,l), (m,n)
// with k != l and m != n. Exactly one case applies to every such tuple.
enum class OverlapCase {
  kKeqM,        // k=m, l != n
  kLeqN,        // l=n, k != m
  kKeqN,        // k=n, l != m
  kLeqM,        // l=m, k != n
  kKeqM_LeqN,   // k=m and l=n (same ordered pair)
  kKeqN_LeqM,   // k=n and l=m (reversed pair)
  kAllDistinct, // no coincidence
};

inline const char* to_string(OverlapCase c) {
  switch (c) {
    case OverlapCase::kKeqM: return "k=m";
    case OverlapCase::kLeqN: return "l=n";
    case OverlapCase::kKeqN: return "k=n";
    case OverlapCase::kLeqM: return "l=m";
    case OverlapCase::kKeqM_LeqN: return "k=m,l=n";
    case OverlapCase::kKeqN_LeqM: return "k=n,l=m";
    case OverlapCase::kAllDistinct: return "distinct";
  }
  return "?";
}

inline OverlapCase classify_overlap(std::uint64_t k, std::uint64_t l,
                                    std::uint64_t m, std::uint64_t n) {
  if (k == l || m == n)
    throw std::invalid_argument("overlap classification needs k != l, m != n");
  if (k == m && l == n) return OverlapCase::kKeqM_LeqN;
  if (k == n && l == m) return OverlapCase::kKeqN_LeqM;
  if (k == m) return OverlapCase::kKeqM;
  if (l == n) return OverlapCase::kLeqN;
  if (k == n) return OverlapCase::kKeqN;
  if (l == m) return OverlapCase::kLeqM;
  return OverlapCase::kAllDistinct;
}

// E[e(r eps (X_k - X_l) + r' eps (X_m - X_n))] over i.i.d. uniform X's, as a
// function of the index-coincidence case. The phase factors of the individual
// uniform expectations cancel in every case, so the value is real:
//
//   k=m or l=n            sinc_pi((r+r') eps) sinc_pi(r eps) sinc_pi(r' eps)
//   k=n or l=m            sinc_pi((r-r') eps) sinc_pi(r eps) sinc_pi(r' eps)
//   k=m, l=n              sinc_pi((r+r') eps)^2
//   k=n, l=m              sinc_pi((r-r') eps)^2
//   all distinct          sinc_pi(r eps)^2 sinc_pi(r' eps)^2
//
// sinc_pi(0) = 1 realizes the replace-by-one rule at r = -r' (the r+r'
// factor) and r = r' (the r-r' factor) automatically.
inline double pair_phase_expectation(long long r, long long rp, double eps,
                                     OverlapCase c) {
  if (r == 0 || rp == 0)
    throw std::invalid_argument(
        "pair phase expectation needs r != 0 and r' != 0; use "
        "single_pair_expectation for one frequency");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const double re = static_cast<double>(r) * eps;
  const double rpe = static_cast<double>(rp) * eps;
  const double plus = sinc_pi(static_cast<double>(r + rp) * eps);
  const double minus = sinc_pi(static_cast<double>(r - rp) * eps);
  switch (c) {
    case OverlapCase::kKeqM:
    case OverlapCase::kLeqN:
      return plus * sinc_pi(re) * sinc_pi(rpe);
    case OverlapCase::kKeqN:
    case OverlapCase::kLeqM:
      return minus * sinc_pi(re) * sinc_pi(rpe);
    case OverlapCase::kKeqM_LeqN:
      return plus * plus;
    case OverlapCase::kKeqN_LeqM:
      return minus * minus;
    case OverlapCase::kAllDistinct:
      return sinc_pi(re) * sinc_pi(re) * sinc_pi(rpe) * sinc_pi(rpe);
  }
  throw std::logic_error("unhandled overlap case");
}

// E[e(r eps (X_k - X_l))] = sinc_pi(r eps)^2 for one frequency and one
// disjoint pair.
inline double single_pair_expectation(long long r, double eps) {
  if (r == 0) throw std::invalid_argument("frequency r must be nonzero");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const double v = sinc_pi(static_cast<double>(r) * eps);
  return v * v;
}

// Density of eps * (X - Y) with X, Y i.i.d. uniform on [0,1], per coordinate:
// (1/eps^d) prod_i (1 - |x_i|/eps) on [-eps, eps]^d and 0 outside.
inline double triangular_density(const std::vector<double>& x, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (x.empty()) throw std::invalid_argument("density needs at least one coordinate");
  double v = 1.0;
  for (double xi : x) {
    const double a = std::abs(xi) / eps;
    if (a >= 1.0) return 0.0;
    v *= (1.0 - a) / eps;
  }
  return v;
}

// Outcome of a certified truncated-series bound check. lhs is the check's
// left-hand side as defined by the specific check; tail is the analytic
// bound on the truncated remainder; satisfied certifies the untruncated
// inequality (truncation always counted against the left side).
struct BoundCheckResult {
  std::string id;          // "damped_moment" or "resonance_sum"
  double param1 = 0.0;     // damped_moment: eps;   resonance_sum: sigma
  double param2 = 0.0;     // damped_moment: delta; resonance_sum: unused (0)
  double arg = 0.0;        // damped_moment: N;     resonance_sum: r'
  double lhs = 0.0;
  double rhs = 0.0;
  double tail = 0.0;
  std::uint64_t r_max = 0;
  bool satisfied = false;
};

// Damped second-moment of exponential-sum deviations:
//
//   lhs = sum_{0 < |r| <= R} sinc_pi(r eps)^2 * | |S_N(r alpha)|^2 - N |
//
// with S_N(theta) = sum_{k=1}^N e(k theta); the identity
// sum_{k != l} e(r (k-l) alpha) = |S_N(r alpha)|^2 - N makes this the
// frequency-side bound on the variance of perturbed pair counts. The
// remainder beyond R is bounded by 2 N^2 / (pi^2 eps^2 R) since
// sinc_pi(r eps)^2 <= 1/(pi r eps)^2 and | |S|^2 - N | <= N^2. The check
// certifies lhs + tail <= C * N^(1+delta).
inline BoundCheckResult damped_moment_check(const AlphaVector& alpha,
                                            double eps, std::uint64_t n,
                                            std::uint64_t r_max, double c,
                                            double delta) {
  if (alpha.dim() != 1)
    throw std::invalid_argument("damped moment check is one-dimensional");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (r_max < 1) throw std::invalid_argument("R_max must be >= 1");
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("delta must lie in (0, 1]");

  const detail::uint128 bits = alpha.component(0).frac_bits;
  const double nd = static_cast<double>(n);
  double lhs = 0.0;
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    const double damp = single_pair_expectation(static_cast<long long>(r), eps);
    if (damp == 0.0) continue;
    const double theta = detail::kronecker_coord(bits, r);
    const double mag = std::abs(geometric_exp_sum(theta, n));
    lhs += 2.0 * damp * std::abs(mag * mag - nd);
  }
  const double pi = std::numbers::pi;
  const double tail =
      2.0 * nd * nd / (pi * pi * eps * eps * static_cast<double>(r_max));
  const double rhs = c * std::pow(nd, 1.0 + delta);

  BoundCheckResult res;
  res.id = "damped_moment";
  res.param1 = eps;
  res.param2 = delta;
  res.arg = nd;
  res.lhs = lhs;
  res.rhs = rhs;
  res.tail = tail;
  res.r_max = r_max;
  res.satisfied = lhs + tail <= rhs;
  return res;
}

namespace detail {

inline double zeta2() { return std::numbers::pi * std::numbers::pi / 6.0; }

// Core of the resonance check with the sigma-power table precomputed:
// inv_pow[r] = r^(-sigma) for r = 1..R.
inline BoundCheckResult resonance_sum_core(long long rp, double sigma,
                                           std::uint64_t r_max,
                                           const std::vector<double>& inv_pow) {
  const std::uint64_t rp_abs =
      rp > 0 ? static_cast<std::uint64_t>(rp) : static_cast<std::uint64_t>(-rp);
  double sum = 0.0;
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    if (r == rp_abs) continue;  // r = +-r' excluded (and keeps r + r' != 0)
    const long long t = static_cast<long long>(r) + rp;
    const double td = static_cast<double>(t);
    sum += inv_pow[r] / (td * td);
  }
  // sum_{r > R} (1/r)^sigma / (r+rp)^2 <= sum_{t > R - |rp|} 1/t^2
  //                                    <= 1/(R - |rp|).
  const double tail = 1.0 / static_cast<double>(r_max - rp_abs);
  const double rhs =
      (2.0 + 3.0 * zeta2()) / std::pow(static_cast<double>(rp_abs), sigma);

  BoundCheckResult res;
  res.id = "resonance_sum";
  res.param1 = sigma;
  res.param2 = 0.0;
  res.arg = static_cast<double>(rp);
  res.lhs = sum + tail;  // truncation counted against the left side
  res.rhs = rhs;
  res.tail = tail;
  res.r_max = r_max;
  res.satisfied = res.lhs <= rhs;
  return res;
}

}  // namespace detail

// Resonance sum against its closed-form majorant:
//
//   sum_{r=1..R, r != +-r'} (1/r)^sigma / (r+r')^2  + tail
//     <=  (2 + 3 zeta(2)) / |r'|^sigma,   zeta(2) = pi^2/6.
//
// lhs includes the analytic tail bound, so satisfied certifies the full
// series. Requires R >= 4 |r'| so the tail stays controlled.
inline BoundCheckResult resonance_sum_check(long long rp, double sigma,
                                            std::uint64_t r_max) {
  if (rp == 0) throw std::invalid_argument("r' must be nonzero");
  if (!(sigma >= 0.0 && sigma < 1.0))
    throw std::invalid_argument("sigma must lie in [0, 1)");
  const std::uint64_t rp_abs =
      rp > 0 ? static_cast<std::uint64_t>(rp) : static_cast<std::uint64_t>(-rp);
  if (r_max < 4 * rp_abs)
    throw std::invalid_argument("R_max must be at least 4 |r'|");

  std::vector<double> inv_pow(r_max + 1, 0.0);
  for (std::uint64_t r = 1; r <= r_max; ++r)
    inv_pow[r] = std::pow(static_cast<double>(r), -sigma);
  return detail::resonance_sum_core(rp, sigma, r_max, inv_pow);
}

// CSV form of bound checks. The `lemma` column holds the check id; satisfied
// is 1 or 0.
inline void write_bound_check_csv(const std::vector<BoundCheckResult>& checks,
                                  std::ostream& os) {
  os << "lemma,param1,param2,N_or_rp,lhs,rhs,tail,satisfied\n";
  for (const auto& c : checks) {
    os << c.id << ',' << detail::format_double(c.param1) << ','
       << detail::format_double(c.param2) << ','
       << detail::format_double(c.arg) << ',' << detail::format_double(c.lhs)
       << ',' << detail::format_double(c.rhs) << ','
       << detail::format_double(c.tail) << ',' << (c.satisfied ? 1 : 0)
       << '\n';
  }
}

// Batch variant sharing the sigma-power tables: one result per (sigma, r')
// pair, sigma-major order.
inline std::vector<BoundCheckResult> resonance_sum_grid(
    const std::vector<long long>& rps, const std::vector<double>& sigmas,
    std::uint64_t r_max) {
  std::vector<BoundCheckResult> out;
  out.reserve(rps.size() * sigmas.size());
  std::vector<double> inv_pow(r_max + 1, 0.0);
  for (double sigma : sigmas) {
    if (!(sigma >= 0.0 && sigma < 1.0))
      throw std::invalid_argument("sigma must lie in [0, 1)");
    for (std::uint64_t r = 1; r <= r_max; ++r)
      inv_pow[r] = std::pow(static_cast<double>(r), -sigma);
    for (long long rp : rps) {
      if (rp == 0) throw std::invalid_argument("r' must be nonzero");
      const std::uint64_t rp_abs = rp > 0 ? static_cast<std::uint64_t>(rp)
                                          : static_cast<std::uint64_t>(-rp);
      if (r_max < 4 * rp_abs)
        throw std::invalid_argument("R_max must be at least 4 |r'|");
      out.push_back(detail::resonance_sum_core(rp, sigma, r_max, inv_pow));
    }
  }
  return out;
}

}  // namespace ppclab
