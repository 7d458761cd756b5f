#pragma once

// Discrepancy of point sets against Lebesgue measure: exact one-dimensional
// star/extreme formulas, a brute-force box-enumeration oracle for small sets
// in d <= 2, the Koksma-Erdos-Turan frequency-side upper bound in any
// dimension, and the N*D_N/(log N)^d scaling monitor that flags
// low-discrepancy behavior.
//
// Conventions: the star (anchored) discrepancy takes the supremum of
// |A([0,b))/N - vol| over anchored boxes; the extreme discrepancy takes it
// over all axis-parallel boxes [a,b). Suprema over half-open boxes are
// realized by evaluating closed boxes for the positive part (count high,
// volume small) and open boxes for the negative part, with box faces passing
// through point coordinates and the 0/1 boundary.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppclab/expsum.hpp"
#include "ppclab/io.hpp"
#include "ppclab/sequences.hpp"
#include "ppclab/torus.hpp"

namespace ppclab {

enum class DiscrepancyMode { kExact1dStar, kExact1dExtreme, kBrute, kKetBound };

inline const char* to_string(DiscrepancyMode m) {
  switch (m) {
    case DiscrepancyMode::kExact1dStar: return "exact1d_star";
    case DiscrepancyMode::kExact1dExtreme: return "exact1d_extreme";
    case DiscrepancyMode::kBrute: return "brute";
    case DiscrepancyMode::kKetBound: return "ket_bound";
  }
  return "?";
}

struct DiscrepancyResult {
  std::uint64_t n = 0;
  int dim = 0;
  DiscrepancyMode mode = DiscrepancyMode::kExact1dStar;
  double value = 0.0;
  // Set only for mode == kKetBound.
  int ket_m = 0;
  double ket_c = 0.0;
};

namespace detail {

inline std::vector<double> sorted_coords_1d(const TorusPointSet& points) {
  if (points.dim() != 1)
    throw std::invalid_argument("exact formulas require d = 1");
  if (points.size() == 0)
    throw std::invalid_argument("discrepancy needs at least one point");
  std::vector<double> xs = points.flat();
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace detail

// Star discrepancy in d = 1 by the classical sorted-sample formula:
// 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|.
inline DiscrepancyResult star_disc_1d(const TorusPointSet& points) {
  const auto xs = detail::sorted_coords_1d(points);
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ref = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    worst = std::max(worst, std::abs(xs[i] - ref));
  }
  return {xs.size(), 1, DiscrepancyMode::kExact1dStar, 1.0 / (2.0 * n) + worst,
          0, 0.0};
}

// Extreme (all-boxes) discrepancy in d = 1:
// 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)), with i = 1..N.
inline DiscrepancyResult extreme_disc_1d(const TorusPointSet& points) {
  const auto xs = detail::sorted_coords_1d(points);
  const double n = static_cast<double>(xs.size());
  double hi = -2.0, lo = 2.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double t = static_cast<double>(i + 1) / n - xs[i];
    hi = std::max(hi, t);
    lo = std::min(lo, t);
  }
  return {xs.size(), 1, DiscrepancyMode::kExact1dExtreme, 1.0 / n + hi - lo, 0,
          0.0};
}

namespace detail {

// --- one-dimensional brute parts -----------------------------------------

inline double brute_star_1d(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double best = 0.0;
  // positive part: closed boxes [0, x] with x a point coordinate
  for (double x : xs) {
    const auto cnt = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    best = std::max(best, static_cast<double>(cnt) / n - x);
  }
  // negative part: open boxes [0, b) with b a point coordinate or 1
  auto neg = [&](double b) {
    const auto cnt = std::lower_bound(xs.begin(), xs.end(), b) - xs.begin();
    best = std::max(best, b - static_cast<double>(cnt) / n);
  };
  for (double x : xs) neg(x);
  neg(1.0);
  return best;
}

inline double brute_extreme_1d(const std::vector<double>& xs) {
  const std::size_t k = xs.size();
  const double n = static_cast<double>(k);
  double best = 0.0;
  // positive part: closed intervals [x_(i), x_(j)], i <= j
  {
    double best_left = -1e300;
    for (std::size_t j = 0; j < k; ++j) {
      best_left = std::max(best_left, xs[j] - static_cast<double>(j) / n);
      best = std::max(
          best, static_cast<double>(j + 1) / n - xs[j] + best_left);
    }
  }
  // negative part: open intervals with endpoints in {0} u xs u {1};
  // candidate values deduplicated so every evaluated interval is nonempty
  {
    std::vector<double> c;
    c.reserve(k + 2);
    c.push_back(0.0);
    c.insert(c.end(), xs.begin(), xs.end());
    c.push_back(1.0);
    c.erase(std::unique(c.begin(), c.end()), c.end());
    auto cnt_lt = [&](double v) {
      return static_cast<double>(std::lower_bound(xs.begin(), xs.end(), v) -
                                 xs.begin());
    };
    auto cnt_le = [&](double v) {
      return static_cast<double>(std::upper_bound(xs.begin(), xs.end(), v) -
                                 xs.begin());
    };
    double best_left = cnt_le(c[0]) / n - c[0];
    for (std::size_t j = 1; j < c.size(); ++j) {
      best = std::max(best, c[j] - cnt_lt(c[j]) / n + best_left);
      best_left = std::max(best_left, cnt_le(c[j]) / n - c[j]);
    }
  }
  return best;
}

// --- two-dimensional brute parts ------------------------------------------

struct PointXY {
  double x, y;
};

// Supremum over anchored boxes [0,b1) x [0,b2).
inline double brute_star_2d(const std::vector<PointXY>& pts) {
  const double n = static_cast<double>(pts.size());
  std::vector<double> xs;
  for (const auto& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double best = 0.0;
  // positive part: closed corners at point coordinates
  for (double b1 : xs) {
    std::vector<double> ys;
    for (const auto& p : pts)
      if (p.x <= b1) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (j + 1 < ys.size() && ys[j + 1] == ys[j]) continue;  // take last dup
      best = std::max(best,
                      static_cast<double>(j + 1) / n - b1 * ys[j]);
    }
  }
  // negative part: open boxes, corners at point coordinates or 1
  std::vector<double> xcand = xs;
  xcand.push_back(1.0);
  for (double b1 : xcand) {
    std::vector<double> ys;
    for (const auto& p : pts)
      if (p.x < b1) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    std::vector<double> ycand = ys;
    ycand.push_back(1.0);
    for (double b2 : ycand) {
      const auto cnt =
          std::lower_bound(ys.begin(), ys.end(), b2) - ys.begin();
      best = std::max(best, b1 * b2 - static_cast<double>(cnt) / n);
    }
  }
  return best;
}

// Supremum over all boxes [a1,b1) x [a2,b2).
inline double brute_extreme_2d(const std::vector<PointXY>& pts) {
  const double n = static_cast<double>(pts.size());
  std::vector<PointXY> by_y = pts;
  std::sort(by_y.begin(), by_y.end(),
            [](const PointXY& a, const PointXY& b) { return a.y < b.y; });
  std::vector<double> xs;
  for (const auto& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  double best = 0.0;

  // positive part: closed boxes with all four faces through point coords
  for (std::size_t i1 = 0; i1 < xs.size(); ++i1) {
    for (std::size_t i2 = i1; i2 < xs.size(); ++i2) {
      const double a1 = xs[i1], b1 = xs[i2], w = b1 - a1;
      double best_left = -1e300;
      std::size_t j = 0;
      for (const auto& p : by_y) {
        if (p.x < a1 || p.x > b1) continue;
        // j counts slab points with smaller y already seen
        best_left =
            std::max(best_left, w * p.y - static_cast<double>(j) / n);
        best = std::max(
            best, static_cast<double>(j + 1) / n - w * p.y + best_left);
        ++j;
      }
    }
  }

  // negative part: open boxes, faces through point coords or the 0/1 boundary
  std::vector<double> xcand;
  xcand.push_back(0.0);
  xcand.insert(xcand.end(), xs.begin(), xs.end());
  xcand.push_back(1.0);
  xcand.erase(std::unique(xcand.begin(), xcand.end()), xcand.end());
  std::vector<double> slab_y;
  for (std::size_t i1 = 0; i1 + 1 < xcand.size(); ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < xcand.size(); ++i2) {
      const double a1 = xcand[i1], b1 = xcand[i2], w = b1 - a1;
      slab_y.clear();
      for (const auto& p : by_y)
        if (p.x > a1 && p.x < b1) slab_y.push_back(p.y);  // already y-sorted
      const std::size_t k = slab_y.size();
      auto cnt_lt = [&](double v) {
        return static_cast<double>(
            std::lower_bound(slab_y.begin(), slab_y.end(), v) -
            slab_y.begin());
      };
      auto cnt_le = [&](double v) {
        return static_cast<double>(
            std::upper_bound(slab_y.begin(), slab_y.end(), v) -
            slab_y.begin());
      };
      // candidates 0, slab ys, 1 — deduplicated so every evaluated open
      // interval (a2, b2) has a2 < b2
      std::vector<double> cvals;
      cvals.reserve(k + 2);
      cvals.push_back(0.0);
      cvals.insert(cvals.end(), slab_y.begin(), slab_y.end());
      cvals.push_back(1.0);
      cvals.erase(std::unique(cvals.begin(), cvals.end()), cvals.end());
      double best_left = cnt_le(cvals[0]) / n - w * cvals[0];
      for (std::size_t j = 1; j < cvals.size(); ++j) {
        const double c = cvals[j];
        best = std::max(best, w * c - cnt_lt(c) / n + best_left);
        best_left = std::max(best_left, cnt_le(c) / n - w * c);
      }
    }
  }
  return best;
}

}  // namespace detail

// Brute-force discrepancy oracle: exact supremum over boxes by enumerating
// candidate faces through point coordinates and the domain boundary.
// Guarded to N <= 500 and d <= 2; refuse anything larger.
inline DiscrepancyResult brute_disc(const TorusPointSet& points,
                                    bool anchored) {
  const std::size_t n = points.size();
  const int d = points.dim();
  if (n == 0) throw std::invalid_argument("discrepancy needs at least one point");
  if (n > 500 || d > 2)
    throw std::invalid_argument(
        "brute-force discrepancy is limited to N <= 500 and d <= 2");

  double value = 0.0;
  if (d == 1) {
    std::vector<double> xs = points.flat();
    std::sort(xs.begin(), xs.end());
    value = anchored ? detail::brute_star_1d(xs) : detail::brute_extreme_1d(xs);
  } else {
    std::vector<detail::PointXY> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = points.point(i);
      pts[i] = {p[0], p[1]};
    }
    value = anchored ? detail::brute_star_2d(pts) : detail::brute_extreme_2d(pts);
  }
  return {n, d, DiscrepancyMode::kBrute, value, 0, 0.0};
}

// Default Koksma-Erdos-Turan constant: 4 in d = 1 (classical), 4*3^(d-1)
// above. Conservative; the bound is a monitor, not an exact value.
inline double ket_default_c(int d) {
  double c = 4.0;
  for (int i = 1; i < d; ++i) c *= 3.0;
  return c;
}

// Frequency-side discrepancy upper bound:
//   C_d * ( 1/m + sum_{0 < |h|_inf <= m} |weyl_sum(h)| / r(h) ),
// r(h) = prod_j max(|h_j|, 1). Conjugate symmetry halves the lattice walk.
inline DiscrepancyResult ket_bound(const TorusPointSet& points, int m,
                                   double c_d) {
  if (m < 1) throw std::invalid_argument("ket_bound needs m >= 1");
  if (points.size() == 0)
    throw std::invalid_argument("discrepancy needs at least one point");
  const int d = points.dim();

  double sum = 0.0;
  std::vector<long long> h(static_cast<std::size_t>(d), 0);
  // enumerate h with first nonzero component positive; count each twice
  while (true) {
    int i = d - 1;
    while (i >= 0 && h[static_cast<std::size_t>(i)] == m) {
      h[static_cast<std::size_t>(i)] = -m;
      --i;
    }
    if (i < 0) break;
    ++h[static_cast<std::size_t>(i)];
    long long first = 0;
    for (int j = 0; j < d; ++j)
      if (h[static_cast<std::size_t>(j)] != 0) {
        first = h[static_cast<std::size_t>(j)];
        break;
      }
    if (first <= 0) continue;
    double r = 1.0;
    for (int j = 0; j < d; ++j)
      r *= std::max(1.0, std::abs(static_cast<double>(
               h[static_cast<std::size_t>(j)])));
    const double w = std::abs(weyl_sum(points, FrequencyVector(h)));
    sum += 2.0 * w / r;
  }
  const double value = c_d * (1.0 / static_cast<double>(m) + sum);
  DiscrepancyResult res{points.size(), d, DiscrepancyMode::kKetBound, value,
                        m, c_d};
  return res;
}

inline DiscrepancyResult ket_bound(const TorusPointSet& points, int m) {
  return ket_bound(points, m, ket_default_c(points.dim()));
}

// One rung of the low-discrepancy scaling monitor.
struct ScalingRow {
  std::uint64_t n = 0;
  DiscrepancyMode mode = DiscrepancyMode::kExact1dExtreme;
  double disc = 0.0;    // D_N (exact, brute, or KET upper bound)
  double scaled = 0.0;  // N * D_N / (log N)^d
  int ket_m = 0;        // set when mode == kKetBound
  double ket_c = 0.0;
};

// N * D_N / (log N)^d along an N ladder; bounded values are the
// low-discrepancy signature. Mode per rung: exact formula in d = 1, brute
// force for small sets in d = 2, KET upper bound otherwise.
inline std::vector<ScalingRow> low_disc_scaling(
    const SequenceSpec& spec, const std::vector<std::uint64_t>& n_ladder,
    int ket_m = 64) {
  std::vector<ScalingRow> rows;
  rows.reserve(n_ladder.size());
  for (std::uint64_t n : n_ladder) {
    if (n < 2)
      throw std::invalid_argument(
          "scaling monitor needs N >= 2 (log N must be positive)");
    const TorusPointSet pts = generate(spec, n);
    DiscrepancyResult r{};
    if (pts.dim() == 1)
      r = extreme_disc_1d(pts);
    else if (pts.dim() == 2 && pts.size() <= 500)
      r = brute_disc(pts, /*anchored=*/false);
    else
      r = ket_bound(pts, ket_m);
    const double logn = std::log(static_cast<double>(n));
    const double denom = std::pow(logn, pts.dim());
    rows.push_back({n, r.mode, r.value,
                    static_cast<double>(n) * r.value / denom, r.ket_m,
                    r.ket_c});
  }
  return rows;
}

// CSV form shared by all discrepancy outputs: `N,d,mode,value,m,C_d`, with
// m and C_d left empty unless the row came from the KET bound.
inline void write_disc_csv(const std::vector<DiscrepancyResult>& results,
                           std::ostream& os) {
  os << "N,d,mode,value,m,C_d\n";
  for (const auto& r : results) {
    os << r.n << ',' << r.dim << ',' << to_string(r.mode) << ','
       << detail::format_double(r.value) << ',';
    if (r.mode == DiscrepancyMode::kKetBound)
      os << r.ket_m << ',' << detail::format_double(r.ket_c);
    else
      os << ',';
    os << '\n';
  }
}

// Scaling monitor rows in the same schema; value carries the monitored
// quantity N * D_N / (log N)^d.
inline void write_scaling_csv(const std::vector<ScalingRow>& rows, int dim,
                              std::ostream& os) {
  os << "N,d,mode,value,m,C_d\n";
  for (const auto& r : rows) {
    os << r.n << ',' << dim << ',' << to_string(r.mode) << ','
       << detail::format_double(r.scaled) << ',';
    if (r.mode == DiscrepancyMode::kKetBound)
      os << r.ket_m << ',' << detail::format_double(r.ket_c);
    else
      os << ',';
    os << '\n';
  }
}

}  // namespace ppclab
