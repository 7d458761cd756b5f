#pragma once

// Points on the unit torus [0,1)^d and the wrap-around sup-norm distance.
// Coordinates always live in [0,1); distances always live in [0, 1/2].

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ppclab {

namespace detail {

inline void check_coord(double x) {
  if (!(x >= 0.0 && x < 1.0))
    throw std::invalid_argument("torus coordinate outside [0,1): " +
                                std::to_string(x));
}

}  // namespace detail

class TorusPoint {
 public:
  explicit TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
      throw std::invalid_argument("torus point needs at least one coordinate");
    for (double x : coords_) detail::check_coord(x);
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

// Immutable finite sequence of torus points, stored flat (row-major) so that
// million-point sets stay cache-friendly.
class TorusPointSet {
 public:
  TorusPointSet(int dim, std::vector<double> flat)
      : dim_(dim), flat_(std::move(flat)) {
    if (dim_ < 1) throw std::invalid_argument("point set dimension must be >= 1");
    if (flat_.size() % static_cast<std::size_t>(dim_) != 0)
      throw std::invalid_argument("flat coordinate array not a multiple of dim");
    for (double x : flat_) detail::check_coord(x);
  }

  int dim() const { return dim_; }
  std::size_t size() const { return flat_.size() / dim_; }

  std::span<const double> point(std::size_t i) const {
    return {flat_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }

  TorusPoint at(std::size_t i) const {
    auto p = point(i);
    return TorusPoint(std::vector<double>(p.begin(), p.end()));
  }

  const std::vector<double>& flat() const { return flat_; }

 private:
  int dim_;
  std::vector<double> flat_;
};

// Distance of one coordinate pair around the circle.
inline double circle_dist(double a, double b) {
  double delta = std::fabs(a - b);
  return delta > 0.5 ? 1.0 - delta : delta;
}

// Sup-norm torus distance: max over coordinates of the distance to the
// nearest integer translate. Symmetric, translation invariant, in [0, 1/2].
inline double torus_dist_sup(std::span<const double> a,
                             std::span<const double> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("torus_dist_sup: dimension mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = circle_dist(a[i], b[i]);
    if (d > best) best = d;
  }
  return best;
}

inline double torus_dist_sup(const TorusPoint& a, const TorusPoint& b) {
  return torus_dist_sup(std::span<const double>(a.coords()),
                        std::span<const double>(b.coords()));
}

}  // namespace ppclab
