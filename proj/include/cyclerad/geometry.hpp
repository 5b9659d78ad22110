#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclerad/errors.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad {

using Point = std::vector<double>;

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (Index k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return acc;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

/// Points in R^d. Duplicate points are rejected.
class PointCloud {
 public:
  PointCloud() = default;

  PointCloud(Index dim, std::vector<Point> points)
      : dim_(dim), points_(std::move(points)) {
    if (dim_ < 1) throw InputError("point cloud dimension must be at least 1");
    for (Index i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != dim_) {
        throw InputError("point " + std::to_string(i) + " has " +
                         std::to_string(points_[i].size()) +
                         " coordinates, expected " + std::to_string(dim_));
      }
      for (double x : points_[i]) {
        if (!std::isfinite(x)) {
          throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
        scale_ = std::max(scale_, std::abs(x));
      }
    }
    std::vector<Index> order(points_.size());
    for (Index i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return points_[a] < points_[b]; });
    for (Index k = 1; k < order.size(); ++k) {
      if (points_[order[k - 1]] == points_[order[k]]) {
        throw InputError("duplicate points " + std::to_string(order[k - 1]) +
                         " and " + std::to_string(order[k]));
      }
    }
  }

  Index dim() const { return dim_; }
  Index size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](Index i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Largest absolute coordinate.
  double scale() const { return scale_; }

  /// Absolute slack used for "on the sphere" membership tests.
  double tolerance() const { return 1e-9 * std::max(1.0, scale_); }

 private:
  Index dim_ = 0;
  std::vector<Point> points_;
  double scale_ = 0.0;
};

}  // namespace cyclerad
