#pragma once

// Radii of chains: distance from a fixed site (r_v) and the exact radius of
// the smallest Euclidean ball enclosing a chain's vertices.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cyclerad/complex.hpp"
#include "cyclerad/geometry.hpp"

namespace cyclerad {

struct SphereCertificate {
  Point center;
  double radius = 0.0;
  /// Indices (into the point list the sphere was computed for) of the points
  /// on the sphere that determine it.
  std::vector<Index> support;

  bool encloses(std::span<const double> p, double tol) const {
    return distance(center, p) <= radius + tol;
  }
};

/// Largest distance from `site` to a vertex of simplex (dim, i).
inline double simplex_site_radius(const EmbeddedComplex& k, const Point& site,
                                  Index dim, Index i) {
  double r = 0.0;
  for (Index v : k.simplex(dim, i)) r = std::max(r, distance(site, k.point(v)));
  return r;
}

/// Sorted point indices of the vertices touched by a p-chain.
inline std::vector<Index> chain_vertices(const EmbeddedComplex& k,
                                         const ChainVector& chain, Index p) {
  if (chain.ambient_size() != k.size(p)) {
    throw std::invalid_argument("chain does not match the complex in this dimension");
  }
  std::vector<Index> out;
  for (Index i : chain.support()) {
    const Simplex& s = k.simplex(p, i);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// r_v of a nonempty p-chain: the farthest vertex of the chain from `site`.
inline double site_radius(const EmbeddedComplex& k, const Point& site,
                          const ChainVector& chain, Index p) {
  if (chain.is_zero()) throw std::invalid_argument("site_radius of an empty chain");
  double r = 0.0;
  for (Index v : chain_vertices(k, chain, p)) r = std::max(r, distance(site, k.point(v)));
  return r;
}

/// Smallest sphere through all given points, centered in their affine hull.
/// nullopt when the points are affinely dependent (no unique such sphere).
inline std::optional<SphereCertificate> circumsphere(std::span<const Point> pts) {
  if (pts.empty()) return std::nullopt;
  const Point& origin = pts[0];
  const Index dim = origin.size();
  const Index k = pts.size() - 1;
  SphereCertificate out;
  out.support.resize(pts.size());
  std::iota(out.support.begin(), out.support.end(), Index{0});
  if (k == 0) {
    out.center = origin;
    return out;
  }
  if (k > dim) return std::nullopt;
  Eigen::MatrixXd edges(dim, k);
  for (Index j = 0; j < k; ++j) {
    for (Index r = 0; r < dim; ++r) edges(r, j) = pts[j + 1][r] - origin[r];
  }
  const Eigen::MatrixXd gram = 2.0 * edges.transpose() * edges;
  Eigen::VectorXd rhs(k);
  for (Index j = 0; j < k; ++j) rhs(j) = edges.col(j).squaredNorm();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  lu.setThreshold(1e-12);
  if (static_cast<Index>(lu.rank()) < k) return std::nullopt;
  const Eigen::VectorXd offset = edges * lu.solve(rhs);
  out.center = origin;
  for (Index r = 0; r < dim; ++r) out.center[r] += offset(r);
  for (const Point& p : pts) out.radius = std::max(out.radius, distance(out.center, p));
  return out;
}

namespace detail {

struct Ball {
  Point center;
  double radius = -1.0;  // negative: empty ball
  std::vector<Index> support;
};

inline bool ball_contains(const Ball& b, const Point& p) {
  if (b.radius < 0) return false;
  return distance(b.center, p) <= b.radius + 1e-12 * std::max(1.0, b.radius);
}

inline Ball ball_from_boundary(std::span<const Point> pts, const std::vector<Index>& boundary) {
  Ball b;
  if (boundary.empty()) return b;
  std::vector<Point> chosen;
  for (Index i : boundary) chosen.push_back(pts[i]);
  if (auto s = circumsphere(chosen)) {
    b.center = s->center;
    b.radius = s->radius;
    b.support = boundary;
    return b;
  }
  // Affinely dependent boundary: the smallest ball through a subset that
  // still encloses all boundary points.
  const Index n = boundary.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> sub;
    std::vector<Index> ids;
    for (Index j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        sub.push_back(chosen[j]);
        ids.push_back(boundary[j]);
      }
    }
    auto s = circumsphere(sub);
    if (!s) continue;
    Ball cand{s->center, s->radius, ids};
    bool all = std::all_of(chosen.begin(), chosen.end(),
                           [&](const Point& p) { return ball_contains(cand, p); });
    if (all && (b.radius < 0 || cand.radius < b.radius)) b = cand;
  }
  return b;
}

// Welzl's algorithm in its iterative form; recursion only happens when a
// point joins the boundary, so the depth is at most dim + 1.
inline Ball welzl(std::span<const Point> pts, std::span<const Index> order, Index count,
                  std::vector<Index>& boundary, Index dim) {
  Ball b = ball_from_boundary(pts, boundary);
  if (boundary.size() == dim + 1) return b;
  for (Index k = 0; k < count; ++k) {
    const Index i = order[k];
    if (ball_contains(b, pts[i])) continue;
    boundary.push_back(i);
    b = welzl(pts, order, k, boundary, dim);
    boundary.pop_back();
  }
  return b;
}

}  // namespace detail

/// Exact minimum enclosing sphere. The visiting order is a fixed-seed
/// shuffle, so the result is deterministic.
inline SphereCertificate min_enclosing_sphere(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("min_enclosing_sphere of no points");
  const Index dim = pts[0].size();
  std::vector<Index> order(pts.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::mt19937_64 rng(0x5eedULL);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Index> boundary;
  detail::Ball b = detail::welzl(pts, order, order.size(), boundary, dim);
  SphereCertificate out{std::move(b.center), b.radius, std::move(b.support)};
  std::sort(out.support.begin(), out.support.end());
  return out;
}

/// r of a nonempty chain: the minimum enclosing sphere of its vertices. The
/// certificate's support holds point indices of the complex.
inline SphereCertificate exact_radius(const EmbeddedComplex& k, const ChainVector& chain,
                                      Index p) {
  if (chain.is_zero()) throw std::invalid_argument("exact_radius of an empty chain");
  const std::vector<Index> verts = chain_vertices(k, chain, p);
  std::vector<Point> pts;
  pts.reserve(verts.size());
  for (Index v : verts) pts.push_back(k.point(v));
  SphereCertificate s = min_enclosing_sphere(pts);
  for (Index& i : s.support) i = verts[i];
  return s;
}

}  // namespace cyclerad
