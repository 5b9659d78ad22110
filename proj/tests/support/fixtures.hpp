#pragma once

// Small hand-built complexes with known answers.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/geometry.hpp"

namespace testing {

using cyclerad::ChainVector;
using cyclerad::EmbeddedComplex;
using cyclerad::Index;
using cyclerad::Point;
using cyclerad::PointCloud;
using cyclerad::Simplex;

inline EmbeddedComplex make_complex(std::vector<Point> pts, std::vector<Simplex> simplices) {
  const Index dim = pts.front().size();
  return EmbeddedComplex(PointCloud(dim, std::move(pts)), std::move(simplices));
}

/// Chain from a list of p-simplices given by vertices.
inline ChainVector chain_of(const EmbeddedComplex& k, Index p, const std::vector<Simplex>& simplices) {
  std::vector<Index> ids;
  for (const Simplex& s : simplices) ids.push_back(k.find(s).value());
  return ChainVector::from_indices(k.size(p), ids);
}

/// Edge chain of the closed vertex loop v0 v1 .. v_{n-1} v0.
inline ChainVector loop(const EmbeddedComplex& k, const std::vector<Index>& verts) {
  std::vector<Simplex> edges;
  for (Index i = 0; i < verts.size(); ++i) {
    Index a = verts[i];
    Index b = verts[(i + 1) % verts.size()];
    edges.push_back(a < b ? Simplex{a, b} : Simplex{b, a});
  }
  return chain_of(k, 1, edges);
}

inline std::vector<Simplex> loop_edges(const std::vector<Index>& verts) {
  std::vector<Simplex> out;
  for (Index i = 0; i < verts.size(); ++i) {
    Index a = verts[i];
    Index b = verts[(i + 1) % verts.size()];
    out.push_back(a < b ? Simplex{a, b} : Simplex{b, a});
  }
  return out;
}

inline EmbeddedComplex hollow_triangle() {
  return make_complex({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {0, 2}});
}

inline EmbeddedComplex filled_triangle() {
  return make_complex({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
}

inline EmbeddedComplex unit_square() {
  return make_complex({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, loop_edges({0, 1, 2, 3}));
}

/// Square annulus: outer side 4 (vertices 0-3), inner side 1 (vertices 4-7),
/// eight triangles between them.
inline EmbeddedComplex annulus() {
  std::vector<Point> pts{{-2, -2}, {2, -2}, {2, 2}, {-2, 2},
                         {-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
  std::vector<Simplex> tris;
  for (Index i = 0; i < 4; ++i) {
    const Index j = (i + 1) % 4;
    tris.push_back({i, j, j + 4});
    tris.push_back({i, j + 4, i + 4});
  }
  return make_complex(std::move(pts), std::move(tris));
}

/// Equilateral triangles of side 1 (0,1,2) and side 2 (0,3,4) sharing vertex 0.
inline EmbeddedComplex figure_eight() {
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, h}, {-2, 0}, {-1, -2 * h}};
  std::vector<Simplex> edges = loop_edges({0, 1, 2});
  for (const auto& e : loop_edges({0, 3, 4})) edges.push_back(e);
  return make_complex(std::move(pts), std::move(edges));
}

/// Regular n-gon of circumradius 1 around a center vertex (index n) joined
/// to vertex 0 by one spoke. The optimal sphere is centered at vertex n.
inline EmbeddedComplex polygon_with_center(Index n) {
  std::vector<Point> pts;
  for (Index i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back({std::cos(a), std::sin(a)});
  }
  pts.push_back({0.0, 0.0});
  std::vector<Index> ring(n);
  for (Index i = 0; i < n; ++i) ring[i] = i;
  std::vector<Simplex> edges = loop_edges(ring);
  edges.push_back({0, n});
  return make_complex(std::move(pts), std::move(edges));
}

/// Unit square 0-3 with a filled spike triangle (0, 1, 4) below edge 01.
inline EmbeddedComplex spiked_square() {
  std::vector<Simplex> simplices = loop_edges({0, 1, 2, 3});
  simplices.push_back({0, 1, 4});
  return make_complex({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, -0.4}}, std::move(simplices));
}

/// Regular hexagon with the long chord 0-3 present but no triangles.
inline EmbeddedComplex hexagon_with_chord() {
  std::vector<Point> pts;
  for (Index i = 0; i < 6; ++i) {
    const double a = std::numbers::pi * static_cast<double>(i) / 3.0;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  std::vector<Simplex> edges = loop_edges({0, 1, 2, 3, 4, 5});
  edges.push_back({0, 3});
  return make_complex(std::move(pts), std::move(edges));
}

/// Boundary of a tetrahedron: a 2-sphere.
inline EmbeddedComplex hollow_tetrahedron() {
  return make_complex({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Two nested triangles: the inner loop enters at 1, the outer at 2, the
/// annulus between them at 3 and the inner face at 4. The 1-barcode with
/// positive length is {[2,3), [1,4)}.
inline cyclerad::Filtration nested_triangles_filtration() {
  const double h = std::sqrt(3.0) / 2.0;
  PointCloud cloud(2, {{0, 0}, {1, 0}, {0.5, h}, {-1, -0.6}, {2, -0.6}, {0.5, 2}});
  std::vector<std::pair<Simplex, double>> seq;
  for (Index v = 0; v < 3; ++v) seq.push_back({{v}, 1});
  for (const auto& e : loop_edges({0, 1, 2})) seq.push_back({e, 1});
  for (Index v = 3; v < 6; ++v) seq.push_back({{v}, 2});
  for (const auto& e : loop_edges({3, 4, 5})) seq.push_back({e, 2});
  for (Index i = 0; i < 3; ++i) seq.push_back({{i, i + 3}, 3});
  for (Index i = 0; i < 3; ++i) {
    const Index j = (i + 1) % 3;
    seq.push_back({i < j + 3 ? Simplex{i, j + 3} : Simplex{j + 3, i}, 3});
  }
  for (Index i = 0; i < 3; ++i) {
    const Index j = (i + 1) % 3;
    Simplex a{i, j, j + 3};
    Simplex b{i, i + 3, j + 3};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    seq.push_back({a, 3});
    seq.push_back({b, 3});
  }
  seq.push_back({{0, 1, 2}, 4});
  return cyclerad::filtration_from_sequence(std::move(cloud), seq);
}

}  // namespace testing
