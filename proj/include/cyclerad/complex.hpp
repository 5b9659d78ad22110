#pragma once

// Embedded simplicial complexes.
//
// Simplices of each dimension are kept in lexicographic order of their
// (sorted) vertex tuples. That canonical order indexes every chain and
// boundary matrix in the library, so moving chains between a subcomplex and
// its parent is pure re-indexing.

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclerad/errors.hpp"
#include "cyclerad/geometry.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad {

/// Strictly increasing vertex (point) indices.
using Simplex = std::vector<Index>;

struct SimplexId {
  Index dim = 0;
  Index index = 0;
  auto operator<=>(const SimplexId&) const = default;
};

inline std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (Index k = 0; k < s.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(s[k]);
  }
  return out + "]";
}

class EmbeddedComplex {
 public:
  EmbeddedComplex() = default;

  /// Builds the face closure of `simplices`. Vertex indices refer to points
  /// of `cloud`; when `all_points_as_vertices` is set every point becomes a
  /// vertex even if no listed simplex uses it.
  EmbeddedComplex(PointCloud cloud, const std::vector<Simplex>& simplices,
                  bool all_points_as_vertices = true)
      : cloud_(std::move(cloud)) {
    std::vector<std::set<Simplex>> closure;
    auto insert_faces = [&](const Simplex& s) {
      const Index k = s.size();
      if (closure.size() < k) closure.resize(k);
      // Every nonempty subset of the vertex tuple.
      for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        Simplex face;
        for (Index b = 0; b < k; ++b) {
          if (mask & (1ul << b)) face.push_back(s[b]);
        }
        closure[face.size() - 1].insert(std::move(face));
      }
    };
    for (const Simplex& raw : simplices) {
      if (raw.empty()) throw InputError("empty simplex");
      if (raw.size() > 8 * sizeof(unsigned long) - 1) {
        throw InputError("simplex dimension too large");
      }
      Simplex s = raw;
      std::sort(s.begin(), s.end());
      for (Index k = 0; k < s.size(); ++k) {
        if (s[k] >= cloud_.size()) {
          throw InputError("simplex " + to_string(raw) + " references vertex " +
                           std::to_string(s[k]) + " but only " +
                           std::to_string(cloud_.size()) + " points exist");
        }
        if (k > 0 && s[k] == s[k - 1]) {
          throw InputError("simplex " + to_string(raw) + " repeats a vertex");
        }
      }
      insert_faces(s);
    }
    if (all_points_as_vertices) {
      if (closure.empty()) closure.resize(1);
      for (Index v = 0; v < cloud_.size(); ++v) closure[0].insert(Simplex{v});
    }
    simplices_.reserve(closure.size());
    for (auto& level : closure) simplices_.emplace_back(level.begin(), level.end());
    while (!simplices_.empty() && simplices_.back().empty()) simplices_.pop_back();

    offsets_.assign(simplices_.size() + 1, 0);
    for (Index d = 0; d < simplices_.size(); ++d) {
      offsets_[d + 1] = offsets_[d] + simplices_[d].size();
    }

    facets_.resize(simplices_.size());
    for (Index d = 1; d < simplices_.size(); ++d) {
      facets_[d].resize(simplices_[d].size());
      for (Index i = 0; i < simplices_[d].size(); ++i) {
        const Simplex& s = simplices_[d][i];
        Column& faces = facets_[d][i];
        for (Index drop = 0; drop <= d; ++drop) {
          Simplex face;
          face.reserve(d);
          for (Index k = 0; k <= d; ++k) {
            if (k != drop) face.push_back(s[k]);
          }
          faces.push_back(*find(face));
        }
        std::sort(faces.begin(), faces.end());
      }
    }
  }

  const PointCloud& cloud() const { return cloud_; }
  const Point& point(Index vertex) const { return cloud_[vertex]; }

  /// Highest simplex dimension, or -1 for the empty complex.
  int max_dim() const { return static_cast<int>(simplices_.size()) - 1; }

  Index size(Index dim) const {
    return dim < simplices_.size() ? simplices_[dim].size() : 0;
  }
  Index size() const { return offsets_.empty() ? 0 : offsets_.back(); }

  const std::vector<Simplex>& simplices(Index dim) const {
    static const std::vector<Simplex> none;
    return dim < simplices_.size() ? simplices_[dim] : none;
  }

  const Simplex& simplex(Index dim, Index i) const { return simplices_.at(dim).at(i); }
  const Simplex& simplex(SimplexId id) const { return simplex(id.dim, id.index); }

  /// Position of `s` (sorted vertex tuple) within its dimension.
  std::optional<Index> find(const Simplex& s) const {
    if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
    const auto& level = simplices_[s.size() - 1];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - level.begin());
  }

  /// Indices of the codimension-one faces, ascending.
  const Column& facets(Index dim, Index i) const {
    static const Column none;
    if (dim == 0) return none;
    return facets_.at(dim).at(i);
  }

  Index global_index(SimplexId id) const { return offsets_.at(id.dim) + id.index; }

  SimplexId simplex_id(Index global) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
    const Index dim = static_cast<Index>(it - offsets_.begin()) - 1;
    return {dim, global - offsets_[dim]};
  }

  /// Point indices of the 0-simplices, in canonical order.
  std::vector<Index> vertices() const {
    std::vector<Index> out;
    for (const Simplex& s : simplices(0)) out.push_back(s[0]);
    return out;
  }

 private:
  PointCloud cloud_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<Index> offsets_;
  std::vector<std::vector<Column>> facets_;
};

/// The p-th boundary matrix: rows are (p-1)-simplices, columns p-simplices.
/// Defined for 1 <= p <= max_dim + 1 (the top one has no columns).
inline Z2Matrix boundary_matrix(const EmbeddedComplex& k, Index p) {
  if (p < 1 || static_cast<int>(p) > k.max_dim() + 1) {
    throw std::out_of_range("boundary_matrix: dimension " + std::to_string(p) +
                            " out of range for a complex of dimension " +
                            std::to_string(k.max_dim()));
  }
  std::vector<Column> cols;
  cols.reserve(k.size(p));
  for (Index i = 0; i < k.size(p); ++i) cols.push_back(k.facets(p, i));
  return Z2Matrix(k.size(p - 1), std::move(cols));
}

/// Boundary of a p-chain as a (p-1)-chain. The boundary of a 0-chain is the
/// empty chain of size zero.
inline ChainVector boundary(const EmbeddedComplex& k, const ChainVector& chain, Index p) {
  if (chain.ambient_size() != k.size(p)) {
    throw std::invalid_argument("boundary: chain does not match the complex");
  }
  if (p == 0) return ChainVector(0);
  std::vector<Index> faces;
  for (Index i : chain.support()) {
    const Column& f = k.facets(p, i);
    faces.insert(faces.end(), f.begin(), f.end());
  }
  return ChainVector::from_indices(k.size(p - 1), std::move(faces));
}

inline bool is_cycle(const EmbeddedComplex& k, const ChainVector& chain, Index p) {
  return boundary(k, chain, p).is_zero();
}

/// A face-closed subset of a parent complex. Holds a reference to the
/// parent, which must outlive the view.
class SubcomplexView {
 public:
  /// `members[d][i]` flags simplex (d, i) of the parent.
  SubcomplexView(const EmbeddedComplex& parent, std::vector<std::vector<bool>> members)
      : parent_(&parent), members_(std::move(members)) {
    members_.resize(std::max<Index>(members_.size(), parent.max_dim() + 1));
    local_.resize(members_.size());
    for (Index d = 0; d < members_.size(); ++d) {
      members_[d].resize(parent.size(d), false);
      local_[d].assign(parent.size(d), kAbsent);
      for (Index i = 0; i < parent.size(d); ++i) {
        if (!members_[d][i]) continue;
        for (Index f : parent.facets(d, i)) {
          if (!members_[d - 1][f]) {
            throw std::invalid_argument("subcomplex is not closed under faces: " +
                                        to_string(parent.simplex(d, i)));
          }
        }
        local_[d][i] = ids_.size() > d ? ids_[d].size() : 0;
        if (ids_.size() <= d) ids_.resize(d + 1);
        ids_[d].push_back(i);
      }
    }
    ids_.resize(members_.size());
  }

  const EmbeddedComplex& parent() const { return *parent_; }

  bool contains(Index dim, Index i) const {
    return dim < members_.size() && i < members_[dim].size() && members_[dim][i];
  }
  bool contains(SimplexId id) const { return contains(id.dim, id.index); }

  Index size(Index dim) const { return dim < ids_.size() ? ids_[dim].size() : 0; }
  Index size() const {
    Index n = 0;
    for (const auto& level : ids_) n += level.size();
    return n;
  }

  /// Parent indices of the member simplices of `dim`, ascending.
  const std::vector<Index>& members(Index dim) const {
    static const std::vector<Index> none;
    return dim < ids_.size() ? ids_[dim] : none;
  }

  std::optional<Index> local_index(Index dim, Index parent_index) const {
    if (!contains(dim, parent_index)) return std::nullopt;
    return local_[dim][parent_index];
  }

  /// Zero-pads a chain of the view into the parent's chain basis.
  ChainVector extend(const ChainVector& local, Index dim) const {
    if (local.ambient_size() != size(dim)) {
      throw std::invalid_argument("extend: chain size does not match the view");
    }
    Column support;
    support.reserve(local.weight());
    for (Index i : local.support()) support.push_back(ids_[dim][i]);
    return ChainVector(parent_->size(dim), std::move(support));
  }

  /// Restricts a parent chain to the view; its support must lie in the view.
  ChainVector contract(const ChainVector& global, Index dim) const {
    if (global.ambient_size() != parent_->size(dim)) {
      throw std::invalid_argument("contract: chain size does not match the parent");
    }
    Column support;
    support.reserve(global.weight());
    for (Index i : global.support()) {
      if (!contains(dim, i)) {
        throw std::invalid_argument("contract: simplex " +
                                    to_string(parent_->simplex(dim, i)) +
                                    " is not in the subcomplex");
      }
      support.push_back(local_[dim][i]);
    }
    return ChainVector(size(dim), std::move(support));
  }

  /// Boundary matrix of the view in its own (local) indices.
  Z2Matrix boundary_matrix(Index p) const {
    if (p < 1) throw std::out_of_range("boundary_matrix: p must be at least 1");
    std::vector<Column> cols;
    cols.reserve(size(p));
    for (Index i : members(p)) {
      Column col;
      for (Index f : parent_->facets(p, i)) col.push_back(local_[p - 1][f]);
      cols.push_back(std::move(col));
    }
    return Z2Matrix(size(p - 1), std::move(cols));
  }

 private:
  static constexpr Index kAbsent = static_cast<Index>(-1);

  const EmbeddedComplex* parent_;
  std::vector<std::vector<bool>> members_;
  std::vector<std::vector<Index>> local_;
  std::vector<std::vector<Index>> ids_;
};

/// Largest subcomplex whose vertices all lie in `vertices` (point indices).
inline SubcomplexView induced_subcomplex(const EmbeddedComplex& k,
                                         std::span<const Index> vertices) {
  std::vector<bool> allowed(k.cloud().size(), false);
  for (Index v : vertices) {
    if (v >= allowed.size()) throw std::out_of_range("induced_subcomplex: bad vertex");
    allowed[v] = true;
  }
  std::vector<std::vector<bool>> members(k.max_dim() + 1);
  for (Index d = 0; d < members.size(); ++d) {
    members[d].resize(k.size(d));
    for (Index i = 0; i < k.size(d); ++i) {
      const Simplex& s = k.simplex(d, i);
      members[d][i] = std::all_of(s.begin(), s.end(), [&](Index v) { return allowed[v]; });
    }
  }
  return SubcomplexView(k, std::move(members));
}

/// Subcomplex induced by the closed ball of `radius` about `center`. Points
/// within the cloud tolerance of the sphere count as enclosed.
inline SubcomplexView ball_induced_subcomplex(const EmbeddedComplex& k,
                                              const Point& center, double radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  if (center.size() != k.cloud().dim()) {
    throw std::invalid_argument("ball center has the wrong dimension");
  }
  const double limit = radius + k.cloud().tolerance();
  std::vector<Index> inside;
  for (Index v : k.vertices()) {
    if (distance(k.point(v), center) <= limit) inside.push_back(v);
  }
  return induced_subcomplex(k, inside);
}

}  // namespace cyclerad
