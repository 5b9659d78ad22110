#pragma once

// Simplexwise filtrations, persistence, and the distance-to-site ordering.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/radius.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A total order on all simplices of a complex in which every simplex comes
/// after its faces, with a non-decreasing value attached to each position.
/// Algorithms use positions; values are carried for reporting.
class Filtration {
 public:
  Filtration(EmbeddedComplex complex, std::vector<SimplexId> order, std::vector<double> values)
      : complex_(std::move(complex)), order_(std::move(order)), values_(std::move(values)) {
    if (order_.size() != complex_.size() || values_.size() != order_.size()) {
      throw InputError("filtration lists " + std::to_string(order_.size()) +
                       " simplices but the complex has " +
                       std::to_string(complex_.size()));
    }
    position_.assign(complex_.size(), kUnset);
    for (Index pos = 0; pos < order_.size(); ++pos) {
      const SimplexId id = order_[pos];
      if (static_cast<int>(id.dim) > complex_.max_dim() || id.index >= complex_.size(id.dim)) {
        throw InputError("filtration position " + std::to_string(pos) +
                         " names a simplex outside the complex");
      }
      Index& slot = position_[complex_.global_index(id)];
      if (slot != kUnset) {
        throw InputError("simplex " + to_string(complex_.simplex(id)) +
                         " appears twice in the filtration");
      }
      slot = pos;
      if (pos > 0 && !(values_[pos] >= values_[pos - 1])) {
        throw InputError("filtration values decrease at position " + std::to_string(pos));
      }
    }
    for (Index pos = 0; pos < order_.size(); ++pos) {
      const SimplexId id = order_[pos];
      for (Index f : complex_.facets(id.dim, id.index)) {
        if (position({id.dim - 1, f}) > pos) {
          throw InputError("simplex " + to_string(complex_.simplex(id)) +
                           " precedes its face " +
                           to_string(complex_.simplex(id.dim - 1, f)));
        }
      }
    }
  }

  const EmbeddedComplex& complex() const { return complex_; }
  const std::vector<SimplexId>& order() const { return order_; }
  const std::vector<double>& values() const { return values_; }
  Index size() const { return order_.size(); }

  Index position(SimplexId id) const { return position_.at(complex_.global_index(id)); }
  double value(Index pos) const { return values_.at(pos); }

  /// Simplices at positions 0..last, in filtration order.
  std::vector<SimplexId> prefix(Index last) const {
    const Index end = std::min(last + 1, order_.size());
    return {order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(end)};
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  EmbeddedComplex complex_;
  std::vector<SimplexId> order_;
  std::vector<double> values_;
  std::vector<Index> position_;
};

/// Orders all simplices by (value, dimension, canonical index). Values must
/// be monotone (a face never exceeds its coface) for the result to be valid.
inline Filtration filtration_by_values(EmbeddedComplex complex,
                                       const std::vector<std::vector<double>>& values) {
  std::vector<std::tuple<double, Index, Index>> keyed;
  keyed.reserve(complex.size());
  for (Index d = 0; static_cast<int>(d) <= complex.max_dim(); ++d) {
    if (values.size() <= d || values[d].size() != complex.size(d)) {
      throw std::invalid_argument("filtration_by_values: missing values for dimension " +
                                  std::to_string(d));
    }
    for (Index i = 0; i < complex.size(d); ++i) keyed.emplace_back(values[d][i], d, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<SimplexId> order;
  std::vector<double> vals;
  order.reserve(keyed.size());
  vals.reserve(keyed.size());
  for (const auto& [v, d, i] : keyed) {
    order.push_back({d, i});
    vals.push_back(v);
  }
  return Filtration(std::move(complex), std::move(order), std::move(vals));
}

/// Builds a filtration from an explicit sequence of (simplex, value) entries.
/// The listed simplices must already be closed under faces.
inline Filtration filtration_from_sequence(PointCloud cloud,
                                           const std::vector<std::pair<Simplex, double>>& entries) {
  std::vector<Simplex> simplices;
  simplices.reserve(entries.size());
  for (const auto& [s, v] : entries) simplices.push_back(s);
  EmbeddedComplex complex(std::move(cloud), simplices, false);
  if (complex.size() != entries.size()) {
    throw InputError("filtration is not closed under faces or repeats a simplex (" +
                     std::to_string(entries.size()) + " entries, closure has " +
                     std::to_string(complex.size()) + " simplices)");
  }
  std::vector<SimplexId> order;
  std::vector<double> values;
  for (const auto& [s, v] : entries) {
    Simplex sorted = s;
    std::sort(sorted.begin(), sorted.end());
    order.push_back({sorted.size() - 1, *complex.find(sorted)});
    values.push_back(v);
  }
  return Filtration(std::move(complex), std::move(order), std::move(values));
}

/// Vietoris-Rips filtration: every clique of diameter <= max_scale with at
/// most max_dim + 1 vertices, valued by its diameter.
inline Filtration rips_filtration(const PointCloud& cloud, double max_scale, Index max_dim) {
  if (cloud.empty()) throw InputError("rips_filtration: empty point cloud");
  if (!(max_scale > 0)) throw std::invalid_argument("rips_filtration: max_scale must be positive");
  if (max_dim < 1) throw std::invalid_argument("rips_filtration: max_dim must be at least 1");

  const Index n = cloud.size();
  std::vector<std::vector<Index>> upper(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (distance(cloud[a], cloud[b]) <= max_scale) upper[a].push_back(b);
    }
  }

  std::vector<std::pair<Simplex, double>> cliques;
  // Depth-first clique expansion over common upper neighbours.
  auto expand = [&](auto&& self, Simplex& clique, double diam,
                    const std::vector<Index>& candidates) -> void {
    cliques.emplace_back(clique, diam);
    if (clique.size() == max_dim + 1) return;
    for (Index c : candidates) {
      double d = diam;
      for (Index v : clique) d = std::max(d, distance(cloud[v], cloud[c]));
      std::vector<Index> next;
      std::set_intersection(candidates.begin(), candidates.end(), upper[c].begin(),
                            upper[c].end(), std::back_inserter(next));
      clique.push_back(c);
      self(self, clique, d, next);
      clique.pop_back();
    }
  };
  for (Index v = 0; v < n; ++v) {
    Simplex clique{v};
    expand(expand, clique, 0.0, upper[v]);
  }

  std::vector<Simplex> simplices;
  simplices.reserve(cliques.size());
  for (const auto& [s, d] : cliques) simplices.push_back(s);
  EmbeddedComplex complex(cloud, simplices);
  std::vector<std::vector<double>> values(complex.max_dim() + 1);
  for (Index d = 0; d < values.size(); ++d) values[d].resize(complex.size(d));
  for (const auto& [s, diam] : cliques) values[s.size() - 1][*complex.find(s)] = diam;
  return filtration_by_values(std::move(complex), values);
}

/// Lower-star filtration of a scalar given per point: a simplex enters at the
/// largest value among its vertices.
inline Filtration lower_star_filtration(EmbeddedComplex complex, std::span<const double> f) {
  if (f.size() != complex.cloud().size()) {
    throw InputError("lower_star_filtration: " + std::to_string(f.size()) +
                     " scalar values for " + std::to_string(complex.cloud().size()) +
                     " points");
  }
  std::vector<std::vector<double>> values(complex.max_dim() + 1);
  for (Index d = 0; d < values.size(); ++d) {
    values[d].resize(complex.size(d));
    for (Index i = 0; i < complex.size(d); ++i) {
      double v = -kInfinity;
      for (Index u : complex.simplex(d, i)) v = std::max(v, f[u]);
      values[d][i] = v;
    }
  }
  return filtration_by_values(std::move(complex), values);
}

/// The order of simplices by distance to a site: r_v(sigma) is the farthest
/// vertex of sigma from the site. Ties go to lower dimension, then canonical
/// index, which also puts every face before its cofaces.
struct SiteOrdering {
  Point site;
  std::vector<SimplexId> order;
  /// r_v of order[k].
  std::vector<double> r_values;
};

inline SiteOrdering site_ordering(const EmbeddedComplex& k, std::vector<SimplexId> simplices,
                                  const Point& site) {
  if (site.size() != k.cloud().dim()) {
    throw std::invalid_argument("site has the wrong dimension");
  }
  std::vector<double> vertex_r(k.cloud().size());
  for (Index v = 0; v < vertex_r.size(); ++v) vertex_r[v] = distance(site, k.point(v));
  std::vector<std::pair<double, SimplexId>> keyed;
  keyed.reserve(simplices.size());
  for (SimplexId id : simplices) {
    double r = 0.0;
    for (Index v : k.simplex(id)) r = std::max(r, vertex_r[v]);
    keyed.emplace_back(r, id);
  }
  std::sort(keyed.begin(), keyed.end());
  SiteOrdering out{site, {}, {}};
  out.order.reserve(keyed.size());
  out.r_values.reserve(keyed.size());
  for (const auto& [r, id] : keyed) {
    out.order.push_back(id);
    out.r_values.push_back(r);
  }
  return out;
}

inline SiteOrdering site_ordering(const EmbeddedComplex& k, const Point& site) {
  std::vector<SimplexId> all;
  all.reserve(k.size());
  for (Index d = 0; static_cast<int>(d) <= k.max_dim(); ++d) {
    for (Index i = 0; i < k.size(d); ++i) all.push_back({d, i});
  }
  return site_ordering(k, std::move(all), site);
}

inline SiteOrdering site_ordering(const SubcomplexView& view, const Point& site) {
  std::vector<SimplexId> members;
  for (Index d = 0; static_cast<int>(d) <= view.parent().max_dim(); ++d) {
    for (Index i : view.members(d)) members.push_back({d, i});
  }
  return site_ordering(view.parent(), std::move(members), site);
}

/// Reduction of the p-th and (p+1)-th boundary matrices of a face-closed set
/// of simplices, taken in a given order. Ranks are positions among the
/// simplices of one dimension in that order.
struct OrderedReduction {
  Index dim = 0;
  Index ambient = 0;                 // number of p-simplices in the complex
  std::vector<Index> cells;          // canonical p-indices by rank
  std::vector<Index> higher_cells;   // canonical (p+1)-indices by rank
  ReductionResult boundary;          // of the p-th boundary matrix
  ReductionResult higher;            // of the (p+1)-th boundary matrix
  /// For each p-rank, the (p+1)-rank whose reduced column has it as low.
  std::vector<std::optional<Index>> destroyer;

  bool is_cycle(Index rank) const { return boundary.is_zero(rank); }
  bool is_essential(Index rank) const { return is_cycle(rank) && !destroyer[rank]; }

  /// Basis-change column of a p-rank, in canonical p-indices.
  ChainVector cycle(Index rank) const { return to_canonical(boundary.basis_change.column(rank)); }

  /// Reduced (p+1)-column, in canonical p-indices.
  ChainVector reduced_boundary(Index higher_rank) const {
    return to_canonical(higher.reduced.column(higher_rank));
  }

  ChainVector to_canonical(const Column& ranks) const {
    std::vector<Index> idx;
    idx.reserve(ranks.size());
    for (Index r : ranks) idx.push_back(cells[r]);
    std::sort(idx.begin(), idx.end());
    return ChainVector(ambient, std::move(idx));
  }
};

inline OrderedReduction reduce_in_order(const EmbeddedComplex& k,
                                        std::span<const SimplexId> order, Index p) {
  constexpr Index kAbsent = static_cast<Index>(-1);
  OrderedReduction out;
  out.dim = p;
  out.ambient = k.size(p);
  std::vector<Index> lower_rank(p > 0 ? k.size(p - 1) : 0, kAbsent);
  std::vector<Index> rank(k.size(p), kAbsent);
  Index n_lower = 0;
  for (SimplexId id : order) {
    if (p > 0 && id.dim == p - 1) lower_rank[id.index] = n_lower++;
    if (id.dim == p) {
      rank[id.index] = out.cells.size();
      out.cells.push_back(id.index);
    }
    if (id.dim == p + 1) out.higher_cells.push_back(id.index);
  }
  auto faces_in = [&](Index dim, Index i, const std::vector<Index>& ranks) {
    Column col;
    for (Index f : k.facets(dim, i)) {
      if (ranks[f] == kAbsent) {
        throw std::invalid_argument("reduce_in_order: simplex " +
                                    to_string(k.simplex(dim, i)) +
                                    " appears without its faces");
      }
      col.push_back(ranks[f]);
    }
    std::sort(col.begin(), col.end());
    return col;
  };

  std::vector<Column> cols;
  cols.reserve(out.cells.size());
  for (Index i : out.cells) cols.push_back(p > 0 ? faces_in(p, i, lower_rank) : Column{});
  out.boundary = standard_reduction(Z2Matrix(n_lower, std::move(cols)));

  std::vector<Column> hcols;
  hcols.reserve(out.higher_cells.size());
  for (Index i : out.higher_cells) hcols.push_back(faces_in(p + 1, i, rank));
  out.higher = standard_reduction(Z2Matrix(out.cells.size(), std::move(hcols)));

  out.destroyer.assign(out.cells.size(), std::nullopt);
  for (const auto& [row, col] : out.higher.pairs) out.destroyer[row] = col;
  return out;
}

/// A bar [birth, death) of a simplexwise filtration, in filtration positions.
struct Interval {
  Index dim = 0;
  Index birth = 0;
  std::optional<Index> death;
  SimplexId creator;
  std::optional<SimplexId> destroyer;
  double birth_value = 0.0;
  double death_value = kInfinity;

  bool is_essential() const { return !death.has_value(); }
  double persistence() const { return death_value - birth_value; }
};

struct Barcode {
  Index dim = 0;
  std::vector<Interval> intervals;  // by birth

  /// Number of intervals alive at `position`.
  Index alive_at(Index position) const {
    Index n = 0;
    for (const Interval& bar : intervals) {
      if (bar.birth <= position && (!bar.death || position < *bar.death)) ++n;
    }
    return n;
  }

  Index essential_count() const {
    return static_cast<Index>(std::count_if(intervals.begin(), intervals.end(),
                                            [](const Interval& b) { return b.is_essential(); }));
  }
};

struct PersistenceResult {
  Barcode barcode;
  /// Essential p-cycles (canonical p-indices), ordered by birth.
  Z2Matrix essential_cycles;
  /// One representative per interval, aligned with barcode.intervals.
  std::vector<ChainVector> representatives;
};

/// Barcode of H_p along the filtration. Finite bars are represented by the
/// reduced boundary of their destroyer; essential bars by the basis-change
/// column of their creator.
inline PersistenceResult compute_persistence(const Filtration& f, Index p) {
  const EmbeddedComplex& k = f.complex();
  const OrderedReduction red = reduce_in_order(k, f.order(), p);
  PersistenceResult out;
  out.barcode.dim = p;
  out.essential_cycles = Z2Matrix(k.size(p));
  for (Index r = 0; r < red.cells.size(); ++r) {
    if (!red.is_cycle(r)) continue;
    Interval bar;
    bar.dim = p;
    bar.creator = {p, red.cells[r]};
    bar.birth = f.position(bar.creator);
    bar.birth_value = f.value(bar.birth);
    if (const auto q = red.destroyer[r]) {
      bar.destroyer = SimplexId{p + 1, red.higher_cells[*q]};
      bar.death = f.position(*bar.destroyer);
      bar.death_value = f.value(*bar.death);
      out.representatives.push_back(red.reduced_boundary(*q));
    } else {
      out.representatives.push_back(red.cycle(r));
      out.essential_cycles.push_back(out.representatives.back());
    }
    out.barcode.intervals.push_back(bar);
  }
  return out;
}

/// Matrix whose columns are the boundaries of the (p+1)-simplices at
/// filtration positions <= last, in canonical p-indices.
inline Z2Matrix prefix_boundaries(const Filtration& f, Index p, Index last) {
  const EmbeddedComplex& k = f.complex();
  Z2Matrix out(k.size(p));
  for (Index i = 0; i < k.size(p + 1); ++i) {
    if (f.position({p + 1, i}) <= last) out.push_back(k.facets(p + 1, i));
  }
  return out;
}

/// True iff `chain` represents the bar: a p-cycle of K_b containing the
/// creator which, for a finite bar, is not a boundary in K_{d-1} but is one
/// in K_d.
inline bool represents(const Filtration& f, const Interval& bar, const ChainVector& chain) {
  const EmbeddedComplex& k = f.complex();
  const Index p = bar.dim;
  if (chain.ambient_size() != k.size(p) || chain.is_zero()) return false;
  if (!is_cycle(k, chain, p)) return false;
  for (Index i : chain.support()) {
    if (f.position({p, i}) > bar.birth) return false;
  }
  if (!chain.contains(bar.creator.index)) return false;
  if (!bar.death) return true;
  if (ReducedSpan(prefix_boundaries(f, p, *bar.death - 1)).contains(chain)) return false;
  return ReducedSpan(prefix_boundaries(f, p, *bar.death)).contains(chain);
}

/// Essential p-cycles of the filtration induced by a site ordering, sorted by
/// their last simplex.
struct EssentialCycles {
  std::vector<ChainVector> cycles;
  std::vector<SimplexId> kappa;
  std::vector<double> r_values;  // r_v of each cycle, equal to r_v of its kappa
};

inline EssentialCycles essential_cycles(const EmbeddedComplex& k, const SiteOrdering& ordering,
                                        Index p) {
  const OrderedReduction red = reduce_in_order(k, ordering.order, p);
  EssentialCycles out;
  for (Index r = 0; r < red.cells.size(); ++r) {
    if (!red.is_essential(r)) continue;
    out.cycles.push_back(red.cycle(r));
    out.kappa.push_back({p, red.cells[r]});
    out.r_values.push_back(simplex_site_radius(k, ordering.site, p, red.cells[r]));
  }
  return out;
}

}  // namespace cyclerad
