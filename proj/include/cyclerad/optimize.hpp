#pragma once

// Cycle localization under the site-restricted radius r_P: for every
// candidate site v the simplices are ordered by distance to v, and the
// essential cycles of that ordering are combined to reach the optimum for v.
// The best site wins.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/parallel.hpp"
#include "cyclerad/radius.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad {

enum class Problem { localize, basis, persistent };

inline const char* to_string(Problem p) {
  switch (p) {
    case Problem::localize: return "localize";
    case Problem::basis: return "basis";
    case Problem::persistent: return "persistent";
  }
  return "unknown";
}

struct OptimalCycleResult {
  Problem problem = Problem::localize;
  Index dim = 1;
  /// p-chain in the complex's canonical p-indices; empty for a trivial class.
  ChainVector cycle;
  /// Point index of the site, when the site is a vertex.
  std::optional<Index> site;
  Point site_point;
  /// Farthest cycle vertex from the site (0 for the empty cycle).
  double r_v = 0.0;
  /// Radius of the minimum enclosing sphere of the cycle's vertices.
  double r_exact = 0.0;
  SphereCertificate certificate;
  /// Persistent problems: the bar this cycle represents.
  std::optional<Interval> interval;
  /// Persistent problems: how many reordered essential cycles the optimum
  /// needed besides the creator's cycle.
  std::optional<Index> prefix_length;
  std::optional<Index> edges_before;
  std::optional<Index> edges_after;
};

struct HomologyBasisResult {
  std::vector<OptimalCycleResult> cycles;
  double total_weight = 0.0;
};

struct SiteOptions {
  /// Point indices of candidate sites; empty means every vertex.
  std::vector<Index> sites;
  unsigned threads = 1;
};

/// A deterministic sample of ceil(fraction * |V|) vertices, ascending.
inline std::vector<Index> subsample_sites(const EmbeddedComplex& k, double fraction,
                                          unsigned long seed = 0) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("site fraction must lie in (0, 1]");
  }
  std::vector<Index> verts = k.vertices();
  const auto keep = static_cast<Index>(std::ceil(fraction * static_cast<double>(verts.size())));
  std::mt19937_64 rng(seed);
  std::shuffle(verts.begin(), verts.end(), rng);
  verts.resize(std::min(keep, verts.size()));
  std::sort(verts.begin(), verts.end());
  return verts;
}

namespace detail {

inline std::vector<Index> resolve_sites(const EmbeddedComplex& k, const SiteOptions& opts) {
  std::vector<Index> sites = opts.sites.empty() ? k.vertices() : opts.sites;
  for (Index s : sites) {
    if (s >= k.cloud().size()) {
      throw std::out_of_range("site " + std::to_string(s) + " is not a point of the complex");
    }
  }
  return sites;
}

/// Columns are boundaries of all (p+1)-simplices, rows canonical p-indices.
inline Z2Matrix cycle_boundaries(const EmbeddedComplex& k, Index p) {
  Z2Matrix b(k.size(p));
  for (Index i = 0; i < k.size(p + 1); ++i) b.push_back(k.facets(p + 1, i));
  return b;
}

inline void fill_geometry(OptimalCycleResult& r, const EmbeddedComplex& k) {
  if (r.cycle.is_zero()) {
    r.r_v = 0.0;
    r.r_exact = 0.0;
    r.certificate = SphereCertificate{r.site_point, 0.0, {}};
    return;
  }
  r.r_v = site_radius(k, r.site_point, r.cycle, r.dim);
  r.certificate = exact_radius(k, r.cycle, r.dim);
  r.r_exact = r.certificate.radius;
}

inline void require_cycle(const EmbeddedComplex& k, const ChainVector& zeta, Index p) {
  if (p < 1) throw std::invalid_argument("homology dimension must be at least 1");
  if (zeta.ambient_size() != k.size(p)) {
    throw InputError("input chain has " + std::to_string(zeta.ambient_size()) +
                     " entries but the complex has " + std::to_string(k.size(p)) +
                     " simplices of dimension " + std::to_string(p));
  }
  if (!is_cycle(k, zeta, p)) throw InputError("input chain is not a cycle");
}

/// Index-ordered minimum over per-site candidates; ties keep the earliest.
inline OptimalCycleResult best_of(std::vector<std::optional<OptimalCycleResult>>& candidates) {
  std::optional<Index> best;
  for (Index i = 0; i < candidates.size(); ++i) {
    if (!candidates[i]) continue;
    if (!best || candidates[i]->r_v < candidates[*best]->r_v) best = i;
  }
  if (!best) throw std::invalid_argument("no candidate sites");
  return std::move(*candidates[*best]);
}

}  // namespace detail

/// Minimizes r_v over the homology class of `zeta` for a fixed site.
inline OptimalCycleResult optimal_hom_cycle_for_site(const EmbeddedComplex& k,
                                                     const ChainVector& zeta, Index p,
                                                     const Point& site) {
  detail::require_cycle(k, zeta, p);
  const EssentialCycles ess = essential_cycles(k, site_ordering(k, site), p);
  const Index m = ess.cycles.size();
  Z2Matrix system(k.size(p));
  for (const ChainVector& c : ess.cycles) system.push_back(c);
  system = hstack(system, detail::cycle_boundaries(k, p));
  const auto solution = solve_by_reduction(system, zeta);
  if (!solution) {
    throw std::logic_error("essential cycles and boundaries failed to span the cycle space");
  }
  OptimalCycleResult out;
  out.problem = Problem::localize;
  out.dim = p;
  out.site_point = site;
  out.cycle = ChainVector(k.size(p));
  for (Index j : *solution) {
    if (j < m) out.cycle += ess.cycles[j];
  }
  detail::fill_geometry(out, k);
  return out;
}

inline OptimalCycleResult optimal_hom_cycle_for_site(const EmbeddedComplex& k,
                                                     const ChainVector& zeta, Index p,
                                                     Index site_vertex) {
  OptimalCycleResult out = optimal_hom_cycle_for_site(k, zeta, p, k.point(site_vertex));
  out.site = site_vertex;
  return out;
}

/// Optimal homologous cycle with respect to r_P over the candidate sites.
inline OptimalCycleResult opt_homologous_cycle(const EmbeddedComplex& k, const ChainVector& zeta,
                                               Index p, const SiteOptions& opts = {}) {
  detail::require_cycle(k, zeta, p);
  const std::vector<Index> sites = detail::resolve_sites(k, opts);
  std::vector<std::optional<OptimalCycleResult>> candidates(sites.size());
  parallel_for(sites.size(), opts.threads, [&](Index i) {
    candidates[i] = optimal_hom_cycle_for_site(k, zeta, p, sites[i]);
  });
  return detail::best_of(candidates);
}

/// Minimum p-homology basis with respect to r_P. Essential cycles from every
/// site's ordering are pooled, sorted by r_v, and admitted greedily while
/// their classes stay independent.
inline HomologyBasisResult opt_homology_basis(const EmbeddedComplex& k, Index p,
                                              const SiteOptions& opts = {}) {
  if (p < 1) throw std::invalid_argument("opt_homology_basis: p must be at least 1");
  const std::vector<Index> sites = detail::resolve_sites(k, opts);
  std::vector<EssentialCycles> per_site(sites.size());
  parallel_for(sites.size(), opts.threads, [&](Index i) {
    per_site[i] = essential_cycles(k, site_ordering(k, k.point(sites[i])), p);
  });

  // (r_v, site position, rank within the site)
  std::vector<std::tuple<double, Index, Index>> pool;
  for (Index s = 0; s < per_site.size(); ++s) {
    for (Index r = 0; r < per_site[s].cycles.size(); ++r) {
      pool.emplace_back(per_site[s].r_values[r], s, r);
    }
  }
  std::sort(pool.begin(), pool.end());

  HomologyBasisResult out;
  if (per_site.empty()) return out;
  const Index betti = per_site.front().cycles.size();
  ReducedSpan admitted(detail::cycle_boundaries(k, p));
  for (const auto& [r, s, rank] : pool) {
    if (out.cycles.size() == betti) break;
    const ChainVector& cycle = per_site[s].cycles[rank];
    if (!admitted.insert(cycle)) continue;
    OptimalCycleResult res;
    res.problem = Problem::basis;
    res.dim = p;
    res.cycle = cycle;
    res.site = sites[s];
    res.site_point = k.point(sites[s]);
    detail::fill_geometry(res, k);
    out.total_weight += res.r_v;
    out.cycles.push_back(std::move(res));
  }
  return out;
}

/// The per-site linear system for one bar. `anchor` is the first essential
/// cycle of K_b (ordered by the site) containing the creator; `rest` are the
/// other essential cycles with the creator eliminated; `dying` spans the
/// boundaries present at the death index.
struct PersistentSiteSystem {
  ChainVector anchor;
  std::vector<ChainVector> rest;
  Z2Matrix dying;

  /// Solves [dying | rest[0..count)] x = anchor.
  std::optional<std::vector<Index>> solve(Index count) const {
    Z2Matrix system = dying;
    for (Index j = 0; j < count; ++j) system.push_back(rest.at(j));
    return solve_by_reduction(system, anchor);
  }
};

inline PersistentSiteSystem persistent_site_system(const Filtration& f, const Interval& bar,
                                                   const Point& site) {
  const EmbeddedComplex& k = f.complex();
  const Index p = bar.dim;
  const EssentialCycles ess = essential_cycles(k, site_ordering(k, f.prefix(bar.birth), site), p);
  const Index creator = bar.creator.index;
  const auto first = std::find_if(ess.cycles.begin(), ess.cycles.end(),
                                  [&](const ChainVector& c) { return c.contains(creator); });
  if (first == ess.cycles.end()) {
    throw std::logic_error("no essential cycle of the prefix contains the creator simplex");
  }
  PersistentSiteSystem sys;
  sys.anchor = *first;
  sys.rest.reserve(ess.cycles.size());
  for (auto it = ess.cycles.begin(); it != ess.cycles.end(); ++it) {
    if (it == first) continue;
    sys.rest.push_back(it->contains(creator) ? *it + sys.anchor : *it);
  }
  sys.dying = bar.death ? prefix_boundaries(f, p, *bar.death) : Z2Matrix(k.size(p));
  return sys;
}

/// Minimizes r_v over the representatives of one bar for a fixed site.
inline OptimalCycleResult opt_pers_cycle_site(const Filtration& f, const Interval& bar,
                                              const Point& site) {
  const PersistentSiteSystem sys = persistent_site_system(f, bar, site);
  OptimalCycleResult out;
  out.problem = Problem::persistent;
  out.dim = bar.dim;
  out.site_point = site;
  out.interval = bar;
  out.cycle = sys.anchor;
  out.prefix_length = 0;

  if (bar.death) {
    if (!sys.solve(sys.rest.size())) {
      throw std::logic_error("creator cycle never becomes a boundary at the death index");
    }
    // Solvability is monotone in the prefix length.
    Index lo = 0;
    Index hi = sys.rest.size();
    while (lo < hi) {
      const Index mid = lo + (hi - lo) / 2;
      if (sys.solve(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const auto solution = sys.solve(lo);
    for (Index j : *solution) {
      if (j >= sys.dying.n_cols()) out.cycle += sys.rest[j - sys.dying.n_cols()];
    }
    out.prefix_length = lo;
  }
  detail::fill_geometry(out, f.complex());
  return out;
}

inline OptimalCycleResult opt_pers_cycle_site(const Filtration& f, const Interval& bar,
                                              Index site_vertex) {
  OptimalCycleResult out = opt_pers_cycle_site(f, bar, f.complex().point(site_vertex));
  out.site = site_vertex;
  return out;
}

/// Optimal representative of a bar with respect to r_P.
inline OptimalCycleResult opt_pers_hom_rep(const Filtration& f, const Interval& bar,
                                           const SiteOptions& opts = {}) {
  const std::vector<Index> sites = detail::resolve_sites(f.complex(), opts);
  std::vector<std::optional<OptimalCycleResult>> candidates(sites.size());
  parallel_for(sites.size(), opts.threads, [&](Index i) {
    candidates[i] = opt_pers_cycle_site(f, bar, sites[i]);
  });
  return detail::best_of(candidates);
}

/// One optimal representative per bar of the p-th barcode; together they
/// form a minimum persistent basis.
inline std::vector<OptimalCycleResult> opt_persistent_basis(const Filtration& f, Index p,
                                                            const SiteOptions& opts = {}) {
  const PersistenceResult pers = compute_persistence(f, p);
  std::vector<OptimalCycleResult> out;
  out.reserve(pers.barcode.intervals.size());
  for (const Interval& bar : pers.barcode.intervals) out.push_back(opt_pers_hom_rep(f, bar, opts));
  return out;
}

}  // namespace cyclerad
