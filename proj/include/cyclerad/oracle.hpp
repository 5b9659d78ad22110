#pragma once

// Exhaustive reference solvers for small inputs. Everything here enumerates
// cycles, spheres or bases directly, so it shares no search logic with the
// optimizers; only the Z2 linear algebra is common.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/radius.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad::oracle {

struct OracleBudget {
  Index max_vertices = 12;
  Index max_simplices = 400;
  /// Largest dimension of a cycle or boundary space that gets enumerated.
  Index max_cycle_space_dim = 20;
};

enum class Measure { exact, site_restricted };

inline void check_budget(const EmbeddedComplex& k, const OracleBudget& budget) {
  if (k.vertices().size() > budget.max_vertices) {
    throw BudgetExceeded("oracle: " + std::to_string(k.vertices().size()) +
                         " vertices exceed the budget of " +
                         std::to_string(budget.max_vertices));
  }
  if (k.size() > budget.max_simplices) {
    throw BudgetExceeded("oracle: " + std::to_string(k.size()) +
                         " simplices exceed the budget of " +
                         std::to_string(budget.max_simplices));
  }
}

inline void check_space(Index dim, const OracleBudget& budget, const char* what) {
  if (dim > budget.max_cycle_space_dim) {
    throw BudgetExceeded(std::string("oracle: ") + what + " has dimension " +
                         std::to_string(dim) + ", over the budget of " +
                         std::to_string(budget.max_cycle_space_dim));
  }
}

/// Linearly independent p-boundaries spanning B_p(K).
inline std::vector<ChainVector> boundary_basis(const EmbeddedComplex& k, Index p) {
  ReducedSpan span(k.size(p));
  std::vector<ChainVector> out;
  for (Index i = 0; i < k.size(p + 1); ++i) {
    ChainVector b(k.size(p), k.facets(p + 1, i));
    if (span.insert(b)) out.push_back(std::move(b));
  }
  return out;
}

/// Basis of Z_p of a subcomplex, written in the parent's p-indices.
inline std::vector<ChainVector> cycle_basis(const SubcomplexView& view, Index p) {
  std::vector<ChainVector> out;
  const Index n = view.size(p);
  if (n == 0) return out;
  if (p == 0) {
    for (Index i = 0; i < n; ++i) out.push_back(view.extend(ChainVector(n, {i}), 0));
    return out;
  }
  const ReductionResult red = standard_reduction(view.boundary_matrix(p));
  for (Index j = 0; j < n; ++j) {
    if (red.is_zero(j)) out.push_back(view.extend(red.basis_change.column_chain(j), p));
  }
  return out;
}

inline SubcomplexView whole(const EmbeddedComplex& k) {
  return induced_subcomplex(k, k.vertices());
}

/// Every cycle homologous to zeta: zeta plus each element of B_p(K).
inline std::vector<ChainVector> enumerate_class(const EmbeddedComplex& k, const ChainVector& zeta,
                                                Index p, const OracleBudget& budget = {}) {
  const std::vector<ChainVector> basis = boundary_basis(k, p);
  check_space(basis.size(), budget, "the boundary space");
  std::vector<ChainVector> out;
  out.reserve(std::size_t{1} << basis.size());
  ChainVector cur = zeta;
  out.push_back(cur);
  // Gray code: step s flips the generator at the lowest set bit of s.
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << basis.size()); ++s) {
    cur += basis[std::countr_zero(s)];
    out.push_back(cur);
  }
  return out;
}

/// Every p-cycle of K (the zero chain included).
inline std::vector<ChainVector> enumerate_cycles(const SubcomplexView& view, Index p,
                                                 const OracleBudget& budget = {}) {
  const std::vector<ChainVector> basis = cycle_basis(view, p);
  check_space(basis.size(), budget, "the cycle space");
  std::vector<ChainVector> out;
  ChainVector cur(view.parent().size(p));
  out.push_back(cur);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << basis.size()); ++s) {
    cur += basis[std::countr_zero(s)];
    out.push_back(cur);
  }
  return out;
}

struct ExactCycle {
  double radius = 0.0;
  ChainVector cycle;
  SphereCertificate sphere;
};

/// Minimum exact radius over the homology class of zeta. Candidate balls are
/// the circumspheres of at most d+1 points; the answer is the smallest one
/// whose induced subcomplex carries a cycle homologous to zeta.
inline ExactCycle exact_optimal_homologous_cycle(const EmbeddedComplex& k, const ChainVector& zeta,
                                                 Index p, const OracleBudget& budget = {}) {
  check_budget(k, budget);
  if (!is_cycle(k, zeta, p)) throw InputError("input chain is not a cycle");
  Z2Matrix b(k.size(p));
  for (const ChainVector& c : boundary_basis(k, p)) b.push_back(c);
  if (in_span(b, zeta)) return {0.0, ChainVector(k.size(p)), {}};

  const std::vector<Index> verts = k.vertices();
  const Index dim = k.cloud().dim();
  std::vector<SphereCertificate> spheres;
  std::vector<Index> pick;
  auto visit = [&](auto&& self, Index from) -> void {
    if (!pick.empty()) {
      std::vector<Point> pts;
      for (Index v : pick) pts.push_back(k.point(v));
      if (auto s = circumsphere(pts)) {
        s->support = pick;
        spheres.push_back(std::move(*s));
      }
    }
    if (pick.size() == dim + 1) return;
    for (Index i = from; i < verts.size(); ++i) {
      pick.push_back(verts[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  std::stable_sort(spheres.begin(), spheres.end(),
                   [](const auto& a, const auto& c) { return a.radius < c.radius; });

  const double tol = k.cloud().tolerance();
  std::vector<Index> last_inside;
  for (const SphereCertificate& s : spheres) {
    std::vector<Index> inside;
    for (Index v : verts) {
      if (s.encloses(k.point(v), tol)) inside.push_back(v);
    }
    if (inside == last_inside) continue;
    last_inside = inside;
    const SubcomplexView view = induced_subcomplex(k, inside);
    const std::vector<ChainVector> cycles = cycle_basis(view, p);
    Z2Matrix system(k.size(p));
    for (const ChainVector& c : cycles) system.push_back(c);
    const Index m = cycles.size();
    system = hstack(system, b);
    const auto solution = solve_by_reduction(system, zeta);
    if (!solution) continue;
    ExactCycle out{s.radius, ChainVector(k.size(p)), s};
    for (Index j : *solution) {
      if (j < m) out.cycle += cycles[j];
    }
    return out;
  }
  throw std::logic_error("no enclosing sphere carries the class");
}

/// Minimum over sites v in V(K) of the smallest r_v in the class of zeta.
inline ExactCycle exact_site_restricted_cycle(const EmbeddedComplex& k, const ChainVector& zeta,
                                              Index p, const OracleBudget& budget = {}) {
  check_budget(k, budget);
  ExactCycle best{std::numeric_limits<double>::infinity(), {}, {}};
  for (const ChainVector& c : enumerate_class(k, zeta, p, budget)) {
    if (c.is_zero()) return {0.0, c, {}};
    for (Index v : k.vertices()) {
      const double r = site_radius(k, k.point(v), c, p);
      if (r < best.radius) best = {r, c, SphereCertificate{k.point(v), r, {v}}};
    }
  }
  return best;
}

/// Smallest r_v over the class of zeta for one fixed site.
inline double min_site_radius_in_class(const EmbeddedComplex& k, const ChainVector& zeta, Index p,
                                       const Point& site, const OracleBudget& budget = {}) {
  double best = std::numeric_limits<double>::infinity();
  for (const ChainVector& c : enumerate_class(k, zeta, p, budget)) {
    if (c.is_zero()) return 0.0;
    best = std::min(best, site_radius(k, site, c, p));
  }
  return best;
}

/// Representatives of a basis of H_p(K).
inline std::vector<ChainVector> homology_generators(const EmbeddedComplex& k, Index p) {
  ReducedSpan span(k.size(p));
  for (const ChainVector& c : boundary_basis(k, p)) span.insert(c);
  std::vector<ChainVector> out;
  for (const ChainVector& z : cycle_basis(whole(k), p)) {
    if (span.insert(z)) out.push_back(z);
  }
  return out;
}

struct ExactBasis {
  std::vector<ChainVector> cycles;
  /// Weights of the chosen classes, ascending.
  std::vector<double> weights;
  double total = 0.0;
  Index bases_enumerated = 0;
};

/// Minimum-weight basis of H_p(K): every nonzero class gets its optimal
/// weight, and every independent beta-subset of classes is tried.
inline ExactBasis exact_min_basis(const EmbeddedComplex& k, Index p, Measure measure,
                                  const OracleBudget& budget = {}) {
  check_budget(k, budget);
  const std::vector<ChainVector> gens = homology_generators(k, p);
  const Index beta = gens.size();
  if (beta > 6) throw BudgetExceeded("oracle: Betti number too large to enumerate bases");
  ExactBasis out;
  if (beta == 0) return out;

  const std::uint32_t classes = (1u << beta) - 1;
  std::vector<ExactCycle> best(classes + 1);
  for (std::uint32_t mask = 1; mask <= classes; ++mask) {
    ChainVector rep(k.size(p));
    for (Index i = 0; i < beta; ++i) {
      if (mask & (1u << i)) rep += gens[i];
    }
    best[mask] = measure == Measure::exact ? exact_optimal_homologous_cycle(k, rep, p, budget)
                                           : exact_site_restricted_cycle(k, rep, p, budget);
  }

  double best_total = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> pick;
  auto independent = [&] {
    std::vector<std::uint32_t> basis(beta, 0);
    for (std::uint32_t m : pick) {
      for (int bit = static_cast<int>(beta) - 1; bit >= 0; --bit) {
        if (!(m & (1u << bit))) continue;
        if (!basis[bit]) {
          basis[bit] = m;
          break;
        }
        m ^= basis[bit];
      }
      if (m == 0) return false;
    }
    return true;
  };
  auto visit = [&](auto&& self, std::uint32_t from) -> void {
    if (pick.size() == beta) {
      if (!independent()) return;
      ++out.bases_enumerated;
      std::vector<double> w;
      for (std::uint32_t m : pick) w.push_back(best[m].radius);
      std::sort(w.begin(), w.end());
      double total = 0.0;
      for (double x : w) total += x;
      if (total < best_total) {
        best_total = total;
        chosen = pick;
      }
      return;
    }
    for (std::uint32_t m = from; m <= classes; ++m) {
      pick.push_back(m);
      self(self, m + 1);
      pick.pop_back();
    }
  };
  visit(visit, 1);

  for (std::uint32_t m : chosen) {
    out.cycles.push_back(best[m].cycle);
    out.weights.push_back(best[m].radius);
  }
  std::sort(out.weights.begin(), out.weights.end());
  for (double w : out.weights) out.total += w;
  return out;
}

/// Every chain that represents the bar, in enumeration order.
inline std::vector<ChainVector> enumerate_representatives(const Filtration& f, const Interval& bar,
                                                          const OracleBudget& budget = {}) {
  const EmbeddedComplex& k = f.complex();
  check_budget(k, budget);
  std::vector<std::vector<bool>> members(static_cast<Index>(k.max_dim() + 1));
  for (Index d = 0; d < members.size(); ++d) members[d].assign(k.size(d), false);
  for (const SimplexId& id : f.prefix(bar.birth)) members[id.dim][id.index] = true;
  const SubcomplexView kb(k, members);
  std::vector<ChainVector> out;
  for (const ChainVector& z : enumerate_cycles(kb, bar.dim, budget)) {
    if (represents(f, bar, z)) out.push_back(z);
  }
  return out;
}

struct ExactRepresentative {
  double radius = 0.0;
  ChainVector cycle;
  std::optional<Index> site;
};

inline ExactRepresentative exact_min_persistent_rep(const Filtration& f, const Interval& bar,
                                                    Measure measure,
                                                    const OracleBudget& budget = {}) {
  const EmbeddedComplex& k = f.complex();
  ExactRepresentative best{std::numeric_limits<double>::infinity(), {}, std::nullopt};
  for (const ChainVector& z : enumerate_representatives(f, bar, budget)) {
    if (measure == Measure::exact) {
      const double r = exact_radius(k, z, bar.dim).radius;
      if (r < best.radius) best = {r, z, std::nullopt};
      continue;
    }
    for (Index v : k.vertices()) {
      const double r = site_radius(k, k.point(v), z, bar.dim);
      if (r < best.radius) best = {r, z, v};
    }
  }
  if (best.cycle.ambient_size() == 0) throw std::logic_error("bar has no representative");
  return best;
}

}  // namespace cyclerad::oracle
