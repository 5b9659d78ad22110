#pragma once

// Greedy detour removal for 1-cycles: an arc of a loop is swapped for a
// shorter path when the two differ by a boundary and every new vertex stays
// inside the ball of radius r_v around the site.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cyclerad/complex.hpp"
#include "cyclerad/optimize.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad {

namespace detail {

struct BallGraph {
  // neighbours[v]: (neighbour, edge index), ascending by neighbour
  std::vector<std::vector<std::pair<Index, Index>>> neighbours;
};

inline BallGraph ball_graph(const EmbeddedComplex& k, const Point& site, double radius) {
  BallGraph g;
  g.neighbours.resize(k.cloud().size());
  std::vector<bool> inside(k.cloud().size());
  for (Index v = 0; v < inside.size(); ++v) inside[v] = distance(site, k.point(v)) <= radius;
  for (Index e = 0; e < k.size(1); ++e) {
    const Simplex& s = k.simplex(1, e);
    if (!inside[s[0]] || !inside[s[1]]) continue;
    g.neighbours[s[0]].emplace_back(s[1], e);
    g.neighbours[s[1]].emplace_back(s[0], e);
  }
  for (auto& nb : g.neighbours) std::sort(nb.begin(), nb.end());
  return g;
}

// BFS parent edges from `source`; distance is hop count.
struct BfsTree {
  std::vector<Index> dist;
  std::vector<Index> parent;
};

inline BfsTree bfs(const BallGraph& g, Index source) {
  constexpr Index unreached = std::numeric_limits<Index>::max();
  BfsTree t{std::vector<Index>(g.neighbours.size(), unreached),
            std::vector<Index>(g.neighbours.size(), unreached)};
  std::queue<Index> queue;
  t.dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop();
    for (const auto& [w, e] : g.neighbours[u]) {
      if (t.dist[w] != unreached) continue;
      t.dist[w] = t.dist[u] + 1;
      t.parent[w] = u;
      queue.push(w);
    }
  }
  return t;
}

inline Index edge_between(const EmbeddedComplex& k, Index a, Index b) {
  const auto e = k.find(a < b ? Simplex{a, b} : Simplex{b, a});
  if (!e) throw std::logic_error("loop uses a missing edge");
  return *e;
}

// Vertex sequence of a connected component that is a simple loop, or nullopt.
inline std::optional<std::vector<Index>> as_loop(const EmbeddedComplex& k,
                                                 const std::vector<Index>& edges) {
  std::map<Index, std::vector<Index>> adj;
  for (Index e : edges) {
    const Simplex& s = k.simplex(1, e);
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) return std::nullopt;
  }
  std::vector<Index> loop{adj.begin()->first};
  Index prev = loop[0];
  Index cur = adj.begin()->second[0];
  while (cur != loop[0]) {
    loop.push_back(cur);
    const auto& nb = adj[cur];
    const Index next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (loop.size() != adj.size()) return std::nullopt;
  return loop;
}

inline std::vector<std::vector<Index>> edge_components(const EmbeddedComplex& k,
                                                       const ChainVector& cycle) {
  std::map<Index, std::vector<Index>> incident;
  for (Index e : cycle.support()) {
    for (Index v : k.simplex(1, e)) incident[v].push_back(e);
  }
  std::vector<std::vector<Index>> out;
  std::map<Index, bool> seen;
  for (Index start : cycle.support()) {
    if (seen[start]) continue;
    std::vector<Index> comp;
    std::vector<Index> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const Index e = stack.back();
      stack.pop_back();
      comp.push_back(e);
      for (Index v : k.simplex(1, e)) {
        for (Index f : incident[v]) {
          if (!seen[f]) {
            seen[f] = true;
            stack.push_back(f);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<Index> shorten_loop(const EmbeddedComplex& k, const BallGraph& g,
                                       const ReducedSpan& boundaries, std::vector<Index> loop,
                                       int max_passes) {
  for (int pass = 0; pass < max_passes; ++pass) {
    const Index n = loop.size();
    std::vector<BfsTree> trees;
    trees.reserve(n);
    for (Index v : loop) trees.push_back(bfs(g, v));
    // (arc length, start) with a strictly shorter detour, longest arcs first
    std::vector<std::pair<Index, Index>> candidates;
    for (Index len = n - 1; len >= 2; --len) {
      for (Index i = 0; i < n; ++i) {
        if (trees[i].dist[loop[(i + len) % n]] < len) candidates.emplace_back(len, i);
      }
    }
    bool accepted = false;
    for (const auto& [len, i] : candidates) {
      const Index j = (i + len) % n;
      std::vector<Index> path;  // loop[i] .. loop[j]
      for (Index v = loop[j]; v != loop[i]; v = trees[i].parent[v]) path.push_back(v);
      path.push_back(loop[i]);
      std::reverse(path.begin(), path.end());

      std::vector<Index> next = path;
      for (Index t = 1; t < n - len; ++t) next.push_back(loop[(j + t) % n]);
      std::vector<Index> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      if (next.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        continue;
      }
      ChainVector difference(k.size(1));
      for (Index t = 0; t < len; ++t) {
        difference += ChainVector(k.size(1), {edge_between(k, loop[(i + t) % n], loop[(i + t + 1) % n])});
      }
      for (Index t = 0; t + 1 < path.size(); ++t) {
        difference += ChainVector(k.size(1), {edge_between(k, path[t], path[t + 1])});
      }
      if (!boundaries.contains(difference)) continue;
      loop = std::move(next);
      accepted = true;
      break;
    }
    if (!accepted) break;
  }
  return loop;
}

}  // namespace detail

/// Shortens a 1-cycle in place of its homology class without increasing r_v.
/// Components that are not simple loops are kept as they are.
inline OptimalCycleResult shorten_cycle(const EmbeddedComplex& k, OptimalCycleResult in,
                                        int max_passes = 50) {
  if (in.dim != 1) throw std::invalid_argument("shorten_cycle works on 1-cycles only");
  in.edges_before = in.cycle.weight();
  if (in.cycle.is_zero()) {
    in.edges_after = 0;
    return in;
  }
  const detail::BallGraph g = detail::ball_graph(k, in.site_point, in.r_v);
  Z2Matrix b(k.size(1));
  for (Index i = 0; i < k.size(2); ++i) b.push_back(k.facets(2, i));
  const ReducedSpan boundaries(b);

  ChainVector out(k.size(1));
  for (const std::vector<Index>& comp : detail::edge_components(k, in.cycle)) {
    const auto loop = detail::as_loop(k, comp);
    if (!loop) {
      out += ChainVector(k.size(1), comp);
      continue;
    }
    const std::vector<Index> shorter = detail::shorten_loop(k, g, boundaries, *loop, max_passes);
    for (Index t = 0; t < shorter.size(); ++t) {
      out += ChainVector(k.size(1),
                         {detail::edge_between(k, shorter[t], shorter[(t + 1) % shorter.size()])});
    }
  }
  in.cycle = std::move(out);
  in.edges_after = in.cycle.weight();
  detail::fill_geometry(in, k);
  return in;
}

}  // namespace cyclerad
