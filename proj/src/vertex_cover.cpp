#include "sniff/vertex_cover.hpp"

#include <algorithm>
#include <string>

namespace sniff {

const char* to_string(CoverAlgorithm algorithm) {
  switch (algorithm) {
    case CoverAlgorithm::GavrilYannakakis: return "gavril_yannakakis";
    case CoverAlgorithm::BarYehudaEven: return "bar_yehuda_even";
    case CoverAlgorithm::Exact: return "exact";
  }
  return "unknown";
}

CoverAlgorithm cover_algorithm_from_string(std::string_view name) {
  if (name == "gavril_yannakakis" || name == "gy") return CoverAlgorithm::GavrilYannakakis;
  if (name == "bar_yehuda_even" || name == "bye") return CoverAlgorithm::BarYehudaEven;
  if (name == "exact") return CoverAlgorithm::Exact;
  throw ValidationError("unknown cover algorithm '" + std::string(name) + "'");
}

bool CoverSet::contains(NodeId id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

namespace {

CoverSet make_cover(const RoadGraph& graph, std::vector<char> in_cover,
                    CoverAlgorithm algorithm) {
  CoverSet cover;
  cover.algorithm = algorithm;
  cover.graph_fingerprint = graph.fingerprint();
  for (std::size_t i = 0; i < in_cover.size(); ++i) {
    if (in_cover[i]) cover.members.push_back(graph.id_of(i));
  }
  return cover;
}

}  // namespace

CoverSet cover_gavril_yannakakis(const RoadGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<char> matched(n, 0);
  // edges() is already sorted by (min id, max id)
  for (const auto& e : graph.edges()) {
    const std::size_t u = graph.index_of(e.u);
    const std::size_t v = graph.index_of(e.v);
    if (!matched[u] && !matched[v]) {
      matched[u] = 1;
      matched[v] = 1;
    }
  }
  return make_cover(graph, std::move(matched), CoverAlgorithm::GavrilYannakakis);
}

CoverSet cover_bar_yehuda_even(const RoadGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<char> alive(n, 1);
  std::vector<char> in_cover(n, 0);

  // Triangle phase. One ascending pass suffices: removing vertices never
  // creates triangles, and a node that anchors a triangle is itself removed,
  // so every node hosts at most one removal.
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    bool removed = false;
    const auto& arcs = graph.arcs(u);
    for (std::size_t i = 0; i < arcs.size() && !removed; ++i) {
      const std::uint32_t v = arcs[i].neighbor;
      if (!alive[v]) continue;
      for (std::size_t j = i + 1; j < arcs.size() && !removed; ++j) {
        const std::uint32_t w = arcs[j].neighbor;
        if (!alive[w]) continue;
        if (graph.adjacent_indices(v, w)) {
          in_cover[u] = in_cover[v] = in_cover[w] = 1;
          alive[u] = alive[v] = alive[w] = 0;
          removed = true;
        }
      }
    }
  }

  // Edge phase on the triangle-free remainder.
  for (const auto& e : graph.edges()) {
    const std::size_t u = graph.index_of(e.u);
    const std::size_t v = graph.index_of(e.v);
    if (alive[u] && alive[v] && !in_cover[u] && !in_cover[v]) {
      in_cover[u] = 1;
      in_cover[v] = 1;
    }
  }
  return make_cover(graph, std::move(in_cover), CoverAlgorithm::BarYehudaEven);
}

namespace {

// Branch-and-bound state over <=64 node indices packed into a bitmask.
struct ExactSolver {
  std::size_t n;
  std::vector<std::uint64_t> adj;  // adjacency masks

  std::uint64_t alive_neighbors(std::size_t v, std::uint64_t removed) const {
    return adj[v] & ~removed;
  }

  // Size of a greedy maximal matching on the remaining graph; any cover
  // needs at least that many vertices.
  std::size_t matching_bound(std::uint64_t removed) const {
    std::uint64_t used = removed;
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      const std::uint64_t nbrs = adj[v] & ~used;
      if (nbrs) {
        used |= (std::uint64_t{1} << v) | (nbrs & -nbrs);
        ++m;
      }
    }
    return m;
  }

  std::size_t best_size;

  // Minimum cover size; vertices in `removed` are settled (either chosen or
  // isolated), `chosen` counts picks so far.
  void min_size(std::uint64_t removed, std::size_t chosen) {
    if (chosen >= best_size) return;
    // Find the vertex of maximum remaining degree (ties to smallest index).
    std::size_t pick = n;
    std::size_t pick_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((removed >> v) & 1) continue;
      const auto deg = static_cast<std::size_t>(
          __builtin_popcountll(alive_neighbors(v, removed)));
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    if (pick == n) {  // no edges left
      best_size = std::min(best_size, chosen);
      return;
    }
    if (chosen + matching_bound(removed) >= best_size) return;

    // Max degree 1 means the remainder is a disjoint union of single edges:
    // exactly one vertex per edge.
    if (pick_deg == 1) {
      std::size_t extra = 0;
      std::uint64_t used = removed;
      for (std::size_t v = 0; v < n; ++v) {
        if ((used >> v) & 1) continue;
        const std::uint64_t nbrs = alive_neighbors(v, used);
        if (nbrs) {
          used |= (std::uint64_t{1} << v) | nbrs;
          ++extra;
        }
      }
      best_size = std::min(best_size, chosen + extra);
      return;
    }

    const std::uint64_t pick_bit = std::uint64_t{1} << pick;
    // Branch 1: pick is in the cover.
    min_size(removed | pick_bit, chosen + 1);
    // Branch 2: pick is not, so all its remaining neighbors are.
    const std::uint64_t nbrs = alive_neighbors(pick, removed);
    min_size(removed | pick_bit | nbrs,
             chosen + static_cast<std::size_t>(__builtin_popcountll(nbrs)));
  }

  // Can the edges not touched by `in_cover` be covered with `budget` more
  // vertices, all of index >= lo?
  bool feasible(std::uint64_t in_cover, std::size_t lo, std::size_t budget) {
    std::size_t eu = n, ev = n;
    for (std::size_t v = 0; v < n && eu == n; ++v) {
      if ((in_cover >> v) & 1) continue;
      const std::uint64_t open = adj[v] & ~in_cover;
      if (open) {
        eu = v;
        ev = static_cast<std::size_t>(__builtin_ctzll(open));
      }
    }
    if (eu == n) return true;  // everything covered
    if (budget == 0) return false;
    if (eu < lo && ev < lo) return false;  // neither endpoint is allowed anymore
    if (eu >= lo && feasible(in_cover | (std::uint64_t{1} << eu), lo, budget - 1)) {
      return true;
    }
    if (ev >= lo && feasible(in_cover | (std::uint64_t{1} << ev), lo, budget - 1)) {
      return true;
    }
    return false;
  }
};

}  // namespace

CoverSet cover_exact(const RoadGraph& graph, std::size_t node_limit) {
  const std::size_t n = graph.node_count();
  if (n > node_limit || n > 64) {
    throw CapacityError("graph of " + std::to_string(n) +
                        " nodes exceeds the exact solver limit of " +
                        std::to_string(std::min<std::size_t>(node_limit, 64)));
  }

  ExactSolver solver;
  solver.n = n;
  solver.adj.assign(n, 0);
  for (const auto& e : graph.edges()) {
    const std::size_t u = graph.index_of(e.u);
    const std::size_t v = graph.index_of(e.v);
    solver.adj[u] |= std::uint64_t{1} << v;
    solver.adj[v] |= std::uint64_t{1} << u;
  }

  solver.best_size = n + 1;
  solver.min_size(0, 0);
  const std::size_t optimum = solver.best_size == n + 1 ? 0 : solver.best_size;

  // Lexicographically smallest minimum cover: settle members in ascending
  // index order, keeping each candidate iff a completion still exists.
  std::uint64_t chosen_mask = 0;
  std::vector<char> in_cover(n, 0);
  std::size_t lo = 0;
  for (std::size_t slot = 0; slot < optimum; ++slot) {
    for (std::size_t c = lo; c < n; ++c) {
      const std::uint64_t candidate = chosen_mask | (std::uint64_t{1} << c);
      if (solver.feasible(candidate, c + 1, optimum - slot - 1)) {
        chosen_mask = candidate;
        in_cover[c] = 1;
        lo = c + 1;
        break;
      }
    }
  }
  return make_cover(graph, std::move(in_cover), CoverAlgorithm::Exact);
}

CoverCheck verify_cover(const RoadGraph& graph, const std::vector<NodeId>& members) {
  std::vector<char> mask(graph.node_count(), 0);
  for (NodeId id : members) {
    mask[graph.index_of(id)] = 1;  // throws for ids outside the graph
  }
  CoverCheck check;
  for (const auto& e : graph.edges()) {
    if (!mask[graph.index_of(e.u)] && !mask[graph.index_of(e.v)]) {
      check.uncovered.emplace_back(e.u, e.v);
    }
  }
  check.valid = check.uncovered.empty();
  return check;
}

}  // namespace sniff
