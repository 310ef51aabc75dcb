#include "sniff/generators.hpp"

#include <algorithm>
#include <string>

#include "sniff/rng.hpp"

namespace sniff {

RoadGraph generate_grid_graph(int rows, int cols, double spacing, std::size_t max_nodes) {
  if (rows < 2 || cols < 2) {
    throw ValidationError("grid dimensions must be at least 2x2");
  }
  if (spacing <= 0.0) {
    throw ValidationError("grid spacing must be positive");
  }
  const std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (n > max_nodes) {
    throw CapacityError("grid of " + std::to_string(n) + " nodes exceeds limit of " +
                        std::to_string(max_nodes));
  }

  std::vector<NodeRecord> nodes;
  nodes.reserve(n);
  std::vector<EdgeRecord> edges;
  edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                static_cast<std::size_t>(cols) * (rows - 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const NodeId id = static_cast<NodeId>(r) * cols + c;
      nodes.push_back({id, c * spacing, r * spacing});
      if (c + 1 < cols) edges.push_back({id, id + 1, 1.0});
      if (r + 1 < rows) edges.push_back({id, id + cols, 1.0});
    }
  }
  return RoadGraph(std::move(nodes), std::move(edges));
}

RoadGraph generate_geometric_graph(int n, double radius, std::uint64_t seed) {
  if (n < 2) {
    throw ValidationError("geometric graph needs at least 2 nodes");
  }
  if (radius <= 0.0 || radius > 1.0) {
    throw ValidationError("geometric radius must be in (0, 1]");
  }

  Rng rng(seed);
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.unit();
    ys[i] = rng.unit();
  }

  std::vector<NodeRecord> nodes;
  nodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    nodes.push_back({i, xs[i] * kGeometricScaleMeters, ys[i] * kGeometricScaleMeters});
  }
  std::vector<EdgeRecord> edges;
  const double r2 = radius * radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
    }
  }
  RoadGraph full(std::move(nodes), std::move(edges));

  const auto components = connected_components(full);
  if (components.size() <= 1) return full;

  // Keep the largest component; ties go to the one with the smallest index.
  std::size_t best = 0;
  for (std::size_t c = 1; c < components.size(); ++c) {
    if (components[c].size() > components[best].size()) best = c;
  }
  std::vector<char> keep(full.node_count(), 0);
  for (std::size_t idx : components[best]) keep[idx] = 1;

  std::vector<NodeRecord> kept_nodes;
  kept_nodes.reserve(components[best].size());
  for (std::size_t i = 0; i < full.node_count(); ++i) {
    if (keep[i]) kept_nodes.push_back(full.nodes()[i]);
  }
  std::vector<EdgeRecord> kept_edges;
  for (const auto& e : full.edges()) {
    if (keep[full.index_of(e.u)] && keep[full.index_of(e.v)]) kept_edges.push_back(e);
  }
  return RoadGraph(std::move(kept_nodes), std::move(kept_edges));
}

TrajectorySet generate_trajectories(const RoadGraph& graph, std::size_t count,
                                    std::size_t min_len, std::uint64_t seed,
                                    std::size_t max_resamples) {
  if (!is_connected(graph)) {
    throw ValidationError("trajectory generation requires a connected graph");
  }
  if (min_len < 1) {
    throw ValidationError("min_len must be at least 1");
  }
  if (max_resamples == 0) max_resamples = 1000 * count;

  const std::size_t n = graph.node_count();
  Rng rng(seed);
  std::vector<Trajectory> out;
  out.reserve(count);
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (attempts >= max_resamples) {
      throw CapacityError("generated " + std::to_string(out.size()) + " of " +
                          std::to_string(count) +
                          " trajectories within the resample budget");
    }
    ++attempts;
    const std::size_t origin = rng.below(n);
    const std::size_t dest = rng.below(n);
    if (origin == dest) continue;

    // BFS parents follow ascending neighbor id, so the path is unique.
    std::vector<std::int32_t> parent(n, -1);
    std::vector<std::int32_t> dist(n, -1);
    dist[origin] = 0;
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(origin)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      if (static_cast<std::size_t>(u) == dest) break;
      for (const auto& arc : graph.arcs(u)) {
        if (dist[arc.neighbor] < 0) {
          dist[arc.neighbor] = dist[u] + 1;
          parent[arc.neighbor] = static_cast<std::int32_t>(u);
          queue.push_back(arc.neighbor);
        }
      }
    }
    if (dist[dest] < 0 || static_cast<std::size_t>(dist[dest]) < min_len) continue;

    std::vector<NodeId> seq(static_cast<std::size_t>(dist[dest]) + 1);
    std::size_t cur = dest;
    for (std::size_t pos = seq.size(); pos-- > 0;) {
      seq[pos] = graph.id_of(cur);
      if (pos > 0) cur = static_cast<std::size_t>(parent[cur]);
    }
    out.emplace_back(graph, std::move(seq));
  }
  return TrajectorySet(graph, std::move(out));
}

}  // namespace sniff
