#include "sniff/graph.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <string>

namespace sniff {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a_u64(std::uint64_t h, std::uint64_t v) {
  return fnv1a(h, &v, sizeof(v));
}

std::uint64_t fnv1a_f64(std::uint64_t h, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  return fnv1a_u64(h, bits);
}

}  // namespace

RoadGraph::RoadGraph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges,
                     std::optional<ProjectionOrigin> origin)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), origin_(origin) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const NodeRecord& a, const NodeRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i].id == nodes_[i - 1].id) {
      throw ValidationError("duplicate node id " + std::to_string(nodes_[i].id));
    }
  }

  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw ValidationError("self-loop on node " + std::to_string(e.u));
    }
    if (e.weight < 0.0) {
      throw ValidationError("negative weight on edge (" + std::to_string(e.u) +
                            ", " + std::to_string(e.v) + ")");
    }
    if (!has_node(e.u) || !has_node(e.v)) {
      throw ValidationError("edge (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ") references unknown node");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ValidationError("duplicate undirected edge (" + std::to_string(edges_[i].u) +
                            ", " + std::to_string(edges_[i].v) + ")");
    }
  }

  adjacency_.assign(nodes_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto ui = static_cast<std::uint32_t>(index_of(edges_[e].u));
    const auto vi = static_cast<std::uint32_t>(index_of(edges_[e].v));
    adjacency_[ui].push_back({vi, static_cast<std::uint32_t>(e)});
    adjacency_[vi].push_back({ui, static_cast<std::uint32_t>(e)});
  }
  for (auto& arcs : adjacency_) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.neighbor < b.neighbor; });
  }

  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a_u64(h, nodes_.size());
  h = fnv1a_u64(h, edges_.size());
  for (const auto& n : nodes_) {
    h = fnv1a_u64(h, static_cast<std::uint64_t>(n.id));
    h = fnv1a_f64(h, n.x);
    h = fnv1a_f64(h, n.y);
  }
  for (const auto& e : edges_) {
    h = fnv1a_u64(h, static_cast<std::uint64_t>(e.u));
    h = fnv1a_u64(h, static_cast<std::uint64_t>(e.v));
    h = fnv1a_f64(h, e.weight);
  }
  fingerprint_ = h;
}

bool RoadGraph::has_node(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const NodeRecord& n, NodeId v) { return n.id < v; });
  return it != nodes_.end() && it->id == id;
}

std::size_t RoadGraph::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const NodeRecord& n, NodeId v) { return n.id < v; });
  if (it == nodes_.end() || it->id != id) {
    throw ValidationError("unknown node id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool RoadGraph::adjacent_indices(std::size_t a, std::size_t b) const {
  const auto& arcs = adjacency_[a];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), static_cast<std::uint32_t>(b),
                             [](const Arc& arc, std::uint32_t v) { return arc.neighbor < v; });
  return it != arcs.end() && it->neighbor == b;
}

bool RoadGraph::has_edge(NodeId u, NodeId v) const {
  if (!has_node(u) || !has_node(v)) return false;
  return adjacent_indices(index_of(u), index_of(v));
}

RoadGraph RoadGraph::with_edge_weights(
    const std::map<std::pair<NodeId, NodeId>, double>& weights, double missing) const {
  std::vector<EdgeRecord> reweighted = edges_;
  for (auto& e : reweighted) {
    auto it = weights.find({e.u, e.v});
    e.weight = it != weights.end() ? it->second : missing;
  }
  return RoadGraph(nodes_, std::move(reweighted), origin_);
}

Trajectory::Trajectory(const RoadGraph& graph, std::vector<NodeId> node_seq)
    : node_seq_(std::move(node_seq)) {
  if (node_seq_.size() < 2) {
    throw ValidationError("trajectory has fewer than 2 nodes");
  }
  index_seq_.reserve(node_seq_.size());
  for (NodeId id : node_seq_) {
    index_seq_.push_back(static_cast<std::uint32_t>(graph.index_of(id)));
  }
  for (std::size_t i = 1; i < index_seq_.size(); ++i) {
    if (!graph.adjacent_indices(index_seq_[i - 1], index_seq_[i])) {
      throw ValidationError("non-adjacent step (" + std::to_string(node_seq_[i - 1]) +
                            ", " + std::to_string(node_seq_[i]) + ")");
    }
  }
}

TrajectorySet::TrajectorySet(const RoadGraph& graph, std::vector<Trajectory> trajectories)
    : trajectories_(std::move(trajectories)), graph_fingerprint_(graph.fingerprint()) {}

std::vector<std::int32_t> bfs_hops(const RoadGraph& graph, std::size_t source_index,
                                   std::int32_t cutoff) {
  std::vector<std::int32_t> dist(graph.node_count(), -1);
  dist[source_index] = 0;
  std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(source_index)};
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    if (cutoff >= 0 && dist[u] >= cutoff) continue;
    for (const auto& arc : graph.arcs(u)) {
      if (dist[arc.neighbor] < 0) {
        dist[arc.neighbor] = dist[u] + 1;
        queue.push_back(arc.neighbor);
      }
    }
  }
  return dist;
}

std::map<NodeId, int> hop_distances(const RoadGraph& graph, NodeId source,
                                    std::optional<int> cutoff) {
  const std::size_t src = graph.index_of(source);
  const auto dist = bfs_hops(graph, src, cutoff ? *cutoff : -1);
  std::map<NodeId, int> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] >= 0) out.emplace(graph.id_of(i), dist[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const RoadGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& arc : graph.arcs(u)) {
        if (!seen[arc.neighbor]) {
          seen[arc.neighbor] = 1;
          comp.push_back(arc.neighbor);
          queue.push_back(arc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const RoadGraph& graph) {
  return graph.node_count() <= 1 || connected_components(graph).size() == 1;
}

}  // namespace sniff
