#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sniff/error.hpp"

namespace sniff {

using NodeId = std::int64_t;

struct NodeRecord {
  NodeId id = 0;
  double x = 0.0;  // planar meters
  double y = 0.0;
};

/// Undirected edge; canonical storage keeps u < v (by id).
struct EdgeRecord {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

/// Lat/lon origin of the equirectangular projection applied at ingestion.
struct ProjectionOrigin {
  double lat = 0.0;
  double lon = 0.0;
};

/// Undirected simple road graph with planar node coordinates. Construction
/// canonicalizes the input: nodes sorted by id, edges sorted by (u, v) with
/// u < v, adjacency lists sorted by neighbor. Node index therefore follows
/// node id order, which every ascending-id tie rule in this library relies
/// on. Immutable after construction; safe to share across threads.
class RoadGraph {
 public:
  struct Arc {
    std::uint32_t neighbor;  // node index
    std::uint32_t edge;      // edge index, for weight lookup
  };

  RoadGraph() = default;

  /// Throws ValidationError on duplicate node ids, edges with unknown
  /// endpoints, self-loops, duplicate undirected edges or negative weights.
  RoadGraph(std::vector<NodeRecord> nodes, std::vector<EdgeRecord> edges,
            std::optional<ProjectionOrigin> origin = std::nullopt);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  bool has_node(NodeId id) const;
  std::size_t index_of(NodeId id) const;  // throws ValidationError if unknown
  NodeId id_of(std::size_t index) const { return nodes_[index].id; }

  const std::vector<Arc>& arcs(std::size_t index) const { return adjacency_[index]; }
  std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
  double edge_weight(std::size_t edge_index) const { return edges_[edge_index].weight; }
  bool adjacent_indices(std::size_t a, std::size_t b) const;
  bool has_edge(NodeId u, NodeId v) const;

  std::optional<ProjectionOrigin> projection_origin() const { return origin_; }

  /// Content hash over node ids, coordinates, edges and weights. Covers,
  /// centrality vectors, trajectory sets and placements carry it so that a
  /// mismatched combination is rejected instead of silently misused.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Copy of this graph with edge weights replaced from a map keyed by
  /// (min id, max id); edges absent from the map get `missing`.
  RoadGraph with_edge_weights(
      const std::map<std::pair<NodeId, NodeId>, double>& weights,
      double missing = 0.0) const;

 private:
  std::vector<NodeRecord> nodes_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Arc>> adjacency_;
  std::optional<ProjectionOrigin> origin_;
  std::uint64_t fingerprint_ = 0;
};

/// An ordered walk through the graph, stored as the node sequence. Every
/// consecutive pair must be an edge; length() is the edge count (>= 1).
class Trajectory {
 public:
  Trajectory(const RoadGraph& graph, std::vector<NodeId> node_seq);

  const std::vector<NodeId>& node_seq() const { return node_seq_; }
  /// Node indices resolved during validation against the source graph.
  const std::vector<std::uint32_t>& index_seq() const { return index_seq_; }
  std::size_t length() const { return node_seq_.size() - 1; }

 private:
  std::vector<NodeId> node_seq_;
  std::vector<std::uint32_t> index_seq_;
};

class TrajectorySet {
 public:
  TrajectorySet(const RoadGraph& graph, std::vector<Trajectory> trajectories);

  const std::vector<Trajectory>& trajectories() const { return trajectories_; }
  std::size_t size() const { return trajectories_.size(); }
  bool empty() const { return trajectories_.empty(); }
  std::uint64_t graph_fingerprint() const { return graph_fingerprint_; }

 private:
  std::vector<Trajectory> trajectories_;
  std::uint64_t graph_fingerprint_ = 0;
};

/// Unweighted shortest-path hop counts from a source index; -1 marks nodes
/// beyond `cutoff` or unreachable. cutoff < 0 means unbounded. Neighbor
/// expansion follows ascending node id.
std::vector<std::int32_t> bfs_hops(const RoadGraph& graph, std::size_t source_index,
                                   std::int32_t cutoff = -1);

/// Id-keyed variant of bfs_hops; omits unreachable nodes and nodes beyond
/// the cutoff. Throws ValidationError for an unknown source.
std::map<NodeId, int> hop_distances(const RoadGraph& graph, NodeId source,
                                    std::optional<int> cutoff = std::nullopt);

/// Connected components as index lists; components ordered by their smallest
/// node index, members ascending.
std::vector<std::vector<std::size_t>> connected_components(const RoadGraph& graph);

bool is_connected(const RoadGraph& graph);

}  // namespace sniff
