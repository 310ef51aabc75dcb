#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sniff/graph.hpp"

namespace sniff {

enum class CoverAlgorithm { GavrilYannakakis, BarYehudaEven, Exact };

const char* to_string(CoverAlgorithm algorithm);
CoverAlgorithm cover_algorithm_from_string(std::string_view name);

/// A vertex cover: every edge of the source graph has at least one endpoint
/// in members. Members are kept in ascending id order.
struct CoverSet {
  std::vector<NodeId> members;
  CoverAlgorithm algorithm = CoverAlgorithm::GavrilYannakakis;
  std::uint64_t graph_fingerprint = 0;

  bool contains(NodeId id) const;
};

/// 2-approximation via a maximal matching built by scanning edges in
/// ascending (min id, max id) order; both endpoints of every matched edge
/// enter the cover. Deterministic.
CoverSet cover_gavril_yannakakis(const RoadGraph& graph);

/// Local-ratio cover: first strip vertex-disjoint triangles (scan nodes in
/// ascending id, neighbor pairs in ascending id; all three vertices enter
/// the cover and leave the working graph), then cover the triangle-free
/// remainder the same way as the matching algorithm. Still within twice the
/// optimum; on road-like graphs usually smaller than the pure matching
/// cover. Deterministic.
CoverSet cover_bar_yehuda_even(const RoadGraph& graph);

/// Minimum vertex cover by branch and bound; among minimum covers the
/// lexicographically smallest member set is returned. Throws CapacityError
/// when the graph exceeds node_limit.
CoverSet cover_exact(const RoadGraph& graph, std::size_t node_limit = 32);

struct CoverCheck {
  bool valid = false;
  std::vector<std::pair<NodeId, NodeId>> uncovered;  // ascending (u, v)
};

/// True iff every edge has an endpoint in members; otherwise reports all
/// violating edges. Throws ValidationError if a member is not in the graph.
CoverCheck verify_cover(const RoadGraph& graph, const std::vector<NodeId>& members);

}  // namespace sniff
