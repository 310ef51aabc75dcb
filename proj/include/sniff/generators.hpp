#pragma once

#include <cstdint>

#include "sniff/graph.hpp"

namespace sniff {

/// rows x cols lattice with ids assigned row-major from 0 and coordinates on
/// a regular grid of the given spacing. rows, cols >= 2.
RoadGraph generate_grid_graph(int rows, int cols, double spacing,
                              std::size_t max_nodes = 1000000);

/// Random geometric graph: n nodes uniform in the unit square (stored scaled
/// to meters), edge iff Euclidean distance <= radius. If the result is
/// disconnected only the largest connected component is kept (original ids
/// preserved). Deterministic for a fixed seed. n >= 2, 0 < radius <= 1.
RoadGraph generate_geometric_graph(int n, double radius, std::uint64_t seed);

/// Meters per unit-square side used by generate_geometric_graph.
inline constexpr double kGeometricScaleMeters = 1000.0;

/// Shortest-path trajectories between random origin/destination pairs.
/// Paths follow BFS with ties broken by smallest neighbor id; pairs closer
/// than min_len hops are rejected and resampled. Throws CapacityError with
/// the achieved count once the resample budget (default 1000 * count) is
/// spent. Requires a connected graph and min_len >= 1.
TrajectorySet generate_trajectories(const RoadGraph& graph, std::size_t count,
                                    std::size_t min_len, std::uint64_t seed,
                                    std::size_t max_resamples = 0);

}  // namespace sniff
