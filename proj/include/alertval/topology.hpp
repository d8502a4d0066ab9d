#pragma once

#include "alertval/types.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alertval {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace sim {

enum class Placement : std::uint8_t { Grid, UniformRandom };

struct TopologyConfig {
    unsigned cluster_count = 1;
    unsigned cluster_size = 8; // n >= 2; node 0 of each cluster is the head
    Placement placement = Placement::Grid;
    double radio_range = 1.6;
    double grid_spacing = 1.0;
    unsigned monitors_per_cluster = 3;
};

struct Topology {
    std::vector<NodeId> nodes;
    std::vector<std::vector<NodeId>> clusters;
    std::map<NodeId, unsigned> cluster_of;
    std::map<NodeId, std::set<NodeId>> neighbor_map; // symmetric, irreflexive
    std::set<NodeId> monitors;
    std::vector<std::pair<double, double>> positions; // indexed by NodeId
    double radio_range = 0.0;

    NodeId head_of(unsigned cluster) const { return clusters.at(cluster).front(); }
    bool is_monitor(NodeId id) const { return monitors.count(id) > 0; }
    const std::set<NodeId>& neighbors(NodeId id) const;

    // Hop distance used to scale propagation time; neighbors are one hop,
    // anything farther takes ceil(distance / radio_range) hops.
    unsigned hops(NodeId a, NodeId b) const;
};

// Deterministic cluster-by-cluster deployment. Grid placement lays each
// cluster out on its own square lattice; uniform-random scatters nodes in a
// square cell of comparable density. Cells are separated by more than the
// radio range so clusters stay radio-isolated. Throws ConfigError when the
// range leaves a node without in-cluster neighbors or the monitors are not
// mutually reachable.
Topology build_topology(const TopologyConfig& config, std::uint64_t seed);

// Exact neighbor-set intersection; a and b must differ.
std::set<NodeId> common_neighbors(const Topology& topology, NodeId a, NodeId b);

} // namespace sim
} // namespace alertval
