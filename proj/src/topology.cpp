#include "alertval/topology.hpp"

#include "alertval/rng.hpp"

#include <cmath>

namespace alertval::sim {

const std::set<NodeId>& Topology::neighbors(NodeId id) const {
    static const std::set<NodeId> kEmpty;
    auto it = neighbor_map.find(id);
    return it == neighbor_map.end() ? kEmpty : it->second;
}

unsigned Topology::hops(NodeId a, NodeId b) const {
    if (a == b) return 0;
    const auto& pa = positions.at(a);
    const auto& pb = positions.at(b);
    const double d = std::hypot(pa.first - pb.first, pa.second - pb.second);
    if (d <= radio_range) return 1;
    return static_cast<unsigned>(std::ceil(d / radio_range));
}

Topology build_topology(const TopologyConfig& config, std::uint64_t seed) {
    if (config.cluster_size < 2) throw ConfigError("cluster_size must be >= 2");
    if (config.cluster_count < 1) throw ConfigError("cluster_count must be >= 1");
    if (config.radio_range <= 0.0) throw ConfigError("radio_range must be > 0");
    if (config.monitors_per_cluster < 1 ||
        config.monitors_per_cluster > config.cluster_size - 1)
        throw ConfigError("monitors_per_cluster must be in [1, cluster_size-1]");

    Rng rng = Rng(seed).fork(1);

    Topology topo;
    topo.radio_range = config.radio_range;

    const unsigned side =
        static_cast<unsigned>(std::ceil(std::sqrt(static_cast<double>(config.cluster_size))));
    const double cell_span = side * config.grid_spacing;
    // Keep clusters out of each other's radio range.
    const double cell_stride = cell_span + config.radio_range + config.grid_spacing;

    NodeId next_id = 0;
    for (unsigned c = 0; c < config.cluster_count; ++c) {
        std::vector<NodeId> members;
        const double ox = c * cell_stride;
        for (unsigned i = 0; i < config.cluster_size; ++i) {
            const NodeId id = next_id++;
            members.push_back(id);
            topo.nodes.push_back(id);
            topo.cluster_of[id] = c;
            double x = 0.0, y = 0.0;
            if (config.placement == Placement::Grid) {
                x = ox + (i % side) * config.grid_spacing;
                y = (i / side) * config.grid_spacing;
            } else {
                x = ox + rng.uniform() * cell_span;
                y = rng.uniform() * cell_span;
            }
            topo.positions.emplace_back(x, y);
        }
        topo.clusters.push_back(members);
        for (unsigned i = 1; i <= config.monitors_per_cluster; ++i)
            topo.monitors.insert(members[i]);
    }

    for (NodeId id : topo.nodes) topo.neighbor_map[id]; // ensure entries exist
    for (std::size_t a = 0; a < topo.nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < topo.nodes.size(); ++b) {
            const auto& pa = topo.positions[a];
            const auto& pb = topo.positions[b];
            const double d = std::hypot(pa.first - pb.first, pa.second - pb.second);
            if (d <= config.radio_range) {
                topo.neighbor_map[topo.nodes[a]].insert(topo.nodes[b]);
                topo.neighbor_map[topo.nodes[b]].insert(topo.nodes[a]);
            }
        }
    }

    for (unsigned c = 0; c < config.cluster_count; ++c) {
        const auto& members = topo.clusters[c];
        for (NodeId id : members) {
            bool has_in_cluster_neighbor = false;
            for (NodeId nb : topo.neighbor_map[id])
                if (topo.cluster_of[nb] == c) { has_in_cluster_neighbor = true; break; }
            if (!has_in_cluster_neighbor)
                throw ConfigError("node " + std::to_string(id) + " in cluster " +
                                  std::to_string(c) +
                                  " has no in-cluster neighbor; increase radio_range");
        }
        // All monitoring nodes of a cluster must reach each other directly.
        for (unsigned i = 1; i <= config.monitors_per_cluster; ++i) {
            for (unsigned j = i + 1; j <= config.monitors_per_cluster; ++j) {
                const NodeId a = members[i], b = members[j];
                if (!topo.neighbor_map[a].count(b))
                    throw ConfigError("monitors " + std::to_string(a) + " and " +
                                      std::to_string(b) + " in cluster " + std::to_string(c) +
                                      " are out of radio range " +
                                      std::to_string(config.radio_range) +
                                      " of each other");
            }
        }
    }
    return topo;
}

std::set<NodeId> common_neighbors(const Topology& topology, NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("common_neighbors requires distinct nodes");
    const auto& na = topology.neighbors(a);
    const auto& nb = topology.neighbors(b);
    std::set<NodeId> out;
    for (NodeId id : na)
        if (nb.count(id)) out.insert(id);
    return out;
}

} // namespace alertval::sim
