#include "hexnc/routing.hpp"

#include <algorithm>
#include <deque>

namespace hexnc {

long long HopTable::total_hops() const {
    long long sum = 0;
    for (const auto& r : routes) sum += r.hops();
    return sum;
}

namespace {

std::vector<NodeId> bfs_path(const Topology& topo, NodeId from, NodeId to) {
    std::vector<NodeId> parent(topo.node_count, -1);
    std::vector<int> dist(topo.node_count, -1);
    std::deque<NodeId> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        // sorted neighbour order makes the parent choice lexicographic
        auto nbrs = topo.neighbors[n];
        std::sort(nbrs.begin(), nbrs.end());
        for (NodeId q : nbrs) {
            if (dist[q] == -1) {
                dist[q] = dist[n] + 1;
                parent[q] = n;
                queue.push_back(q);
            }
        }
    }
    if (dist[to] == -1) throw ConfigError("shortest_paths: receiver unreachable");
    std::vector<NodeId> path;
    for (NodeId n = to; n != -1; n = parent[n]) path.push_back(n);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

HopTable shortest_paths(const Topology& topo,
                        const std::vector<std::pair<SessionId, std::pair<NodeId, NodeId>>>& sessions) {
    HopTable table;
    for (const auto& [sid, endpoints] : sessions)
        table.routes.push_back({sid, bfs_path(topo, endpoints.first, endpoints.second)});
    return table;
}

HopTable shortest_paths(const HexGrid& g) {
    Topology topo = g.topology();
    std::vector<std::pair<SessionId, std::pair<NodeId, NodeId>>> sessions;
    for (const auto& pl : g.place_sessions())
        sessions.push_back({pl.session, {g.id(pl.source), g.id(pl.receiver)}});
    return shortest_paths(topo, sessions);
}

long long routing_energy(int K) {
    if (K < 2) throw InvalidParameter("routing_energy: K must be >= 2");
    return 3LL * K * (K - 1) / 2;
}

}  // namespace hexnc
