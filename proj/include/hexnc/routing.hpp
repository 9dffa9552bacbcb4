#pragma once

#include "hexnc/engine.hpp"
#include "hexnc/topology.hpp"

namespace hexnc {

// Shortest route of one session; hops = path length - 1.
struct Route {
    SessionId session;
    std::vector<NodeId> path;  // source first, receiver last
    int hops() const { return static_cast<int>(path.size()) - 1; }
};

struct HopTable {
    std::vector<Route> routes;
    long long total_hops() const;
};

// BFS shortest path per session, ties broken lexicographically by node id
// (ids are ordered by (c, r)).
HopTable shortest_paths(const Topology& topo, const std::vector<std::pair<SessionId, std::pair<NodeId, NodeId>>>& sessions);
HopTable shortest_paths(const HexGrid& g);

// Minimum routing cost 3 * C(K, 2); equals the BFS hop sum.
long long routing_energy(int K);

// Store-and-forward pipelining along the shortest routes: the node h hops
// down a route relays the symbol it heard one slot earlier, so each route
// contributes hops() transmissions per slot and delivers with delay
// hops(). Emitted parts are keyed per session to keep relays of several
// sessions distinct.
template <class P>
std::vector<Behavior<P>> routing_behaviors(const Topology& topo, const HopTable& table) {
    struct Item {
        Part part;
        SessionId session;
        int position;    // 0 = source
        NodeId prev;     // position - 1 node, unused for the source
    };
    std::vector<std::vector<Item>> per_node(topo.node_count);
    for (const auto& route : table.routes) {
        Part part{part_of(route.session.kind).tag, route.session.index};
        for (int h = 0; h < route.hops(); ++h)
            per_node[route.path[h]].push_back({part, route.session, h, h > 0 ? route.path[h - 1] : -1});
    }
    std::vector<Behavior<P>> out;
    out.reserve(topo.node_count);
    for (NodeId n = 0; n < topo.node_count; ++n) {
        out.push_back([items = per_node[n]](const StepContext<P>& ctx) {
            Emission<P> em;
            for (const auto& it : items) {
                P v = it.position == 0 ? ctx.source(it.session, ctx.slot())
                                       : ctx.transmitted(it.prev, it.part, ctx.slot() - 1);
                em.push_back({it.part, v});
            }
            return em;
        });
    }
    return out;
}

template <class P>
std::vector<DecoderSpec<P>> routing_decoders(const HopTable& table) {
    std::vector<DecoderSpec<P>> out;
    for (const auto& route : table.routes) {
        const NodeId receiver = route.path.back();
        if (route.hops() == 0) {
            out.push_back({route.session, receiver, [s = route.session](const StepContext<P>& ctx) {
                               return ctx.source(s, ctx.slot());
                           }});
            continue;
        }
        const NodeId last_relay = route.path[route.path.size() - 2];
        Part part{part_of(route.session.kind).tag, route.session.index};
        out.push_back({route.session, receiver, [=](const StepContext<P>& ctx) {
                           return ctx.transmitted(last_relay, part, ctx.slot() - 1);
                       }});
    }
    return out;
}

}  // namespace hexnc
