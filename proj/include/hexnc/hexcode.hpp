#pragma once

#include <array>

#include "hexnc/engine.hpp"
#include "hexnc/topology.hpp"

namespace hexnc {

// Per-node sextuple (i, j, k, dx, dy, dz): index and delay of the delayed
// partial-sum stream the node carries for each of the three session types.
struct NodeConstants {
    int i, j, k;
    int dx, dy, dz;

    friend bool operator==(const NodeConstants&, const NodeConstants&) = default;

    int index(SessionKind kind) const {
        return kind == SessionKind::X ? i : kind == SessionKind::Y ? j : k;
    }
    int delay(SessionKind kind) const {
        return kind == SessionKind::X ? dx : kind == SessionKind::Y ? dy : dz;
    }
};

// Closed form at (c, r) with s = K + 2 - c - r:
//   i = c, j = r, k = s, dx = K - s, dy = K - c, dz = K - r.
// Equivalent to propagating the neighbour index table outward from the
// three corner initializations.
inline NodeConstants node_constants(const TriCoord& p, int K) {
    const int s = K + 2 - p.c - p.r;
    return NodeConstants{p.c, p.r, s, K - s, K - p.c, K - p.r};
}

// Partial-sum stream: tilde(X, i, t) = { x_{i-tau}(t-tau) : 0 <= tau < i },
// terms at time <= 0 dropped.
inline LinComb tilde(SessionKind kind, int index, int t) {
    if (index < 1) throw InvalidParameter("tilde: index must be >= 1");
    LinComb c;
    for (int tau = 0; tau < index; ++tau) c += LinComb::single(SessionId{kind, index - tau}, t - tau);
    return c;
}

inline SessionKind rotated(SessionKind k, int steps) {
    int v = static_cast<int>(k);  // X,Y,Z are 0,1,2
    if (v > 2) throw InvalidParameter("rotated: only triangle session kinds rotate");
    return static_cast<SessionKind>((v + ((steps % 3) + 3) % 3) % 3);
}

namespace detail {

// Common neighbour-part read: zero when t <= 0 is handled by the context.
template <class P>
P neighbor_part(const StepContext<P>& ctx, const HexGrid& g, const TriCoord& p, Direction d, SessionKind kind,
                int slot) {
    auto q = g.neighbor(p, d);
    if (!q) throw ConfigError("hex behavior: required neighbour " + std::string(to_string(d)) + " of " +
                              to_string(p) + " does not exist");
    return ctx.transmitted(g.id(*q), part_of(kind), slot);
}

template <class P>
P neighbor_whole(const StepContext<P>& ctx, const HexGrid& g, const TriCoord& p, Direction d, int slot) {
    auto q = g.neighbor(p, d);
    if (!q) throw ConfigError("hex behavior: required neighbour " + std::string(to_string(d)) + " of " +
                              to_string(p) + " does not exist");
    return ctx.whole(g.id(*q), slot);
}

}  // namespace detail

// Step function of one node of the hex code. Internal nodes emit a single
// whole symbol from the depth-2 neighbour recurrence; edge and corner
// nodes emit the three split parts. The bottom edge, diagonal edge and the
// two remaining corners run the rotated images of the left-edge and
// top-corner rules (directions A->C->E, B->D->F; roles x->y->z per step).
template <class P>
Behavior<P> hex_behavior(const HexGrid& g, const TriCoord& p) {
    const NodeConstants nc = node_constants(p, g.K());
    const NodeClass cls = g.node_class(p);

    if (cls == NodeClass::Internal) {
        return [&g, p](const StepContext<P>& ctx) {
            const int t = ctx.slot();
            P v = detail::neighbor_whole(ctx, g, p, Direction::A, t - 2);
            v += detail::neighbor_whole(ctx, g, p, Direction::B, t - 1);
            v += detail::neighbor_whole(ctx, g, p, Direction::C, t - 2);
            v += detail::neighbor_whole(ctx, g, p, Direction::D, t - 1);
            v += detail::neighbor_whole(ctx, g, p, Direction::E, t - 2);
            v += detail::neighbor_whole(ctx, g, p, Direction::F, t - 1);
            if (t - 3 >= 1) v += ctx.whole(ctx.self(), t - 3);
            return Emission<P>{{Part{}, v}};
        };
    }

    // Rotation step that maps the reference rules onto this node's class.
    int m = 0;
    switch (cls) {
        case NodeClass::EdgeLeft:
        case NodeClass::CornerTop: m = 0; break;
        case NodeClass::EdgeDiagonal:
        case NodeClass::CornerBottomRight: m = 1; break;
        case NodeClass::EdgeBottom:
        case NodeClass::CornerBottomLeft: m = 2; break;
        default: break;
    }
    const SessionKind r0 = rotated(SessionKind::X, m);  // role with the co-located edge source
    const SessionKind r1 = rotated(SessionKind::Y, m);
    const SessionKind r2 = rotated(SessionKind::Z, m);
    const bool corner = cls == NodeClass::CornerTop || cls == NodeClass::CornerBottomRight ||
                        cls == NodeClass::CornerBottomLeft;

    if (corner) {
        // Reference (top corner): R_x = x_K(t+1-dx) + E_x(t-2),
        // R_y = y_1(t+1-dy), R_z = D_z(t-1), with t+1 the emission slot.
        return [&g, p, nc, m, r0, r1, r2](const StepContext<P>& ctx) {
            const int t = ctx.slot();
            P vx = ctx.source(SessionId{r0, nc.index(r0)}, t - nc.delay(r0));
            vx += detail::neighbor_part(ctx, g, p, rotated(Direction::E, m), r0, t - 2);
            P vy = ctx.source(SessionId{r1, nc.index(r1)}, t - nc.delay(r1));
            P vz = detail::neighbor_part(ctx, g, p, rotated(Direction::D, m), r2, t - 1);
            return Emission<P>{{part_of(r0), vx}, {part_of(r1), vy}, {part_of(r2), vz}};
        };
    }

    // Reference (left edge): Q_x = x_i(t+1-dx) + E_x(t-2), Q_y = B_y(t-1),
    // Q_z = B_z(t-1) + C(t-2) + D(t-1) + E_x(t-2) + Q_x(t-3).
    return [&g, p, nc, m, r0, r1, r2](const StepContext<P>& ctx) {
        const int t = ctx.slot();
        P vx = ctx.source(SessionId{r0, nc.index(r0)}, t - nc.delay(r0));
        vx += detail::neighbor_part(ctx, g, p, rotated(Direction::E, m), r0, t - 2);
        P vy = detail::neighbor_part(ctx, g, p, rotated(Direction::B, m), r1, t - 1);
        P vz = detail::neighbor_part(ctx, g, p, rotated(Direction::B, m), r2, t - 1);
        vz += detail::neighbor_whole(ctx, g, p, rotated(Direction::C, m), t - 2);
        vz += detail::neighbor_whole(ctx, g, p, rotated(Direction::D, m), t - 1);
        vz += detail::neighbor_part(ctx, g, p, rotated(Direction::E, m), r0, t - 2);
        if (t - 3 >= 1) vz += ctx.transmitted(ctx.self(), part_of(r0), t - 3);
        return Emission<P>{{part_of(r0), vx}, {part_of(r1), vy}, {part_of(r2), vz}};
    };
}

template <class P>
std::vector<Behavior<P>> hex_behaviors(const HexGrid& g) {
    std::vector<Behavior<P>> out;
    out.reserve(g.node_count());
    for (NodeId n = 0; n < g.node_count(); ++n) out.push_back(hex_behavior<P>(g, g.coord(n)));
    return out;
}

// Receiver decode rules. Every receiver recovers its session's source
// symbol with delay exactly K-1:
//   z_k at (c,1), c<K:  Q_z(t) + B_z(t-1)     z_1 at the top corner: R_z(t)
//   x_i on the diagonal, i>=2:  P_x(t) + D_x(t-1); x_1 at (1,K): P_x(t)
//   y_j on the bottom edge, j>=2:  P_y(t) + F_y(t-1); y_1 at (1,1): P_y(t)
template <class P>
std::vector<DecoderSpec<P>> hex_decoders(const HexGrid& g) {
    std::vector<DecoderSpec<P>> out;
    for (const auto& pl : g.place_sessions()) {
        const TriCoord rx = pl.receiver;
        const SessionKind kind = pl.session.kind;
        const bool direct = pl.session.index == 1;
        Direction helper = kind == SessionKind::Z   ? Direction::B
                           : kind == SessionKind::X ? Direction::D
                                                    : Direction::F;
        auto fn = [&g, rx, kind, direct, helper](const StepContext<P>& ctx) {
            P v = ctx.transmitted(ctx.self(), part_of(kind), ctx.slot());
            if (!direct) v += detail::neighbor_part(ctx, g, rx, helper, kind, ctx.slot() - 1);
            return v;
        };
        out.push_back({pl.session, g.id(rx), std::move(fn)});
    }
    return out;
}

}  // namespace hexnc
