#pragma once

#include "hexnc/engine.hpp"
#include "hexnc/topology.hpp"

namespace hexnc {

inline const SessionId kLineA{SessionKind::A, 1};  // node 1 -> node N
inline const SessionId kLineB{SessionKind::B, 1};  // node N -> node 1

// Steady-state symbol carried by line node m (1-based) at slot t:
// endpoints transmit their own stream, relays the aligned sum
// a(t-m+1) + b(t-(N-m)).
inline LinComb line_oracle(int m, int N, int t) {
    if (m == 1) return LinComb::single(kLineA, t);
    if (m == N) return LinComb::single(kLineB, t);
    return LinComb::single(kLineA, t - m + 1) + LinComb::single(kLineB, t - (N - m));
}

// Causal recurrences realizing the oracle. Relays sum both neighbours one
// slot back; the depth-2 self term cancels the stale echo, except next to
// an endpoint where the endpoint's depth-3 value is used instead (the
// endpoint transmits a single stream, so its echo lives there).
template <class P>
std::vector<Behavior<P>> line_behaviors(int N) {
    if (N < 2) throw InvalidParameter("line_behaviors: N must be >= 2");
    std::vector<Behavior<P>> out;
    for (int m = 1; m <= N; ++m) {
        if (m == 1 || m == N) {
            SessionId s = m == 1 ? kLineA : kLineB;
            out.push_back([s](const StepContext<P>& ctx) {
                return Emission<P>{{Part{}, ctx.source(s, ctx.slot())}};
            });
            continue;
        }
        const NodeId left = m - 2, right = m, self = m - 1;
        const bool left_end = m == 2, right_end = m == N - 1;
        out.push_back([=](const StepContext<P>& ctx) {
            const int t = ctx.slot();
            P v = ctx.transmitted(left, Part{}, t - 1);
            v += ctx.transmitted(right, Part{}, t - 1);
            if (left_end && right_end) {
                // N == 3: both neighbours are endpoints, no echo to cancel.
            } else if (left_end) {
                v += ctx.transmitted(left, Part{}, t - 3);
            } else if (right_end) {
                v += ctx.transmitted(right, Part{}, t - 3);
            } else {
                v += ctx.transmitted(self, Part{}, t - 2);
            }
            return Emission<P>{{Part{}, v}};
        });
    }
    return out;
}

// Endpoint decoding: node 1 recovers b(t-N+1) = P_2(t-1) + a(t-2) (for
// N >= 3; plain read for N = 2), node N symmetrically. Delay N-1.
template <class P>
std::vector<DecoderSpec<P>> line_decoders(int N) {
    std::vector<DecoderSpec<P>> out;
    auto decode_at = [N](NodeId inner, SessionId own) {
        return [=](const StepContext<P>& ctx) {
            const int t = ctx.slot();
            P v = ctx.transmitted(inner, Part{}, t - 1);
            if (N >= 3) v += ctx.source(own, t - 2);
            return v;
        };
    };
    out.push_back({kLineB, 0, decode_at(1, kLineA)});
    out.push_back({kLineA, N - 1, decode_at(N - 2, kLineB)});
    return out;
}

// Energy per delivered symbol pair: coding N, routing 2(N-1).
struct LineBenefit {
    long long num, den;  // reduced 2(N-1)/N
    double value;
};

LineBenefit line_benefit(int N);

}  // namespace hexnc
