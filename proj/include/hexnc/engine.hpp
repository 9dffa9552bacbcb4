#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hexnc/gf2.hpp"
#include "hexnc/topology.hpp"

namespace hexnc {

struct CausalityViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct HistoryWindowExceeded : std::logic_error {
    using std::logic_error::logic_error;
};
struct ConfigError : std::logic_error {
    using std::logic_error::logic_error;
};

// Tag of one emitted symbol. Border nodes of the hex code emit the three
// parts x/y/z each slot, internal nodes a single whole. The routing
// baseline reuses the session kind plus index (e.g. "x3") to keep parallel
// per-session emissions distinct.
struct Part {
    enum class Tag : std::uint8_t { Whole, X, Y, Z, A, B } tag = Tag::Whole;
    int idx = 0;

    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

inline Part part_of(SessionKind k) {
    switch (k) {
        case SessionKind::X: return Part{Part::Tag::X, 0};
        case SessionKind::Y: return Part{Part::Tag::Y, 0};
        case SessionKind::Z: return Part{Part::Tag::Z, 0};
        case SessionKind::A: return Part{Part::Tag::A, 0};
        case SessionKind::B: return Part{Part::Tag::B, 0};
    }
    return Part{};
}

inline std::string to_string(const Part& p) {
    std::string s;
    switch (p.tag) {
        case Part::Tag::Whole: s = "w"; break;
        case Part::Tag::X: s = "x"; break;
        case Part::Tag::Y: s = "y"; break;
        case Part::Tag::Z: s = "z"; break;
        case Part::Tag::A: s = "a"; break;
        case Part::Tag::B: s = "b"; break;
    }
    if (p.idx != 0) s += std::to_string(p.idx);
    return s;
}

template <class P>
struct Transmission {
    NodeId node;
    int slot;
    Part part;
    P payload;
};

template <class P>
using SourceFn = std::function<P(const SessionId&, int)>;  // zero for t <= 0

template <class P>
using Emission = std::vector<std::pair<Part, P>>;

template <class P>
class Engine;

// Read-only view handed to behaviors and decoders. A behavior computing
// slot t may read foreign transmissions from slots < t, its own past
// transmissions, and its own source symbols at slots <= t. Decoders may
// additionally read their own node's slot-t emission.
template <class P>
class StepContext {
public:
    int slot() const { return slot_; }
    NodeId self() const { return self_; }

    P transmitted(NodeId n, Part part, int s) const {
        check_read(n, s);
        return engine_->lookup(n, part, s);
    }

    // Full symbol of a node: its whole emission, or the sum of its parts
    // when the node splits (border nodes).
    P whole(NodeId n, int s) const {
        check_read(n, s);
        return engine_->lookup_whole(n, s);
    }

    P source(const SessionId& sid, int s) const {
        if (s > slot_)
            throw CausalityViolation("source symbol requested from the future at slot " + std::to_string(slot_));
        if (s <= 0) return P{};
        return engine_->sources_(sid, s);
    }

private:
    friend class Engine<P>;
    StepContext(const Engine<P>* e, NodeId self, int slot, bool decode)
        : engine_(e), self_(self), slot_(slot), decode_(decode) {}

    void check_read(NodeId n, int s) const {
        const bool own_now = decode_ && n == self_ && s == slot_;
        if (s >= slot_ && !own_now)
            throw CausalityViolation("transmission (" + std::to_string(n) + ", slot " + std::to_string(s) +
                                     ") requested while computing slot " + std::to_string(slot_));
        if (s >= 1 && slot_ - s > engine_->window_)
            throw HistoryWindowExceeded("read at depth " + std::to_string(slot_ - s) + " exceeds window " +
                                        std::to_string(engine_->window_));
    }

    const Engine<P>* engine_;
    NodeId self_;
    int slot_;
    bool decode_;
};

template <class P>
using Behavior = std::function<Emission<P>(const StepContext<P>&)>;

template <class P>
struct DecoderSpec {
    SessionId session;
    NodeId node;
    std::function<P(const StepContext<P>&)> decode;
};

template <class P>
struct Trace {
    int horizon = 0;
    std::vector<Transmission<P>> transmissions;
    std::vector<int> per_slot_count;                          // index t-1
    std::vector<SessionId> sessions;                          // decode order
    std::vector<std::vector<P>> decoded;                      // [session][t-1]

    const P* find(NodeId n, int slot, Part part) const {
        for (const auto& tr : transmissions)
            if (tr.node == n && tr.slot == slot && tr.part == part) return &tr.payload;
        return nullptr;
    }
};

struct EnergyReport {
    std::vector<int> per_slot;
    long long total = 0;
    double average = 0.0;           // full horizon
    double steady_average = 0.0;    // slots > warmup; one round delivered per slot
    int warmup = 0;
};

inline EnergyReport energy(const std::vector<int>& per_slot, int warmup) {
    if (warmup >= static_cast<int>(per_slot.size()))
        throw InvalidParameter("energy: warmup must be smaller than the horizon");
    EnergyReport r;
    r.per_slot = per_slot;
    r.warmup = warmup;
    r.total = std::accumulate(per_slot.begin(), per_slot.end(), 0LL);
    r.average = static_cast<double>(r.total) / static_cast<double>(per_slot.size());
    long long tail = std::accumulate(per_slot.begin() + warmup, per_slot.end(), 0LL);
    r.steady_average = static_cast<double>(tail) / static_cast<double>(per_slot.size() - warmup);
    return r;
}

template <class P>
inline EnergyReport energy(const Trace<P>& trace, int warmup) {
    return energy(trace.per_slot_count, warmup);
}

// Slot-synchronous broadcast simulation: behaviors are evaluated in node
// order for t = 1..T, every emission reaches all neighbours one slot later
// (enforced by the context read rules), decoders run after the slot's
// emissions are fixed.
template <class P>
class Engine {
public:
    Engine(const Topology& topo, std::vector<Behavior<P>> behaviors, std::vector<DecoderSpec<P>> decoders,
           SourceFn<P> sources, int window = 4)
        : topo_(topo),
          behaviors_(std::move(behaviors)),
          decoders_(std::move(decoders)),
          sources_(std::move(sources)),
          window_(window) {
        if (static_cast<int>(behaviors_.size()) != topo_.node_count)
            throw ConfigError("Engine: every node needs a behavior");
    }

    Trace<P> run(int horizon) {
        Trace<P> trace;
        trace.horizon = horizon;
        for (const auto& d : decoders_) trace.sessions.push_back(d.session);
        trace.decoded.assign(decoders_.size(), {});

        emitted_.clear();
        for (int t = 1; t <= horizon; ++t) {
            std::vector<Emission<P>> slot_out(topo_.node_count);
            for (NodeId n = 0; n < topo_.node_count; ++n) {
                StepContext<P> ctx(this, n, t, /*decode=*/false);
                slot_out[n] = behaviors_[n](ctx);
            }
            emitted_.push_back(std::move(slot_out));

            int count = 0;
            for (NodeId n = 0; n < topo_.node_count; ++n) {
                for (const auto& [part, payload] : emitted_.back()[n]) {
                    trace.transmissions.push_back({n, t, part, payload});
                    ++count;
                }
            }
            trace.per_slot_count.push_back(count);

            for (size_t d = 0; d < decoders_.size(); ++d) {
                StepContext<P> ctx(this, decoders_[d].node, t, /*decode=*/true);
                trace.decoded[d].push_back(decoders_[d].decode(ctx));
            }
        }
        return trace;
    }

private:
    friend class StepContext<P>;

    P lookup(NodeId n, Part part, int s) const {
        if (s <= 0) return P{};
        for (const auto& [p, payload] : emitted_[s - 1][n])
            if (p == part) return payload;
        throw ConfigError("no transmission (" + std::to_string(n) + ", slot " + std::to_string(s) + ", part " +
                          to_string(part) + ")");
    }

    P lookup_whole(NodeId n, int s) const {
        if (s <= 0) return P{};
        P acc{};
        if (emitted_[s - 1][n].empty())
            throw ConfigError("node " + std::to_string(n) + " emitted nothing at slot " + std::to_string(s));
        for (const auto& [p, payload] : emitted_[s - 1][n]) acc += payload;
        return acc;
    }

    Topology topo_;
    std::vector<Behavior<P>> behaviors_;
    std::vector<DecoderSpec<P>> decoders_;
    SourceFn<P> sources_;
    int window_;
    std::vector<std::vector<Emission<P>>> emitted_;  // [t-1][node]
};

inline std::string payload_string(const Bit& b) { return b.value ? "1" : "0"; }
inline std::string payload_string(const LinComb& c) { return to_string(c); }

// Line-oriented trace format, one record per transmission:
//   slot,node_c,node_r,part,payload
template <class P>
std::string serialize_trace(const Trace<P>& trace,
                            const std::function<std::pair<int, int>(NodeId)>& label) {
    std::ostringstream out;
    for (const auto& tr : trace.transmissions) {
        auto [c, r] = label(tr.node);
        out << tr.slot << "," << c << "," << r << "," << to_string(tr.part) << ","
            << payload_string(tr.payload) << "\n";
    }
    return out.str();
}

// Zero-valued sources, any payload type.
template <class P>
SourceFn<P> zero_sources() {
    return [](const SessionId&, int) { return P{}; };
}

// Symbolic sources: the slot-t symbol of a stream is the singleton
// combination {session@t}.
inline SourceFn<LinComb> symbolic_sources() {
    return [](const SessionId& s, int t) { return LinComb::single(s, t); };
}

}  // namespace hexnc
