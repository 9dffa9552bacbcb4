#pragma once

#include <map>
#include <random>
#include <vector>

#include "hexnc/engine.hpp"

namespace hexnc {

// Deterministic per-session bit streams. The same (seed, sessions, horizon)
// always produces the same streams, independent of query order.
class BitStreams {
public:
    BitStreams(std::uint32_t seed, const std::vector<SessionId>& sessions, int horizon) {
        std::mt19937 rng(seed);
        for (const auto& s : sessions) {
            auto& v = streams_[s];
            v.resize(static_cast<size_t>(horizon) + 1);
            for (int t = 1; t <= horizon; ++t) v[t] = static_cast<std::uint8_t>(rng() & 1u);
        }
    }

    Bit at(const SessionId& s, int t) const {
        if (t <= 0) return Bit{};
        const auto& v = streams_.at(s);
        if (t >= static_cast<int>(v.size())) throw InvalidParameter("BitStreams: slot beyond horizon");
        return Bit{v[static_cast<size_t>(t)]};
    }

    SourceFn<Bit> source_fn() const {
        return [this](const SessionId& s, int t) { return at(s, t); };
    }

    // Evaluate a symbolic combination against these streams.
    Bit eval(const LinComb& c) const {
        return c.eval([this](const SymbolTerm& t) { return at(t.session, t.time); });
    }

private:
    std::map<SessionId, std::vector<std::uint8_t>> streams_;
};

}  // namespace hexnc
