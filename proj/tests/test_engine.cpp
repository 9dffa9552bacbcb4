#include <doctest.h>

#include "hexnc/hexcode.hpp"
#include "hexnc/linenet.hpp"
#include "hexnc/streams.hpp"

using namespace hexnc;

namespace {

std::function<std::pair<int, int>(NodeId)> hex_label(const HexGrid& g) {
    return [&g](NodeId n) {
        const TriCoord& p = g.coord(n);
        return std::pair<int, int>{p.c, p.r};
    };
}

std::vector<SessionId> hex_sessions(const HexGrid& g) {
    std::vector<SessionId> out;
    for (const auto& pl : g.place_sessions()) out.push_back(pl.session);
    return out;
}

}  // namespace

TEST_CASE("all-zero sources yield all-zero payloads") {
    HexGrid g(5);
    Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), hex_decoders<Bit>(g), zero_sources<Bit>());
    Trace<Bit> trace = engine.run(10);
    for (const auto& tr : trace.transmissions) CHECK(tr.payload.is_zero());
    for (const auto& outputs : trace.decoded)
        for (const auto& v : outputs) CHECK(v.is_zero());
}

TEST_CASE("every node transmits each slot: K=4 has 28 parts") {
    HexGrid g(4);
    Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), {}, zero_sources<Bit>());
    Trace<Bit> trace = engine.run(1);
    CHECK(trace.per_slot_count == std::vector<int>{28});  // 1 internal + 3 * 9 border parts
}

TEST_CASE("line N=3 uses 3 transmissions per slot") {
    Engine<Bit> engine(build_line(3), line_behaviors<Bit>(3), line_decoders<Bit>(3), zero_sources<Bit>());
    Trace<Bit> trace = engine.run(5);
    for (int count : trace.per_slot_count) CHECK(count == 3);
}

TEST_CASE("identical runs serialize byte-for-byte identically") {
    HexGrid g(4);
    auto run_once = [&g] {
        BitStreams streams(1234, hex_sessions(g), 12);
        Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), hex_decoders<Bit>(g), streams.source_fn());
        Trace<Bit> trace = engine.run(12);
        return serialize_trace(trace, hex_label(g));
    };
    std::string a = run_once(), b = run_once();
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("concrete payloads equal symbolic evaluations (superposition)") {
    for (int K = 2; K <= 6; ++K) {
        HexGrid g(K);
        const int T = 4 * K;
        BitStreams streams(K * 17 + 5, hex_sessions(g), T);

        Engine<Bit> bit_engine(g.topology(), hex_behaviors<Bit>(g), {}, streams.source_fn());
        Trace<Bit> bit_trace = bit_engine.run(T);
        Engine<LinComb> sym_engine(g.topology(), hex_behaviors<LinComb>(g), {}, symbolic_sources());
        Trace<LinComb> sym_trace = sym_engine.run(T);

        REQUIRE(bit_trace.transmissions.size() == sym_trace.transmissions.size());
        for (size_t i = 0; i < bit_trace.transmissions.size(); ++i) {
            const auto& b = bit_trace.transmissions[i];
            const auto& s = sym_trace.transmissions[i];
            REQUIRE(b.node == s.node);
            REQUIRE(b.slot == s.slot);
            REQUIRE(b.part == s.part);
            CHECK(b.payload == streams.eval(s.payload));
        }
    }
}

TEST_CASE("transmission counts do not depend on payload values") {
    HexGrid g(5);
    auto counts_for_seed = [&g](std::uint32_t seed) {
        BitStreams streams(seed, hex_sessions(g), 10);
        Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), {}, streams.source_fn());
        return engine.run(10).per_slot_count;
    };
    CHECK(counts_for_seed(1) == counts_for_seed(999));
}

TEST_CASE("energy report averages") {
    EnergyReport r = energy(std::vector<int>{3, 3, 3, 3}, 1);
    CHECK(r.total == 12);
    CHECK(r.average == doctest::Approx(3.0));
    CHECK(r.steady_average == doctest::Approx(3.0));
    CHECK_THROWS_AS(energy(std::vector<int>{1}, 1), InvalidParameter);
}

TEST_CASE("reading a same-slot foreign transmission is a causality violation") {
    Topology t = build_line(2);
    std::vector<Behavior<Bit>> behaviors;
    behaviors.push_back([](const StepContext<Bit>& ctx) {
        return Emission<Bit>{{Part{}, ctx.transmitted(1, Part{}, ctx.slot())}};  // same slot, foreign
    });
    behaviors.push_back([](const StepContext<Bit>&) { return Emission<Bit>{{Part{}, Bit{}}}; });
    Engine<Bit> engine(t, behaviors, {}, zero_sources<Bit>());
    CHECK_THROWS_AS(engine.run(2), CausalityViolation);
}

TEST_CASE("reads beyond the history window are rejected") {
    Topology t = build_line(2);
    std::vector<Behavior<Bit>> behaviors;
    behaviors.push_back([](const StepContext<Bit>& ctx) {
        return Emission<Bit>{{Part{}, ctx.transmitted(1, Part{}, ctx.slot() - 5)}};
    });
    behaviors.push_back([](const StepContext<Bit>&) { return Emission<Bit>{{Part{}, Bit{}}}; });
    Engine<Bit> engine(t, behaviors, {}, zero_sources<Bit>(), /*window=*/4);
    CHECK_THROWS_AS(engine.run(8), HistoryWindowExceeded);
}

TEST_CASE("a missing behavior is a configuration error") {
    Topology t = build_line(3);
    std::vector<Behavior<Bit>> behaviors(2);  // one short
    CHECK_THROWS_AS(Engine<Bit>(t, behaviors, {}, zero_sources<Bit>()), ConfigError);
}
