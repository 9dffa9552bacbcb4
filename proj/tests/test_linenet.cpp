#include <doctest.h>

#include "hexnc/linenet.hpp"
#include "hexnc/streams.hpp"
#include "hexnc/verify.hpp"

using namespace hexnc;

TEST_CASE("line benefit values") {
    CHECK(line_benefit(3).num == 4);
    CHECK(line_benefit(3).den == 3);
    CHECK(line_benefit(2).value == doctest::Approx(1.0));
    CHECK(line_benefit(100).value == doctest::Approx(1.98));
    CHECK_THROWS_AS(line_benefit(1), InvalidParameter);
}

TEST_CASE("line benefit is monotone increasing and below 2") {
    double prev = 0.0;
    for (int N = 2; N <= 2000; ++N) {
        LineBenefit b = line_benefit(N);
        CHECK(b.value < 2.0);
        CHECK(b.value > prev);
        prev = b.value;
    }
}

TEST_CASE("relay closed form") {
    CHECK(line_oracle(3, 5, 12) ==
          LinComb{SymbolTerm{kLineA, 10}, SymbolTerm{kLineB, 10}});
    CHECK(line_oracle(1, 5, 12) == LinComb::single(kLineA, 12));
}

TEST_CASE("recurrence matches the closed form symbolically up to N=12") {
    for (int N = 2; N <= 12; ++N) {
        VerificationReport report = verify_line(N, 3 * N);
        CHECK(report.pass());
    }
}

TEST_CASE("zero streams give zero emissions") {
    Engine<Bit> engine(build_line(6), line_behaviors<Bit>(6), line_decoders<Bit>(6), zero_sources<Bit>());
    for (const auto& tr : engine.run(12).transmissions) CHECK(tr.payload.is_zero());
}

TEST_CASE("endpoints decode each other's stream at delay N-1") {
    for (int N = 2; N <= 12; ++N) {
        const int T = 3 * N + 4;
        BitStreams streams(500 + N, {kLineA, kLineB}, T);
        Engine<Bit> engine(build_line(N), line_behaviors<Bit>(N), line_decoders<Bit>(N), streams.source_fn());
        Trace<Bit> trace = engine.run(T);
        for (size_t s = 0; s < trace.sessions.size(); ++s)
            for (int t = N; t <= T; ++t)
                CHECK(trace.decoded[s][t - 1] == streams.at(trace.sessions[s], t - (N - 1)));
    }
}

TEST_CASE("coding uses N transmissions per slot") {
    for (int N : {2, 3, 7}) {
        Engine<Bit> engine(build_line(N), line_behaviors<Bit>(N), {}, zero_sources<Bit>());
        for (int count : engine.run(6).per_slot_count) CHECK(count == N);
    }
}
