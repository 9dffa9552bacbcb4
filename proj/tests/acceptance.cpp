// End-to-end acceptance suite. Prints one pass/fail line per criterion and
// exits nonzero if any fails. argv[1] (optional) is the path to the CLI
// binary, used by the determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hexnc/analysis.hpp"
#include "hexnc/hexcode.hpp"
#include "hexnc/linenet.hpp"
#include "hexnc/routing.hpp"
#include "hexnc/streams.hpp"
#include "hexnc/verify.hpp"

using namespace hexnc;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<SessionId> hex_sessions(const HexGrid& g) {
    std::vector<SessionId> out;
    for (const auto& pl : g.place_sessions()) out.push_back(pl.session);
    return out;
}

// 1. Routing energy: BFS hop sum = simulated steady-state transmissions
//    per slot = 3*C(K,2), K = 2..20, under 5 s.
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int K = 2; K <= 20 && ok; ++K) {
        HexGrid g(K);
        HopTable table = shortest_paths(g);
        const long long formula = routing_energy(K);
        if (table.total_hops() != formula) ok = false;
        Engine<Bit> engine(g.topology(), routing_behaviors<Bit>(g.topology(), table), {}, zero_sources<Bit>());
        for (int count : engine.run(8).per_slot_count)
            if (count != formula) ok = false;
    }
    double dt = seconds_since(start);
    report(1, ok && dt < 5.0, "routing energy = 3*C(K,2) for K=2..20 (" + std::to_string(dt) + " s)");
}

// 2. Coding energy: simulated transmissions per slot = 3*C(K+1,2) -
//    2*C(K-2,2) every slot, K = 2..20, under 10 s.
void criterion2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int K = 2; K <= 20 && ok; ++K) {
        HexGrid g(K);
        Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), {}, zero_sources<Bit>());
        for (int count : engine.run(3 * K).per_slot_count)
            if (count != lemma2(K)) ok = false;
    }
    double dt = seconds_since(start);
    report(2, ok && dt < 10.0,
           "coding energy = 3*C(K+1,2) - 2*C(K-2,2) for K=2..20 (" + std::to_string(dt) + " s)");
}

// 3. Benefit values exact at K = 4, 100, 1000; strictly increasing, < 3.
void criterion3() {
    bool ok = benefit(4) == Rational{9, 14};
    ok = ok && benefit(100) == Rational{7425, 2822};
    Rational b1000 = benefit(1000);
    ok = ok && static_cast<__int128>(b1000.num) * 506494 == static_cast<__int128>(b1000.den) * 1498500;
    ok = ok && std::fabs(benefit(100).value() - 7425.0 / 2822.0) < 1e-9;
    ok = ok && std::fabs(b1000.value() - 1498500.0 / 506494.0) < 1e-9;
    Rational prev = benefit(2);
    for (int K = 3; K <= 1000; ++K) {
        Rational b = benefit(K);
        if (!(prev < b) || !(b < Rational{3, 1})) ok = false;
        prev = b;
    }
    report(3, ok, "benefit exact at K=4,100,1000; strictly increasing and < 3");
}

// 4. Scheme validity: symbolic verification, zero mismatches, decode delay
//    exactly K-1, K = 2..10, T = 3K, under 30 s.
void criterion4() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int K = 2; K <= 10; ++K) {
        VerificationReport r = verify_code(K, 3 * K);
        if (!r.pass()) ok = false;
    }
    double dt = seconds_since(start);
    report(4, ok && dt < 30.0, "symbolic verify_code passes for K=2..10 (" + std::to_string(dt) + " s)");
}

// 5. Concrete decode at K=8, T=256, fixed seed: zero decode errors and bit
//    payloads equal to symbolic evaluations on 1000 sampled pairs, under 5 s.
void criterion5() {
    auto start = std::chrono::steady_clock::now();
    const int K = 8, T = 256;
    const unsigned seed = 20260824;
    HexGrid g(K);
    BitStreams streams(seed, hex_sessions(g), T);
    Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), hex_decoders<Bit>(g), streams.source_fn());
    Trace<Bit> trace = engine.run(T);

    bool ok = trace.sessions.size() == 24;
    long long errors = 0;
    for (size_t s = 0; s < trace.sessions.size(); ++s)
        for (int t = K; t <= T; ++t)
            if (!(trace.decoded[s][t - 1] == streams.at(trace.sessions[s], t - (K - 1)))) ++errors;
    ok = ok && errors == 0;

    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, trace.transmissions.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        const auto& tr = trace.transmissions[pick(rng)];
        LinComb symbolic = oracle_transmission(g.coord(tr.node), K, tr.slot, tr.part);
        if (!(streams.eval(symbolic) == tr.payload)) ok = false;
    }
    double dt = seconds_since(start);
    report(5, ok && dt < 5.0,
           "K=8 T=256 concrete decode errors=" + std::to_string(errors) + ", 1000 sampled payloads match (" +
               std::to_string(dt) + " s)");
}

// 6. Line network: benefit 4/3 at N=3, 1.98 at N=100, monotone toward 2;
//    symbolic verification for N <= 12.
void criterion6() {
    bool ok = line_benefit(3).num == 4 && line_benefit(3).den == 3;
    ok = ok && std::fabs(line_benefit(100).value - 1.98) < 1e-12;
    double prev = 0.0;
    for (int N = 2; N <= 500; ++N) {
        double b = line_benefit(N).value;
        if (!(b < 2.0) || !(b > prev)) ok = false;
        prev = b;
    }
    for (int N = 2; N <= 12; ++N)
        if (!verify_line(N, 3 * N).pass()) ok = false;
    report(6, ok, "line benefit 4/3 at N=3, 1.98 at N=100, monotone < 2; symbolic pass N<=12");
}

// 7. Decoded-source property checker reports violations for K = 3..8.
void criterion7() {
    bool ok = true;
    for (int K = 3; K <= 8; ++K)
        if (check_decoded_source_property(K, 3 * K).property_violations.empty()) ok = false;
    report(7, ok, "decoded-source-only property violated for every K=3..8");
}

std::string run_cli(const std::string& cli, const std::string& args, const std::string& outfile) {
    std::string cmd = cli + " " + args + " --out " + outfile;
    if (std::system(cmd.c_str()) != 0) return {};
    std::ifstream f(outfile, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// 8. Determinism: identical flags give byte-identical traces and CSV.
void criterion8(const char* cli) {
    HexGrid g(6);
    auto trace_once = [&g] {
        BitStreams streams(7, hex_sessions(g), 24);
        Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), hex_decoders<Bit>(g), streams.source_fn());
        Trace<Bit> trace = engine.run(24);
        return serialize_trace(trace, [&g](NodeId n) {
            const TriCoord& p = g.coord(n);
            return std::pair<int, int>{p.c, p.r};
        });
    };
    bool ok = trace_once() == trace_once();
    ok = ok && sweep_csv(sweep(2, 10)) == sweep_csv(sweep(2, 10));

    if (cli != nullptr) {
        const std::string a = run_cli(cli, "simulate --topology hex --k 5 --slots 16 --seed 3 --mode bit",
                                      "/tmp/hexnc_det_a.txt");
        const std::string b = run_cli(cli, "simulate --topology hex --k 5 --slots 16 --seed 3 --mode bit",
                                      "/tmp/hexnc_det_b.txt");
        const std::string c = run_cli(cli, "sweep --k-min 2 --k-max 8", "/tmp/hexnc_det_c.csv");
        const std::string d = run_cli(cli, "sweep --k-min 2 --k-max 8", "/tmp/hexnc_det_d.csv");
        ok = ok && !a.empty() && a == b && !c.empty() && c == d;
    }
    report(8, ok, cli ? "byte-identical traces and CSV (in-process and via CLI)"
                      : "byte-identical traces and CSV (in-process)");
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(cli);
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
