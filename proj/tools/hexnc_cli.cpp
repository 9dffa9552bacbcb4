#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexnc/analysis.hpp"
#include "hexnc/hexcode.hpp"
#include "hexnc/linenet.hpp"
#include "hexnc/routing.hpp"
#include "hexnc/streams.hpp"
#include "hexnc/verify.hpp"

using nlohmann::json;
using namespace hexnc;

namespace {

struct GlobalOpts {
    std::string format = "csv";
    std::string out;
};

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << text;
}

json energy_json(const EnergyReport& e) {
    return json{{"per_slot", e.per_slot},
                {"total", e.total},
                {"average", e.average},
                {"steady_average", e.steady_average},
                {"warmup", e.warmup}};
}

template <class P>
std::string trace_text(const Trace<P>& trace, const std::function<std::pair<int, int>(NodeId)>& label,
                       const EnergyReport& e, const std::string& format) {
    if (format == "json") {
        json records = json::array();
        for (const auto& tr : trace.transmissions) {
            auto [c, r] = label(tr.node);
            records.push_back({{"slot", tr.slot},
                               {"node_c", c},
                               {"node_r", r},
                               {"part", to_string(tr.part)},
                               {"payload", payload_string(tr.payload)}});
        }
        return json{{"trace", records}, {"energy", energy_json(e)}}.dump(2) + "\n";
    }
    std::string out = serialize_trace(trace, label);
    out += "# total=" + std::to_string(e.total) + "\n";
    out += "# average=" + std::to_string(e.average) + "\n";
    out += "# steady_average=" + std::to_string(e.steady_average) + "\n";
    return out;
}

int cmd_verify(const GlobalOpts& g, int K, int T) {
    VerificationReport code = verify_code(K, T);
    VerificationReport sym = verify_symmetry(K);
    const bool pass = code.pass() && sym.pass();
    if (g.format == "json") {
        json j{{"k", K},
               {"t", T},
               {"checked", code.checked + sym.checked},
               {"pass", pass},
               {"mismatches", code.mismatches.size() + sym.mismatches.size()},
               {"decode_failures", code.decode_failures.size()}};
        write_output(g, j.dump(2) + "\n");
    } else {
        std::string text = code.serialize() + sym.serialize();
        text += std::string("verify K=") + std::to_string(K) + " T=" + std::to_string(T) + " checked=" +
                std::to_string(code.checked + sym.checked) + (pass ? " pass" : " FAIL") + "\n";
        write_output(g, text);
    }
    return pass ? 0 : 1;
}

int cmd_simulate(const GlobalOpts& g, const std::string& topology, int K, int slots, unsigned seed,
                 const std::string& mode) {
    if (topology == "hex") {
        HexGrid grid(K);
        auto label = [&grid](NodeId n) {
            const TriCoord& p = grid.coord(n);
            return std::pair<int, int>{p.c, p.r};
        };
        std::vector<SessionId> sessions;
        for (const auto& pl : grid.place_sessions()) sessions.push_back(pl.session);
        const int warmup = std::min(slots - 1, 2 * K);
        if (mode == "symbolic") {
            Engine<LinComb> engine(grid.topology(), hex_behaviors<LinComb>(grid), hex_decoders<LinComb>(grid),
                                   symbolic_sources());
            Trace<LinComb> trace = engine.run(slots);
            write_output(g, trace_text(trace, label, energy(trace, warmup), g.format));
        } else {
            BitStreams streams(seed, sessions, slots);
            Engine<Bit> engine(grid.topology(), hex_behaviors<Bit>(grid), hex_decoders<Bit>(grid),
                               streams.source_fn());
            Trace<Bit> trace = engine.run(slots);
            write_output(g, trace_text(trace, label, energy(trace, warmup), g.format));
        }
        return 0;
    }
    // line: node m labelled (m, 0)
    auto label = [](NodeId n) { return std::pair<int, int>{n + 1, 0}; };
    const int warmup = std::min(slots - 1, 2 * K);
    if (mode == "symbolic") {
        Engine<LinComb> engine(build_line(K), line_behaviors<LinComb>(K), line_decoders<LinComb>(K),
                               symbolic_sources());
        Trace<LinComb> trace = engine.run(slots);
        write_output(g, trace_text(trace, label, energy(trace, warmup), g.format));
    } else {
        BitStreams streams(seed, {kLineA, kLineB}, slots);
        Engine<Bit> engine(build_line(K), line_behaviors<Bit>(K), line_decoders<Bit>(K), streams.source_fn());
        Trace<Bit> trace = engine.run(slots);
        write_output(g, trace_text(trace, label, energy(trace, warmup), g.format));
    }
    return 0;
}

int cmd_sweep(const GlobalOpts& g, int k_min, int k_max, int step) {
    std::vector<SweepRow> rows = sweep(k_min, k_max, step);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"K", r.K},
                           {"nodes", r.nodes},
                           {"internal", r.internal_nodes},
                           {"routing_energy", r.routing_energy},
                           {"coding_energy", r.coding_energy},
                           {"benefit_num", r.benefit_ratio.num},
                           {"benefit_den", r.benefit_ratio.den},
                           {"benefit", r.benefit_ratio.value()}});
        write_output(g, arr.dump(2) + "\n");
    } else {
        write_output(g, sweep_csv(rows));
    }
    return 0;
}

int cmd_line(const GlobalOpts& g, int N) {
    LineBenefit b = line_benefit(N);
    VerificationReport rep = verify_line(N, 3 * N);
    if (g.format == "json") {
        json j{{"n", N},
               {"coding_energy", N},
               {"routing_energy", 2 * (N - 1)},
               {"benefit_num", b.num},
               {"benefit_den", b.den},
               {"benefit", b.value},
               {"valid", rep.pass()}};
        write_output(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "N,coding_energy,routing_energy,benefit_num,benefit_den,benefit,valid\n";
        out << N << "," << N << "," << 2 * (N - 1) << "," << b.num << "," << b.den << ","
            << format_benefit_decimal(Rational{b.num, b.den}) << "," << (rep.pass() ? 1 : 0) << "\n";
        write_output(g, out.str());
    }
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hexagonal-lattice multiple-unicast network coding simulator"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global.out, "Write output to a file instead of stdout");

    int k = 4, t = 0, slots = 32, n = 3, k_min = 2, k_max = 10, step = 1;
    unsigned seed = 1;
    std::string topology = "hex", mode = "bit";

    auto* verify = app.add_subcommand("verify", "Symbolically verify the hex code against its closed form");
    verify->fallthrough();
    verify->add_option("--k", k, "Network edge size K")->required()->check(CLI::Range(2, 1000000));
    verify->add_option("--t", t, "Horizon (default 3K)");

    auto* simulate = app.add_subcommand("simulate", "Run the slot-synchronous simulation and dump the trace");
    simulate->fallthrough();
    simulate->add_option("--topology", topology, "Topology")->check(CLI::IsMember({"hex", "line"}));
    simulate->add_option("--k", k, "Edge size K (hex) or node count N (line)")->required();
    simulate->add_option("--slots", slots, "Number of slots")->check(CLI::Range(1, 1 << 20));
    simulate->add_option("--seed", seed, "Stream seed (bit mode)");
    simulate->add_option("--mode", mode, "Payload mode")->check(CLI::IsMember({"bit", "symbolic"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Energy and benefit per K");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--k-min", k_min, "Smallest K")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--k-max", k_max, "Largest K")->check(CLI::Range(2, 1000000));
    sweep_cmd->add_option("--step", step, "K increment")->check(CLI::Range(1, 1000000));

    auto* line_cmd = app.add_subcommand("line", "Line-network exchange scheme");
    line_cmd->fallthrough();
    line_cmd->add_option("--n", n, "Node count")->required()->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(global, k, t > 0 ? t : 3 * k);
        if (simulate->parsed()) return cmd_simulate(global, topology, k, slots, seed, mode);
        if (sweep_cmd->parsed()) return cmd_sweep(global, k_min, k_max, step);
        if (line_cmd->parsed()) return cmd_line(global, n);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
