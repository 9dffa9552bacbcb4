#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hexnc/analysis.hpp"
#include "hexnc/hexcode.hpp"
#include "hexnc/linenet.hpp"
#include "hexnc/routing.hpp"
#include "hexnc/streams.hpp"
#include "hexnc/verify.hpp"

namespace py = pybind11;
using namespace hexnc;

namespace {

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["k"] = r.K;
    d["t"] = r.T;
    d["checked"] = r.checked;
    d["pass"] = r.pass();
    d["mismatches"] = r.mismatches.size();
    d["decode_failures"] = r.decode_failures.size();
    d["property_violations"] = r.property_violations.size();
    return d;
}

py::dict row_dict(const SweepRow& r) {
    py::dict d;
    d["K"] = r.K;
    d["nodes"] = r.nodes;
    d["internal"] = r.internal_nodes;
    d["routing_energy"] = r.routing_energy;
    d["coding_energy"] = r.coding_energy;
    d["benefit_num"] = r.benefit_ratio.num;
    d["benefit_den"] = r.benefit_ratio.den;
    d["benefit"] = r.benefit_ratio.value();
    return d;
}

std::vector<int> hex_energy_per_slot(int K, int slots) {
    HexGrid g(K);
    Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), {}, zero_sources<Bit>());
    return engine.run(slots).per_slot_count;
}

std::vector<int> routing_energy_per_slot(int K, int slots) {
    HexGrid g(K);
    HopTable table = shortest_paths(g);
    Engine<Bit> engine(g.topology(), routing_behaviors<Bit>(g.topology(), table), {}, zero_sources<Bit>());
    return engine.run(slots).per_slot_count;
}

// Bit-mode end-to-end check: every receiver reproduces its stream at
// delay K-1. Returns the number of decode errors.
long long hex_decode_errors(int K, int slots, unsigned seed) {
    HexGrid g(K);
    std::vector<SessionId> sessions;
    for (const auto& pl : g.place_sessions()) sessions.push_back(pl.session);
    BitStreams streams(seed, sessions, slots);
    Engine<Bit> engine(g.topology(), hex_behaviors<Bit>(g), hex_decoders<Bit>(g), streams.source_fn());
    Trace<Bit> trace = engine.run(slots);
    long long errors = 0;
    for (size_t s = 0; s < trace.sessions.size(); ++s)
        for (int t = K; t <= slots; ++t)
            if (!(trace.decoded[s][t - 1] == streams.at(trace.sessions[s], t - (K - 1)))) ++errors;
    return errors;
}

}  // namespace

PYBIND11_MODULE(_hexnc, m) {
    m.doc() = "Hexagonal-lattice multiple-unicast network coding simulator";

    m.def("lemma1", &lemma1, py::arg("k"), "Minimum routing energy 3*C(K,2)");
    m.def("lemma2", &lemma2, py::arg("k"), "Coding energy 3*C(K+1,2) - 2*C(K-2,2)");
    m.def(
        "benefit",
        [](int K) {
            Rational r = benefit(K);
            return py::make_tuple(r.num, r.den, r.value());
        },
        py::arg("k"), "Energy benefit lemma1/lemma2 as (num, den, float)");
    m.def(
        "line_benefit",
        [](int N) {
            LineBenefit b = line_benefit(N);
            return py::make_tuple(b.num, b.den, b.value);
        },
        py::arg("n"), "Line-network benefit 2(N-1)/N as (num, den, float)");

    m.def(
        "node_constants",
        [](int c, int r, int K) {
            HexGrid g(K);
            NodeConstants nc = node_constants(TriCoord{c, r}, K);
            if (!g.valid(TriCoord{c, r})) throw InvalidParameter("node outside the triangle");
            return py::make_tuple(nc.i, nc.j, nc.k, nc.dx, nc.dy, nc.dz);
        },
        py::arg("c"), py::arg("r"), py::arg("k"), "Per-node sextuple (i, j, k, dx, dy, dz)");

    m.def(
        "verify_code", [](int K, int T) { return report_dict(verify_code(K, T)); }, py::arg("k"),
        py::arg("t"), "Symbolic verification of the hex code");
    m.def(
        "verify_symmetry", [](int K) { return report_dict(verify_symmetry(K)); }, py::arg("k"));
    m.def(
        "verify_line", [](int N, int T) { return report_dict(verify_line(N, T)); }, py::arg("n"),
        py::arg("t"), "Symbolic verification of the line scheme");
    m.def(
        "check_decoded_source_property",
        [](int K, int T) { return report_dict(check_decoded_source_property(K, T)); }, py::arg("k"),
        py::arg("t"));

    m.def(
        "sweep",
        [](int k_min, int k_max, int step) {
            py::list out;
            for (const auto& r : sweep(k_min, k_max, step)) out.append(row_dict(r));
            return out;
        },
        py::arg("k_min"), py::arg("k_max"), py::arg("step") = 1);

    m.def("hex_energy_per_slot", &hex_energy_per_slot, py::arg("k"), py::arg("slots") = 8);
    m.def("routing_energy_per_slot", &routing_energy_per_slot, py::arg("k"), py::arg("slots") = 8);
    m.def("hex_decode_errors", &hex_decode_errors, py::arg("k"), py::arg("slots") = 64,
          py::arg("seed") = 1, "Decode errors of a concrete bit-mode run (0 when the code works)");
}
