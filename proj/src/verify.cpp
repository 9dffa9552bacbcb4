#include "hexnc/verify.hpp"

#include <set>
#include <sstream>

#include "hexnc/linenet.hpp"

namespace hexnc {

std::string VerificationReport::serialize() const {
    std::ostringstream out;
    auto dump = [&out](const char* kind, const std::vector<Violation>& vs) {
        for (const auto& v : vs)
            out << kind << " " << v.where << " " << v.slot << " " << v.part << " expected=" << v.expected
                << " actual=" << v.actual << "\n";
    };
    dump("mismatch", mismatches);
    dump("decode", decode_failures);
    dump("property", property_violations);
    return out.str();
}

LinComb oracle_transmission(const TriCoord& p, int K, int t, Part part) {
    if (t <= 0) return LinComb{};
    const NodeConstants nc = node_constants(p, K);
    switch (part.tag) {
        case Part::Tag::X: return tilde(SessionKind::X, nc.i, t - nc.dx);
        case Part::Tag::Y: return tilde(SessionKind::Y, nc.j, t - nc.dy);
        case Part::Tag::Z: return tilde(SessionKind::Z, nc.k, t - nc.dz);
        case Part::Tag::Whole:
            return tilde(SessionKind::X, nc.i, t - nc.dx) + tilde(SessionKind::Y, nc.j, t - nc.dy) +
                   tilde(SessionKind::Z, nc.k, t - nc.dz);
        default: throw InvalidParameter("oracle_transmission: not a hex part");
    }
}

namespace {

Trace<LinComb> run_symbolic_hex(const HexGrid& g, int T) {
    Engine<LinComb> engine(g.topology(), hex_behaviors<LinComb>(g), hex_decoders<LinComb>(g),
                           symbolic_sources());
    return engine.run(T);
}

}  // namespace

VerificationReport verify_code(int K, int T) {
    HexGrid g(K);
    VerificationReport report{K, T};
    Trace<LinComb> trace = run_symbolic_hex(g, T);

    for (const auto& tr : trace.transmissions) {
        const TriCoord p = g.coord(tr.node);
        LinComb expected = oracle_transmission(p, K, tr.slot, tr.part);
        ++report.checked;
        if (!(expected == tr.payload))
            report.mismatches.push_back(
                {to_string(p), tr.slot, to_string(tr.part), to_string(expected), to_string(tr.payload)});
    }

    const long long border = static_cast<long long>(g.node_count()) - g.internal_count();
    const long long per_slot = 3 * border + g.internal_count();
    for (int t = 1; t <= T; ++t) {
        ++report.checked;
        if (trace.per_slot_count[t - 1] != per_slot)
            report.mismatches.push_back({"per-slot-count", t, "", std::to_string(per_slot),
                                         std::to_string(trace.per_slot_count[t - 1])});
    }

    for (size_t s = 0; s < trace.sessions.size(); ++s) {
        const SessionId sid = trace.sessions[s];
        for (int t = 1; t <= T; ++t) {
            LinComb expected = LinComb::single(sid, t - (K - 1));
            ++report.checked;
            if (!(expected == trace.decoded[s][t - 1]))
                report.decode_failures.push_back({to_string(sid), t, "", to_string(expected),
                                                  to_string(trace.decoded[s][t - 1])});
        }
    }
    return report;
}

VerificationReport verify_symmetry(int K) {
    HexGrid g(K);
    VerificationReport report{K, 0};
    for (const auto& p : g.nodes()) {
        const TriCoord q = g.rotate(p);
        const NodeConstants a = node_constants(p, K);
        const NodeConstants b = node_constants(q, K);
        ++report.checked;
        if (!(b.i == a.k && b.dx == a.dz && b.j == a.i && b.dy == a.dx && b.k == a.j && b.dz == a.dy))
            report.mismatches.push_back({to_string(p), 0, "constants", "role-permuted under rotation", ""});
        ++report.checked;
        if (!(g.rotate(p, 3) == p))
            report.mismatches.push_back({to_string(p), 0, "rotation", to_string(p), to_string(g.rotate(p, 3))});
    }
    return report;
}

VerificationReport check_decoded_source_property(int K, int T) {
    if (K < 3) throw InvalidParameter("check_decoded_source_property: K must be >= 3");
    HexGrid g(K);
    VerificationReport report{K, T};

    // Sessions a node originates or decodes as a receiver.
    std::vector<std::set<SessionId>> allowed(g.node_count());
    for (const auto& pl : g.place_sessions()) {
        allowed[g.id(pl.source)].insert(pl.session);
        allowed[g.id(pl.receiver)].insert(pl.session);
    }

    Trace<LinComb> trace = run_symbolic_hex(g, T);
    for (const auto& tr : trace.transmissions) {
        ++report.checked;
        for (const auto& term : tr.payload.terms()) {
            if (!allowed[tr.node].contains(term.session)) {
                report.property_violations.push_back({to_string(g.coord(tr.node)), tr.slot, to_string(tr.part),
                                                      "decoded-source terms only", to_string(term)});
                break;
            }
        }
    }
    return report;
}

VerificationReport verify_line(int N, int T) {
    VerificationReport report{N, T};
    Engine<LinComb> engine(build_line(N), line_behaviors<LinComb>(N), line_decoders<LinComb>(N),
                           symbolic_sources());
    Trace<LinComb> trace = engine.run(T);

    for (const auto& tr : trace.transmissions) {
        LinComb expected = line_oracle(tr.node + 1, N, tr.slot);
        ++report.checked;
        if (!(expected == tr.payload))
            report.mismatches.push_back({"node" + std::to_string(tr.node + 1), tr.slot, to_string(tr.part),
                                         to_string(expected), to_string(tr.payload)});
    }
    for (size_t s = 0; s < trace.sessions.size(); ++s) {
        const SessionId sid = trace.sessions[s];
        for (int t = 1; t <= T; ++t) {
            LinComb expected = LinComb::single(sid, t - (N - 1));
            ++report.checked;
            if (!(expected == trace.decoded[s][t - 1]))
                report.decode_failures.push_back(
                    {to_string(sid), t, "", to_string(expected), to_string(trace.decoded[s][t - 1])});
        }
    }
    return report;
}

}  // namespace hexnc
