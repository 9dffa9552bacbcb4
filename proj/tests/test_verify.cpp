#include <doctest.h>

#include <set>

#include "hexnc/linenet.hpp"
#include "hexnc/verify.hpp"

using namespace hexnc;

TEST_CASE("oracle transmission values") {
    CHECK(oracle_transmission(TriCoord{1, 1}, 4, 1, part_of(SessionKind::X)) ==
          LinComb::single(SessionId{SessionKind::X, 1}, 1));
    CHECK(oracle_transmission(TriCoord{3, 2}, 4, 0, Part{}).is_zero());
    LinComb whole = oracle_transmission(TriCoord{2, 2}, 4, 8, Part{});
    CHECK(whole == tilde(SessionKind::X, 2, 6) + tilde(SessionKind::Y, 2, 6) + tilde(SessionKind::Z, 2, 6));
    // border whole is the reconstruction sum of the three parts
    LinComb parts = oracle_transmission(TriCoord{2, 1}, 4, 8, part_of(SessionKind::X)) +
                    oracle_transmission(TriCoord{2, 1}, 4, 8, part_of(SessionKind::Y)) +
                    oracle_transmission(TriCoord{2, 1}, 4, 8, part_of(SessionKind::Z));
    CHECK(oracle_transmission(TriCoord{2, 1}, 4, 8, Part{}) == parts);
}

TEST_CASE("verify_code passes for K in 2..10") {
    for (int K = 2; K <= 10; ++K) {
        VerificationReport report = verify_code(K, 3 * K);
        CHECK(report.pass());
        CHECK(report.checked > 0);
    }
    VerificationReport k10 = verify_code(10, 30);
    CHECK(k10.pass());  // 109 transmissions per slot is asserted inside
}

TEST_CASE("symmetry of the constants") {
    for (int K : {2, 5, 8}) CHECK(verify_symmetry(K).pass());
    // rho(top corner) = (1, K): (i,dx)=(1,K-1), (j,dy)=(K,K-1), (k,dz)=(1,0)
    const int K = 6;
    NodeConstants nc = node_constants(TriCoord{1, K}, K);
    CHECK(nc.i == 1);
    CHECK(nc.dx == K - 1);
    CHECK(nc.j == K);
    CHECK(nc.dy == K - 1);
    CHECK(nc.k == 1);
    CHECK(nc.dz == 0);
}

TEST_CASE("the code violates the decoded-source-only property") {
    for (int K = 3; K <= 8; ++K) {
        VerificationReport report = check_decoded_source_property(K, 3 * K);
        CHECK(report.property_violations.size() >= 1);
        CHECK(report.mismatches.empty());
    }
    CHECK_THROWS_AS(check_decoded_source_property(2, 6), InvalidParameter);
}

TEST_CASE("internal nodes are always flagged: they decode nothing") {
    const int K = 4;
    VerificationReport report = check_decoded_source_property(K, 12);
    bool internal_flagged = false;
    for (const auto& v : report.property_violations)
        if (v.where == "(2,2)") internal_flagged = true;
    CHECK(internal_flagged);
}

TEST_CASE("line relays violate the strict decoded-source reading") {
    // the relay in the N=3 exchange sources and decodes nothing, yet
    // transmits combinations of both streams
    Engine<LinComb> engine(build_line(3), line_behaviors<LinComb>(3), line_decoders<LinComb>(3),
                           symbolic_sources());
    Trace<LinComb> trace = engine.run(9);
    bool violation = false;
    for (const auto& tr : trace.transmissions)
        if (tr.node == 1 && !tr.payload.is_zero()) violation = true;
    CHECK(violation);
}

TEST_CASE("violation report serialization") {
    VerificationReport report = check_decoded_source_property(3, 9);
    std::string text = report.serialize();
    CHECK(text.find("property") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') ==
          static_cast<long>(report.property_violations.size()));
    CHECK(verify_code(3, 9).serialize().empty());
}
