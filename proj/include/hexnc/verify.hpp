#pragma once

#include "hexnc/engine.hpp"
#include "hexnc/hexcode.hpp"
#include "hexnc/topology.hpp"

namespace hexnc {

struct Violation {
    std::string where;     // node / session
    int slot = 0;
    std::string part;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    int K = 0;
    int T = 0;
    long long checked = 0;
    std::vector<Violation> mismatches;
    std::vector<Violation> decode_failures;
    std::vector<Violation> property_violations;

    bool pass() const {
        return mismatches.empty() && decode_failures.empty() && property_violations.empty();
    }
    // One violation per line, `kind where slot part expected actual`.
    std::string serialize() const;
};

// Closed-form target of the hex code. Whole symbols are the three-fold
// tilde sum with the node's constants; border parts are the single
// matching tilde term. The whole of a border node is a notational
// shortcut (sum of its parts), still returned for reconstruction checks.
LinComb oracle_transmission(const TriCoord& p, int K, int t, Part part);

// Runs the symbolic engine with the hex behaviors and checks that every
// emission equals its closed-form target, every receiver output is the
// single source term delayed by K-1, and the per-slot transmission count
// matches the code's energy formula. Violations are reported, not thrown.
VerificationReport verify_code(int K, int T);

// node_constants commutes with the rotation operator under the role cycle
// x -> y -> z: (i,dx) at rho(p) equals (k,dz) at p, and so on.
VerificationReport verify_symmetry(int K);

// Strict decoded-source-only property: a node may only combine symbols of
// sessions it sources or decodes as a receiver. The hex code violates this
// at every internal node, so violations are the expected outcome.
VerificationReport check_decoded_source_property(int K, int T);

// Symbolic check of the line scheme against its closed form, including
// endpoint decoding at delay N-1.
VerificationReport verify_line(int N, int T);

}  // namespace hexnc
