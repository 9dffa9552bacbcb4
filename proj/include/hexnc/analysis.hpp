#pragma once

#include <string>
#include <vector>

#include "hexnc/topology.hpp"

namespace hexnc {

// Exact nonnegative rational, kept reduced. Comparisons use 128-bit
// intermediates so K up to 10^6 is safe.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& o) const;
};

std::string to_string(const Rational& r);

// Routing optimum 3*C(K,2) and coding cost 3*C(K+1,2) - 2*C(K-2,2).
long long lemma1(int K);
long long lemma2(int K);

// lemma1 / lemma2, reduced. Strictly increasing in K with supremum 3.
Rational benefit(int K);

struct SweepRow {
    int K = 0;
    long long nodes = 0;
    long long internal_nodes = 0;
    long long routing_energy = 0;
    long long coding_energy = 0;
    Rational benefit_ratio;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow sweep_row(int K);

// One row per K. Rows up to simulate_limit are cross-checked against full
// engine runs of both schemes; larger K use the analytic formulas alone.
std::vector<SweepRow> sweep(int k_min, int k_max, int step = 1, int simulate_limit = 50);

// CSV schema:
//   K,nodes,internal,routing_energy,coding_energy,benefit_num,benefit_den,benefit
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(const std::string& csv);

std::string format_benefit_decimal(const Rational& r);  // 9 decimal places

}  // namespace hexnc
