#include "hexnc/analysis.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "hexnc/hexcode.hpp"
#include "hexnc/routing.hpp"

namespace hexnc {

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw InvalidParameter("Rational: zero denominator");
    long long g = std::gcd(n, d);
    return Rational{n / g, d / g};
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string to_string(const Rational& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

long long lemma1(int K) {
    if (K < 2) throw InvalidParameter("lemma1: K must be >= 2");
    return 3LL * K * (K - 1) / 2;
}

long long lemma2(int K) {
    if (K < 2) throw InvalidParameter("lemma2: K must be >= 2");
    const long long internal = static_cast<long long>(K - 2) * (K - 3) / 2;
    return 3LL * (K + 1) * K / 2 - 2 * internal;
}

Rational benefit(int K) { return Rational::make(lemma1(K), lemma2(K)); }

SweepRow sweep_row(int K) {
    SweepRow row;
    row.K = K;
    row.nodes = static_cast<long long>(K) * (K + 1) / 2;
    row.internal_nodes = static_cast<long long>(K - 2) * (K - 3) / 2;
    row.routing_energy = lemma1(K);
    row.coding_energy = lemma2(K);
    row.benefit_ratio = benefit(K);
    return row;
}

namespace {

void cross_check_by_simulation(const SweepRow& row) {
    HexGrid g(row.K);
    const int T = 6;

    Engine<Bit> coding(g.topology(), hex_behaviors<Bit>(g), {}, zero_sources<Bit>());
    Trace<Bit> ct = coding.run(T);
    for (int count : ct.per_slot_count)
        if (count != row.coding_energy)
            throw ConfigError("sweep: simulated coding energy disagrees with formula at K=" +
                              std::to_string(row.K));

    HopTable table = shortest_paths(g);
    Engine<Bit> routing(g.topology(), routing_behaviors<Bit>(g.topology(), table), {}, zero_sources<Bit>());
    Trace<Bit> rt = routing.run(T);
    for (int count : rt.per_slot_count)
        if (count != row.routing_energy)
            throw ConfigError("sweep: simulated routing energy disagrees with formula at K=" +
                              std::to_string(row.K));
}

}  // namespace

std::vector<SweepRow> sweep(int k_min, int k_max, int step, int simulate_limit) {
    if (k_min < 2 || k_max < k_min || step < 1) throw InvalidParameter("sweep: invalid K range");
    std::vector<SweepRow> rows;
    for (int K = k_min; K <= k_max; K += step) {
        SweepRow row = sweep_row(K);
        if (K <= simulate_limit) cross_check_by_simulation(row);
        rows.push_back(row);
    }
    return rows;
}

std::string format_benefit_decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", static_cast<double>(static_cast<long double>(r.num) / r.den));
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "K,nodes,internal,routing_energy,coding_energy,benefit_num,benefit_den,benefit\n";
    for (const auto& r : rows)
        out << r.K << "," << r.nodes << "," << r.internal_nodes << "," << r.routing_energy << ","
            << r.coding_energy << "," << r.benefit_ratio.num << "," << r.benefit_ratio.den << ","
            << format_benefit_decimal(r.benefit_ratio) << "\n";
    return out.str();
}

std::vector<SweepRow> parse_sweep_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SweepRow r;
        long long num = 0, den = 1;
        char decimal[32];
        if (std::sscanf(line.c_str(), "%d,%lld,%lld,%lld,%lld,%lld,%lld,%31s", &r.K, &r.nodes,
                        &r.internal_nodes, &r.routing_energy, &r.coding_energy, &num, &den, decimal) != 8)
            throw InvalidParameter("parse_sweep_csv: malformed row: " + line);
        r.benefit_ratio = Rational{num, den};
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hexnc
