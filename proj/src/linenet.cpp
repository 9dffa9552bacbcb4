#include "hexnc/linenet.hpp"

#include <numeric>

namespace hexnc {

LineBenefit line_benefit(int N) {
    if (N < 2) throw InvalidParameter("line_benefit: N must be >= 2");
    long long num = 2LL * (N - 1), den = N;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
    return LineBenefit{num, den, static_cast<double>(num) / static_cast<double>(den)};
}

}  // namespace hexnc
