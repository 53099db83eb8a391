#include "dsum/arith.hpp"

#include "dsum/errors.hpp"

#include <numeric>

namespace dsum::arith {

namespace {

void require_positive(long long n) {
    if (n < 1) throw InvalidParam("arithmetic function needs n >= 1, got " + std::to_string(n));
}

}  // namespace

long long gcd(long long a, long long b) { return std::gcd(a, b); }

long long mod(long long k, long long n) {
    const long long r = k % n;
    return r < 0 ? r + n : r;
}

std::vector<long long> divisors(long long n) {
    require_positive(n);
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long long> totatives(long long n) {
    require_positive(n);
    std::vector<long long> out;
    for (long long j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
    return out;
}

long long euler_phi(long long n) {
    require_positive(n);
    long long result = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int moebius(long long n) {
    require_positive(n);
    int sign = 1;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

}  // namespace dsum::arith
