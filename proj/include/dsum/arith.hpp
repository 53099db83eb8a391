#pragma once

#include <vector>

// Elementary arithmetic functions by trial division. Arguments are small.
namespace dsum::arith {

long long gcd(long long a, long long b);

/// Nonnegative residue of k modulo n (n >= 1).
long long mod(long long k, long long n);

/// Positive divisors of n >= 1 in increasing order.
std::vector<long long> divisors(long long n);

/// j in [1, n] with gcd(j, n) = 1, increasing.
std::vector<long long> totatives(long long n);

long long euler_phi(long long n);

/// Moebius function: 0 if n has a square factor, else (-1)^(number of primes).
int moebius(long long n);

}  // namespace dsum::arith
