#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace amub {

bool is_prime(long long n);

// Prime factorization by trial division, (prime, exponent) pairs in
// ascending prime order.
std::vector<std::pair<long long, int>> factorize(long long n);

// (p, m) with q = p^m and p prime, or nullopt.
std::optional<std::pair<long long, int>> as_prime_power(long long q);

long long ipow(long long base, int exp);

// Floor of sqrt(n) for n >= 0.
long long isqrt(long long n);

bool is_perfect_square(long long n);

// e^{2*pi*i*k/n}. Quarter-turn multiples are returned exactly so that
// characters of order dividing 4 evaluate to exact {1, i, -1, -i}.
std::complex<double> unit_root(long long k, long long n);

// Comparison tolerance used across unit/orthonormality/gamma checks:
// 1e-9 * max(1, sqrt(dim)). Entries are roots of unity over sqrt(d), so
// double rounding stays far below this at the supported sizes.
double default_tolerance(std::size_t dim);

} // namespace amub
