#include "amub/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace amub {

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n)
{
    std::vector<std::pair<long long, int>> out;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            int e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            out.emplace_back(f, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::optional<std::pair<long long, int>> as_prime_power(long long q)
{
    if (q < 2)
        return std::nullopt;
    auto fac = factorize(q);
    if (fac.size() != 1)
        return std::nullopt;
    return std::make_pair(fac[0].first, fac[0].second);
}

long long ipow(long long base, int exp)
{
    long long r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

long long isqrt(long long n)
{
    if (n < 0)
        return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_perfect_square(long long n)
{
    if (n < 0)
        return false;
    long long r = isqrt(n);
    return r * r == n;
}

std::complex<double> unit_root(long long k, long long n)
{
    long long r = k % n;
    if (r < 0)
        r += n;
    if (r == 0)
        return {1.0, 0.0};
    if (4 * r == n)
        return {0.0, 1.0};
    if (2 * r == n)
        return {-1.0, 0.0};
    if (4 * r == 3 * n)
        return {0.0, -1.0};
    const long double theta = 2.0L * std::numbers::pi_v<long double>
        * static_cast<long double>(r) / static_cast<long double>(n);
    return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

double default_tolerance(std::size_t dim)
{
    return 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(dim)));
}

} // namespace amub
