#include "amub/combinatorics.hpp"

#include <string>

#include "amub/algebra.hpp"
#include "amub/arith.hpp"

namespace amub {

LatinSquare::LatinSquare(int order, std::vector<int> grid)
    : order_(order), grid_(std::move(grid))
{
    if (order_ < 1)
        throw BadParameters("Latin square order must be >= 1");
    if (grid_.size() != static_cast<std::size_t>(order_) * order_)
        throw BadParameters("Latin square grid has wrong shape");
    std::vector<bool> seen(order_ + 1);
    for (int r = 0; r < order_; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (int c = 0; c < order_; ++c) {
            const int v = at(r, c);
            if (v < 1 || v > order_ || seen[v])
                throw BadParameters("row " + std::to_string(r + 1)
                                    + " is not a permutation of 1..d");
            seen[v] = true;
        }
    }
    for (int c = 0; c < order_; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (int r = 0; r < order_; ++r) {
            const int v = at(r, c);
            if (seen[v])
                throw BadParameters("column " + std::to_string(c + 1)
                                    + " is not a permutation of 1..d");
            seen[v] = true;
        }
    }
}

bool mols_check(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order() != b.order())
        throw OrderMismatch("Latin squares have different orders");
    const int d = a.order();
    std::vector<bool> seen(static_cast<std::size_t>(d) * d, false);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const std::size_t key = static_cast<std::size_t>(a.at(r, c) - 1) * d + (b.at(r, c) - 1);
            if (seen[key])
                return false;
            seen[key] = true;
        }
    return true;
}

std::vector<LatinSquare> mols_prime_power(long long q)
{
    const auto pp = as_prime_power(q);
    if (!pp)
        throw NotPrimePower("MOLS family needs a prime-power order, got " + std::to_string(q));
    const Field f(pp->first, pp->second);
    const int d = static_cast<int>(q);
    std::vector<LatinSquare> out;
    out.reserve(d - 1);
    for (long long a = 1; a < q; ++a) {
        std::vector<int> grid(static_cast<std::size_t>(d) * d);
        for (long long i = 0; i < q; ++i)
            for (long long j = 0; j < q; ++j) {
                const FqElement e = f.add(f.mul(f.element(a), f.element(i)), f.element(j));
                grid[static_cast<std::size_t>(i) * d + j] = static_cast<int>(e.code) + 1;
            }
        out.emplace_back(d, std::move(grid));
    }
    return out;
}

std::vector<LatinSquare> mols_macneish(const std::vector<LatinSquare>& fam1,
                                       const std::vector<LatinSquare>& fam2)
{
    if (fam1.empty() || fam2.empty())
        throw EmptyFamily("MacNeish product needs nonempty families");
    for (const auto& fam : {fam1, fam2})
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j)
                if (!mols_check(fam[i], fam[j]))
                    throw NotOrthogonalFamily("input family is not pairwise orthogonal");

    const std::size_t k = std::min(fam1.size(), fam2.size());
    const int d1 = fam1[0].order();
    const int d2 = fam2[0].order();
    const int d = d1 * d2;
    std::vector<LatinSquare> out;
    out.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<int> grid(static_cast<std::size_t>(d) * d);
        for (int i1 = 0; i1 < d1; ++i1)
            for (int i2 = 0; i2 < d2; ++i2)
                for (int j1 = 0; j1 < d1; ++j1)
                    for (int j2 = 0; j2 < d2; ++j2) {
                        const int row = i1 * d2 + i2;
                        const int col = j1 * d2 + j2;
                        const int e1 = fam1[t].at(i1, j1);
                        const int e2 = fam2[t].at(i2, j2);
                        grid[static_cast<std::size_t>(row) * d + col] = (e1 - 1) * d2 + e2;
                    }
        out.emplace_back(d, std::move(grid));
    }
    return out;
}

long long mols_lower_bound(long long d)
{
    if (d < 2)
        throw BadParameters("MOLS bound needs d >= 2");
    if (d == 2 || d == 6)
        return 1;
    long long bound = d;
    for (const auto& [p, e] : factorize(d)) {
        const long long pe = ipow(p, e);
        bound = std::min(bound, pe - 1);
    }
    if (d % 4 == 2)
        bound = std::max(bound, 2LL);
    return bound;
}

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries))
{
    if (order_ < 1)
        throw NotHadamard("order must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(order_) * order_)
        throw NotHadamard("entry grid has wrong shape");
    for (std::int8_t v : entries_)
        if (v != 1 && v != -1)
            throw NotHadamard("entries must be +1 or -1");
    if (order_ <= kAutoCheckOrder && !check())
        throw NotHadamard("H H^T != d I");
}

bool HadamardMatrix::check() const
{
    for (int i = 0; i < order_; ++i) {
        const std::int8_t* ri = entries_.data() + static_cast<std::size_t>(i) * order_;
        for (int j = i; j < order_; ++j) {
            const std::int8_t* rj = entries_.data() + static_cast<std::size_t>(j) * order_;
            long long dot = 0;
            for (int k = 0; k < order_; ++k)
                dot += static_cast<long long>(ri[k]) * rj[k];
            if (dot != (i == j ? order_ : 0))
                return false;
        }
    }
    return true;
}

HadamardMatrix hadamard_sylvester(int k)
{
    if (k < 0 || k > 14)
        throw TooLarge("Sylvester power must be in [0, 14]");
    int d = 1;
    std::vector<std::int8_t> h{1};
    for (int step = 0; step < k; ++step) {
        const int nd = 2 * d;
        std::vector<std::int8_t> next(static_cast<std::size_t>(nd) * nd);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const std::int8_t v = h[static_cast<std::size_t>(i) * d + j];
                next[static_cast<std::size_t>(i) * nd + j] = v;
                next[static_cast<std::size_t>(i) * nd + j + d] = v;
                next[static_cast<std::size_t>(i + d) * nd + j] = v;
                next[static_cast<std::size_t>(i + d) * nd + j + d] = static_cast<std::int8_t>(-v);
            }
        h = std::move(next);
        d = nd;
    }
    return HadamardMatrix(d, std::move(h));
}

HadamardMatrix hadamard_paley(long long q)
{
    if (!is_prime(q) || q % 4 != 3 || q > 4095)
        throw BadOrder("Paley construction needs a prime q == 3 (mod 4), q <= 4095");
    std::vector<int> chi(q, 0); // quadratic residue symbol, chi(0) = 0
    for (long long x = 1; x < q; ++x)
        chi[(x * x) % q] = 1;
    for (long long x = 1; x < q; ++x)
        if (chi[x] == 0)
            chi[x] = -1;

    const int d = static_cast<int>(q) + 1;
    std::vector<std::int8_t> h(static_cast<std::size_t>(d) * d);
    h[0] = 1;
    for (int j = 1; j < d; ++j) {
        h[j] = 1;
        h[static_cast<std::size_t>(j) * d] = -1;
    }
    for (long long i = 0; i < q; ++i)
        for (long long j = 0; j < q; ++j) {
            const int row = static_cast<int>(i) + 1;
            const int col = static_cast<int>(j) + 1;
            int v;
            if (i == j)
                v = 1;
            else
                v = chi[((i - j) % q + q) % q];
            h[static_cast<std::size_t>(row) * d + col] = static_cast<std::int8_t>(v);
        }
    return HadamardMatrix(d, std::move(h));
}

bool real_mub_hadamard_criterion(const std::vector<HadamardMatrix>& mats)
{
    if (mats.empty())
        throw NotHadamardInput("criterion needs at least one matrix");
    const int d = mats[0].order();
    for (const auto& h : mats) {
        if (h.order() != d)
            throw OrderMismatch("all matrices must share one order");
        if (!h.check())
            throw NotHadamardInput("input fails the Hadamard product check");
    }
    if (mats.size() == 1)
        return true;

    const long long s = isqrt(d);
    if (s * s != d)
        return false; // entries of H_i H_j^T / sqrt(d) cannot be +-1

    for (std::size_t a = 0; a < mats.size(); ++a)
        for (std::size_t b = a + 1; b < mats.size(); ++b) {
            std::vector<std::int8_t> scaled(static_cast<std::size_t>(d) * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    long long dot = 0;
                    for (int k = 0; k < d; ++k)
                        dot += static_cast<long long>(mats[a].at(i, k)) * mats[b].at(j, k);
                    if (dot != s && dot != -s)
                        return false;
                    scaled[static_cast<std::size_t>(i) * d + j]
                        = static_cast<std::int8_t>(dot / s);
                }
            try {
                HadamardMatrix product(d, std::move(scaled));
                if (!product.check())
                    return false;
            } catch (const NotHadamard&) {
                return false;
            }
        }
    return true;
}

} // namespace amub
