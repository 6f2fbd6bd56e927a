#include "amub/algebra.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "amub/arith.hpp"

namespace amub {

namespace {

constexpr long long kMaxFieldSize = 1 << 20;
constexpr int kMaxGaloisRingDegree = 12;

[[noreturn]] void internal_failure(const char* what)
{
    std::fprintf(stderr, "amub internal consistency failure: %s\n", what);
    std::abort();
}

// Polynomial arithmetic over F_p on coefficient vectors (low degree first).

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, long long p)
{
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return r;
}

// Remainder of f by monic g.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, long long p)
{
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
        const long long c = f[d];
        if (c == 0)
            continue;
        for (int i = 0; i <= dg; ++i) {
            long long v = f[d - dg + i] - c * g[i];
            f[d - dg + i] = static_cast<int>(((v % p) + p) % p);
        }
    }
    f.resize(dg);
    return f;
}

bool poly_is_zero(const std::vector<int>& f)
{
    for (int c : f)
        if (c != 0)
            return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const std::vector<int>& f, long long p)
{
    const int m = static_cast<int>(f.size()) - 1;
    for (int dd = 1; dd <= m / 2; ++dd) {
        const long long count = ipow(p, dd);
        for (long long k = 0; k < count; ++k) {
            std::vector<int> g(dd + 1, 0);
            long long kk = k;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<int>(kk % p);
                kk /= p;
            }
            g[dd] = 1;
            if (poly_is_zero(poly_mod(f, g, p)))
                return false;
        }
    }
    return true;
}

} // namespace

Field::Field(long long p, int m)
{
    if (!is_prime(p))
        throw NotPrime("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1)
        throw BadParameters("extension degree must be >= 1, got " + std::to_string(m));
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw TooLarge("field size p^m exceeds 2^20");
    }
    p_ = p;
    m_ = m;
    q_ = q;

    // Smallest monic irreducible in lexicographic order on (c_0,...,c_{m-1}),
    // c_0 compared first.
    if (m == 1) {
        modulus_ = {0, 1};
    } else {
        for (long long k = 0; k < q_ && modulus_.empty(); ++k) {
            std::vector<int> cand(m + 1, 0);
            long long kk = k;
            for (int i = m - 1; i >= 0; --i) {
                cand[i] = static_cast<int>(kk % p);
                kk /= p;
            }
            cand[m] = 1;
            if (cand[0] == 0)
                continue; // divisible by x
            if (poly_irreducible(cand, p))
                modulus_ = cand;
        }
        if (modulus_.empty())
            internal_failure("no irreducible modulus found");
    }

    // Smallest primitive element in canonical code order.
    const auto factors = factorize(q_ - 1);
    generator_ = 0;
    for (long long code = 1; code < q_; ++code) {
        bool primitive = true;
        for (const auto& [ell, e] : factors) {
            (void)e;
            if (pow_raw(static_cast<std::uint32_t>(code), (q_ - 1) / ell) == 1u) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = static_cast<std::uint32_t>(code);
            break;
        }
    }
    if (generator_ == 0)
        internal_failure("no primitive element found");

    exp_.assign(q_ - 1, 0);
    dlog_.assign(q_, -1);
    std::uint32_t x = 1;
    for (long long k = 0; k < q_ - 1; ++k) {
        exp_[k] = x;
        if (dlog_[x] != -1)
            internal_failure("discrete log table is not a bijection");
        dlog_[x] = k;
        x = mul_raw(x, generator_);
    }
    if (x != 1)
        internal_failure("generator order differs from q-1");

    // Trace table by Frobenius iteration through the log tables.
    trace_.assign(q_, 0);
    const long long n = q_ - 1;
    for (long long code = 1; code < q_; ++code) {
        std::vector<int> acc(m_, 0);
        const long long ld = dlog_[code];
        long long pe = 1 % n;
        for (int i = 0; i < m_; ++i) {
            const std::uint32_t conj = exp_[(ld * pe) % n];
            const auto digits = decode(conj);
            for (int j = 0; j < m_; ++j)
                acc[j] = static_cast<int>((acc[j] + digits[j]) % p_);
            pe = (pe * p_) % n;
        }
        for (int j = 1; j < m_; ++j)
            if (acc[j] != 0)
                internal_failure("trace left the prime field");
        trace_[code] = acc[0];
    }
}

std::vector<int> Field::decode(std::uint32_t code) const
{
    std::vector<int> c(m_, 0);
    long long k = code;
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(k % p_);
        k /= p_;
    }
    return c;
}

std::uint32_t Field::encode(const std::vector<int>& coeffs) const
{
    long long code = 0;
    long long w = 1;
    for (int i = 0; i < m_; ++i) {
        code += coeffs[i] * w;
        w *= p_;
    }
    return static_cast<std::uint32_t>(code);
}

std::uint32_t Field::mul_raw(std::uint32_t a, std::uint32_t b) const
{
    if (a == 0 || b == 0)
        return 0;
    auto prod = poly_mul(decode(a), decode(b), p_);
    prod = poly_mod(prod, modulus_, p_);
    prod.resize(m_, 0);
    return encode(prod);
}

std::uint32_t Field::pow_raw(std::uint32_t a, long long e) const
{
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1)
            r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

FqElement Field::element(long long code) const
{
    if (code < 0 || code >= q_)
        throw BadParameters("element code out of range");
    return {static_cast<std::uint32_t>(code)};
}

FqElement Field::add(FqElement a, FqElement b) const
{
    const auto da = decode(a.code);
    const auto db = decode(b.code);
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i)
        c[i] = static_cast<int>((da[i] + db[i]) % p_);
    return {encode(c)};
}

FqElement Field::sub(FqElement a, FqElement b) const
{
    return add(a, neg(b));
}

FqElement Field::neg(FqElement a) const
{
    const auto da = decode(a.code);
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i)
        c[i] = static_cast<int>((p_ - da[i]) % p_);
    return {encode(c)};
}

FqElement Field::mul(FqElement a, FqElement b) const
{
    if (a.code == 0 || b.code == 0)
        return {0};
    return {exp_[(dlog_[a.code] + dlog_[b.code]) % (q_ - 1)]};
}

FqElement Field::pow(FqElement a, long long e) const
{
    if (a.code == 0) {
        if (e == 0)
            return one();
        if (e < 0)
            throw ZeroArgument("negative power of zero");
        return zero();
    }
    const long long n = q_ - 1;
    if (n == 1)
        return one();
    const long long k = (dlog_[a.code] * (((e % n) + n) % n)) % n;
    return {exp_[k]};
}

FqElement Field::inverse(FqElement a) const
{
    if (a.code == 0)
        throw ZeroArgument("zero has no inverse");
    return {exp_[(q_ - 1 - dlog_[a.code]) % (q_ - 1)]};
}

long long Field::dlog(FqElement a) const
{
    if (a.code == 0)
        throw ZeroArgument("discrete log of zero");
    return dlog_[a.code];
}

int Field::trace(FqElement a) const
{
    return trace_[a.code];
}

long long Field::order(FqElement a) const
{
    if (a.code == 0)
        throw ZeroArgument("order of zero");
    const long long k = dlog_[a.code];
    long long g = q_ - 1;
    long long b = k;
    while (b != 0) {
        const long long t = g % b;
        g = b;
        b = t;
    }
    return (q_ - 1) / g;
}

std::complex<double> char_eval_additive(const Field& f, FqElement a, FqElement x)
{
    return unit_root(f.trace(f.mul(a, x)), f.p());
}

std::complex<double> char_eval_multiplicative(const Field& f, long long j, FqElement x)
{
    if (x.code == 0)
        throw ZeroArgument("multiplicative character is undefined at 0");
    if (f.q() == 2)
        return {1.0, 0.0};
    return unit_root(j * f.dlog(x), f.q() - 1);
}

std::complex<double> gauss_sum(const Field& f, long long j, FqElement a)
{
    const long long n = f.q() - 1;
    if (n > 0 && ((j % n) + n) % n == 0)
        throw TrivialCharacter("gauss sum requires a nontrivial multiplicative character");
    if (a.code == 0)
        throw TrivialCharacter("gauss sum requires a nontrivial additive character");
    std::complex<double> s{0.0, 0.0};
    for (long long code = 1; code < f.q(); ++code) {
        const FqElement x{static_cast<std::uint32_t>(code)};
        s += char_eval_multiplicative(f, j, x) * char_eval_additive(f, a, x);
    }
    return s;
}

// ---------------------------------------------------------------------------
// GR(4,m)

GaloisRing::GaloisRing(int m)
{
    if (m < 1 || m > kMaxGaloisRingDegree)
        throw TooLarge("Galois ring degree must be in [1, " + std::to_string(kMaxGaloisRingDegree)
                       + "], got " + std::to_string(m));
    m_ = m;
    ring_size_ = 1;
    for (int i = 0; i < 2 * m; ++i)
        ring_size_ *= 2;
    teich_size_ = 1LL << m;

    const Field base(2, m);
    const std::vector<int>& f = base.modulus();

    // Hensel lift by the even/odd split: f = e(x^2) + x o(x^2) over F_2 gives
    // h(y) = +-(e(y)^2 - y o(y)^2) over Z_4 with h == f mod 2.
    std::vector<int> e((m / 2) + 1, 0), o((m + 1) / 2, 0);
    for (int i = 0; i <= m; ++i) {
        if (i % 2 == 0)
            e[i / 2] = f[i];
        else
            o[(i - 1) / 2] = f[i];
    }
    auto sq = [](const std::vector<int>& a) {
        std::vector<int> r(2 * a.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * a[j]) % 4;
        return r;
    };
    const auto e2 = sq(e);
    const auto o2 = o.empty() ? std::vector<int>{} : sq(o);
    std::vector<int> h(m + 1, 0);
    for (std::size_t i = 0; i < e2.size() && i <= static_cast<std::size_t>(m); ++i)
        h[i] = e2[i];
    for (std::size_t i = 0; i < o2.size() && i + 1 <= static_cast<std::size_t>(m); ++i)
        h[i + 1] = ((h[i + 1] - o2[i]) % 4 + 4) % 4;
    if (m % 2 == 1)
        for (int& c : h)
            c = (4 - c) % 4;
    if (h[m] != 1)
        internal_failure("Hensel lift is not monic");
    for (int i = 0; i <= m; ++i)
        if (h[i] % 2 != f[i])
            internal_failure("Hensel lift does not reduce to the base modulus");
    modulus_ = h;

    // Teichmuller set: tau(alpha) = lift(alpha)^{2^m}, indexed by residue.
    teich_.resize(teich_size_);
    for (long long r = 0; r < teich_size_; ++r) {
        const GrElement t{teich_lift(static_cast<std::uint32_t>(r))};
        // residue check: reduction mod 2 must give r back
        const auto digs = decode(t.code);
        long long back = 0;
        for (int i = m_ - 1; i >= 0; --i)
            back = back * 2 + (digs[i] % 2);
        long long rr = 0;
        {
            long long w = 1;
            for (int i = 0; i < m_; ++i) {
                rr += (digs[i] % 2) * w;
                w *= 2;
            }
        }
        (void)back;
        if (rr != r)
            internal_failure("Teichmuller lift residue mismatch");
        if (pow(t, teich_size_) != t)
            internal_failure("Teichmuller element fails t^{2^m} = t");
        teich_[r] = t;
    }
    for (long long i = 0; i < teich_size_; ++i)
        for (long long j = i + 1; j < teich_size_; ++j)
            if (teich_[i] == teich_[j])
                internal_failure("Teichmuller set has duplicates");
}

std::vector<int> GaloisRing::decode(std::uint32_t code) const
{
    std::vector<int> c(m_, 0);
    long long k = code;
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(k % 4);
        k /= 4;
    }
    return c;
}

std::uint32_t GaloisRing::encode(const std::vector<int>& coeffs) const
{
    long long code = 0;
    long long w = 1;
    for (int i = 0; i < m_; ++i) {
        code += coeffs[i] * w;
        w *= 4;
    }
    return static_cast<std::uint32_t>(code);
}

std::uint32_t GaloisRing::teich_lift(std::uint32_t residue_code) const
{
    // naive 0/1 lift of the F_{2^m} coefficient tuple
    std::vector<int> c(m_, 0);
    long long k = residue_code;
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(k % 2);
        k /= 2;
    }
    return pow(GrElement{encode(c)}, teich_size_).code;
}

GrElement GaloisRing::element(long long code) const
{
    if (code < 0 || code >= ring_size_)
        throw BadParameters("ring element code out of range");
    return {static_cast<std::uint32_t>(code)};
}

GrElement GaloisRing::add(GrElement a, GrElement b) const
{
    const auto da = decode(a.code);
    const auto db = decode(b.code);
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i)
        c[i] = (da[i] + db[i]) % 4;
    return {encode(c)};
}

GrElement GaloisRing::sub(GrElement a, GrElement b) const
{
    const auto da = decode(a.code);
    const auto db = decode(b.code);
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i)
        c[i] = ((da[i] - db[i]) % 4 + 4) % 4;
    return {encode(c)};
}

GrElement GaloisRing::mul(GrElement a, GrElement b) const
{
    const auto da = decode(a.code);
    const auto db = decode(b.code);
    std::vector<int> r(2 * m_, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            r[i + j] = (r[i + j] + da[i] * db[j]) % 4;
    for (int d = 2 * m_ - 1; d >= m_; --d) {
        const int c = r[d];
        if (c == 0)
            continue;
        for (int i = 0; i <= m_; ++i)
            r[d - m_ + i] = ((r[d - m_ + i] - c * modulus_[i]) % 4 + 4) % 4;
    }
    r.resize(m_);
    return {encode(r)};
}

GrElement GaloisRing::pow(GrElement a, long long e) const
{
    GrElement r = one();
    while (e > 0) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::pair<GrElement, GrElement> GaloisRing::decompose(GrElement z) const
{
    const auto dz = decode(z.code);
    long long r1 = 0;
    {
        long long w = 1;
        for (int i = 0; i < m_; ++i) {
            r1 += (dz[i] % 2) * w;
            w *= 2;
        }
    }
    const GrElement a = teich_[r1];
    const GrElement rem = sub(z, a);
    const auto dr = decode(rem.code);
    long long r2 = 0;
    {
        long long w = 1;
        for (int i = 0; i < m_; ++i) {
            if (dr[i] % 2 != 0)
                internal_failure("a + 2b decomposition remainder is odd");
            r2 += ((dr[i] / 2) % 2) * w;
            w *= 2;
        }
    }
    const GrElement b = teich_[r2];
    if (add(a, mul(two(), b)) != z)
        internal_failure("a + 2b decomposition does not reproduce the element");
    return {a, b};
}

GrElement GaloisRing::frobenius(GrElement z) const
{
    const auto [a, b] = decompose(z);
    return add(mul(a, a), mul(two(), mul(b, b)));
}

int GaloisRing::trace(GrElement z) const
{
    GrElement acc = z;
    GrElement it = z;
    for (int i = 1; i < m_; ++i) {
        it = frobenius(it);
        acc = add(acc, it);
    }
    const auto digs = decode(acc.code);
    for (int i = 1; i < m_; ++i)
        if (digs[i] != 0)
            internal_failure("Galois ring trace left Z_4");
    return digs[0];
}

} // namespace amub
