#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "amub/errors.hpp"

namespace amub {

// Element of F_{p^m}, identified by its canonical code
// sum c_i p^i for the coefficient tuple (c_0,...,c_{m-1}).
struct FqElement {
    std::uint32_t code = 0;

    friend bool operator==(FqElement a, FqElement b) { return a.code == b.code; }
    friend bool operator!=(FqElement a, FqElement b) { return a.code != b.code; }
    friend bool operator<(FqElement a, FqElement b) { return a.code < b.code; }
};

// F_{p^m} with a fixed reduction modulus and a fixed primitive element.
//
// The modulus is the lexicographically smallest monic irreducible degree-m
// polynomial over F_p (coefficient tuple read low-to-high), the generator is
// the smallest primitive element in canonical code order, so two fields built
// from the same (p, m) are identical in every table.
class Field {
public:
    Field(long long p, int m);

    long long p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; }

    // Monic modulus, coefficients of x^0..x^m.
    const std::vector<int>& modulus() const { return modulus_; }

    FqElement element(long long code) const;
    FqElement zero() const { return {0}; }
    FqElement one() const { return {1}; }
    FqElement generator() const { return {generator_}; }

    FqElement add(FqElement a, FqElement b) const;
    FqElement sub(FqElement a, FqElement b) const;
    FqElement neg(FqElement a) const;
    FqElement mul(FqElement a, FqElement b) const;
    FqElement pow(FqElement a, long long e) const;
    FqElement inverse(FqElement a) const; // ZeroArgument on 0

    // Discrete log base generator(), defined for nonzero elements.
    long long dlog(FqElement a) const;

    // Absolute trace F_q -> F_p, as an integer in {0,...,p-1}.
    int trace(FqElement a) const;

    // Multiplicative order of a nonzero element.
    long long order(FqElement a) const;

private:
    long long p_ = 0;
    long long q_ = 0;
    int m_ = 0;
    std::vector<int> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;  // generator powers, size q-1
    std::vector<long long> dlog_;     // size q, dlog_[0] = -1
    std::vector<int> trace_;          // size q

    std::vector<int> decode(std::uint32_t code) const;
    std::uint32_t encode(const std::vector<int>& coeffs) const;
    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow_raw(std::uint32_t a, long long e) const;
};

struct AdditiveCharacter {
    FqElement a; // lambda_a(x) = zeta_p^{Tr(a x)}
};

struct MultiplicativeCharacter {
    long long index = 0; // chi_j(g^k) = zeta_{q-1}^{jk}
};

std::complex<double> char_eval_additive(const Field& f, FqElement a, FqElement x);
std::complex<double> char_eval_multiplicative(const Field& f, long long j, FqElement x);

// sum over F_q* of chi_j(x) * lambda_a(x); both characters must be nontrivial.
std::complex<double> gauss_sum(const Field& f, long long j, FqElement a);

// Element of GR(4,m) as the code sum c_i 4^i of its coefficient tuple.
struct GrElement {
    std::uint32_t code = 0;

    friend bool operator==(GrElement a, GrElement b) { return a.code == b.code; }
    friend bool operator!=(GrElement a, GrElement b) { return a.code != b.code; }
};

// The Galois ring GR(4,m) = Z_4[x]/(h) where h is the Hensel lift of the
// Field(2,m) modulus. Carries the Teichmuller set and the generalized trace.
class GaloisRing {
public:
    explicit GaloisRing(int m);

    int m() const { return m_; }
    long long ring_size() const { return ring_size_; }   // 4^m
    long long teich_size() const { return teich_size_; } // 2^m

    // Monic modulus over Z_4, coefficients of x^0..x^m; reduces mod 2 to the
    // Field(2,m) modulus.
    const std::vector<int>& modulus() const { return modulus_; }

    // The 2^m solutions of t^{2^m} = t, ordered by their mod-2 residue code.
    const std::vector<GrElement>& teichmuller() const { return teich_; }

    GrElement element(long long code) const;
    GrElement zero() const { return {0}; }
    GrElement one() const { return {1}; }
    GrElement two() const { return {2}; }

    GrElement add(GrElement a, GrElement b) const;
    GrElement sub(GrElement a, GrElement b) const;
    GrElement mul(GrElement a, GrElement b) const;
    GrElement pow(GrElement a, long long e) const;

    // Unique (a, b) with z = a + 2b and a, b Teichmuller.
    std::pair<GrElement, GrElement> decompose(GrElement z) const;

    // Frobenius phi(a + 2b) = a^2 + 2b^2.
    GrElement frobenius(GrElement z) const;

    // Trace to Z_4: sum of the m Frobenius iterates.
    int trace(GrElement z) const;

private:
    int m_ = 0;
    long long ring_size_ = 0;
    long long teich_size_ = 0;
    std::vector<int> modulus_;
    std::vector<GrElement> teich_;

    std::vector<int> decode(std::uint32_t code) const;
    std::uint32_t encode(const std::vector<int>& coeffs) const;
    std::uint32_t teich_lift(std::uint32_t residue_code) const;
};

} // namespace amub
