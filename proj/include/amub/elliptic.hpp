#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "amub/errors.hpp"

namespace amub {

// y^2 = x^3 + a x + b over F_p, nonsingular.
struct Curve {
    long long p = 0;
    long long a = 0;
    long long b = 0;
};

Curve curve_create(long long p, long long a, long long b);

struct CurvePoint {
    long long x = 0;
    long long y = 0;
    bool infinity = false;

    static CurvePoint at_infinity() { return {0, 0, true}; }

    friend bool operator==(const CurvePoint& lhs, const CurvePoint& rhs)
    {
        if (lhs.infinity || rhs.infinity)
            return lhs.infinity == rhs.infinity;
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

// The rational point group E(F_p), with the point list in canonical order
// (affine points ascending by (x, y), infinity last), the invariant-factor
// decomposition Z_{n1} x Z_{n2} (n1 | n2), and a coordinate table mapping
// each point to (e1, e2) with P = e1*g1 + e2*g2.
class CurveGroup {
public:
    static CurveGroup enumerate(const Curve& c); // enumerate_group

    const Curve& curve() const { return curve_; }
    const std::vector<CurvePoint>& points() const { return points_; }
    long long order() const { return static_cast<long long>(points_.size()); }
    long long n1() const { return n1_; }
    long long n2() const { return n2_; }
    const CurvePoint& generator1() const { return g1_; }
    const CurvePoint& generator2() const { return g2_; }

    bool contains(const CurvePoint& pt) const;
    std::size_t index_of(const CurvePoint& pt) const; // PointNotOnCurve if absent
    std::pair<long long, long long> coordinates(const CurvePoint& pt) const;

    CurvePoint add(const CurvePoint& lhs, const CurvePoint& rhs) const;
    CurvePoint negate(const CurvePoint& pt) const;
    CurvePoint scalar_mul(long long k, const CurvePoint& pt) const;
    long long point_order(const CurvePoint& pt) const;

private:
    Curve curve_;
    std::vector<CurvePoint> points_;
    long long n1_ = 1;
    long long n2_ = 1;
    CurvePoint g1_;
    CurvePoint g2_;
    std::vector<std::pair<long long, long long>> coords_; // by point index

    CurveGroup() = default;
};

// Character of E(F_p) indexed through the coordinate table:
// chi(P) = zeta_{n1}^{s1 e1} * zeta_{n2}^{s2 e2}.
struct CurveCharacter {
    long long s1 = 0;
    long long s2 = 0;

    bool trivial() const { return s1 == 0 && s2 == 0; }
};

std::complex<double> curve_char_eval(const CurveGroup& g, const CurveCharacter& chi,
                                     const CurvePoint& pt);

// f = u(x) + v(x) y with u(0) = 0. Coefficient vectors are indexed by degree
// (u_coeffs[0] is forced to zero; v may be empty for the zero polynomial).
class CurveFunction {
public:
    CurveFunction(std::vector<long long> u_coeffs, std::vector<long long> v_coeffs);

    const std::vector<long long>& u() const { return u_; }
    const std::vector<long long>& v() const { return v_; }

    // Deg(f) = max{2 deg u, 3 + 2 deg v}, absent terms dropped, 0 for f = 0.
    long long deg() const;
    bool is_constant() const { return deg() == 0; }

private:
    std::vector<long long> u_;
    std::vector<long long> v_;
};

// The p^{m-1} functions with Deg(f) <= m and u(0) = 0, in deterministic
// order (u coefficients before v coefficients, lexicographic ascending).
std::vector<CurveFunction> sigma_m_enumerate(const CurveGroup& g, int m);

// u(A) + v(A) B mod p on affine (A, B); 0 at infinity.
long long function_eval(const Curve& c, const CurveFunction& f, const CurvePoint& pt);

// S_E(f, chi) = sum over E(F_p) of zeta_p^{f(P)} chi(P). For nonconstant f
// the analytic bound |S| <= 2 Deg(f) sqrt(p) is enforced; exceeding it means
// an implementation bug, reported as BoundViolated.
std::complex<double> curve_char_sum(const CurveGroup& g, const CurveFunction& f,
                                    const CurveCharacter& chi);

} // namespace amub
