#pragma once

// Pairs of pants with cusps: orthogonal self-distance of a horocycle,
// lengths of the words beta^-1 alpha^k, and the counterexample surfaces
// built from pants with boundary lengths x and y.

#include <algorithm>
#include <array>

#include "geoforge/constants.hpp"
#include "geoforge/real.hpp"

namespace geoforge {

// Boundary lengths; 0 marks a cusp. Entry 0 is the distinguished cusp
// whose horocycle is measured.
struct PantsWithCusps {
    std::array<Real, 3> boundary;

    bool is_cusp(std::size_t i) const { return boundary[i].is_zero(); }
};

inline PantsWithCusps make_pants(const Real& l0, const Real& l1, const Real& l2) {
    for (const Real* l : {&l0, &l1, &l2})
        require(*l >= 0, Errc::invalid_argument, "boundary lengths must be non-negative");
    return {{l0, l1, l2}};
}

inline PantsWithCusps make_pants(double l0, double l1, double l2, unsigned bits = kDefaultPrecisionBits) {
    return make_pants(Real(l0, bits), Real(l1, bits), Real(l2, bits));
}

// 1: the other two boundaries are geodesics, 2: one of them is a cusp,
// 3: thrice punctured sphere.
inline int cusp_case(const PantsWithCusps& p) {
    require(p.is_cusp(0), Errc::no_cusp, "distinguished boundary must be a cusp");
    return 1 + static_cast<int>(p.is_cusp(1)) + static_cast<int>(p.is_cusp(2));
}

// Largest horocycle level for which the distance formula is meaningful:
// 2(cosh(alpha/2) + cosh(beta/2)).
inline Real horocycle_level_limit(const PantsWithCusps& p, unsigned bits = kDefaultPrecisionBits) {
    cusp_case(p);
    return 2 * (cosh(p.boundary[1].with_precision(bits) / 2) + cosh(p.boundary[2].with_precision(bits) / 2));
}

// 2 log(2(cosh(alpha/2) + cosh(beta/2)) / h); cusps enter as length 0,
// which gives 2 log(2(cosh(alpha/2) + 1)/h) and 2 log(4/h).
inline Real horocycle_self_distance(const PantsWithCusps& p, const Real& h, unsigned bits = kDefaultPrecisionBits) {
    require(h > 0, Errc::invalid_argument, "horocycle level must be positive");
    const Real limit = horocycle_level_limit(p, bits);
    require(h.with_precision(bits) <= limit, Errc::level_too_large,
            "level " + h.str(12) + " exceeds " + limit.str(12));
    return 2 * log(limit / h.with_precision(bits));
}

// cosh(l/2) for the word beta^-1 alpha^k in pants with boundary a, b, c:
// (sinh(ka/2)/sinh(a/2))(cosh(c/2) + cosh(a/2)cosh(b/2)) + cosh(ka/2)cosh(b/2).
inline Real back_geodesic_cosh(const Real& a, const Real& b, const Real& c, long k,
                               unsigned bits = kDefaultPrecisionBits) {
    require(a > 0 && b > 0 && c > 0, Errc::invalid_argument, "boundary lengths must be positive");
    require(k >= 1, Errc::invalid_argument, "k must be at least 1");
    const Real ha = a.with_precision(bits) / 2, hb = b.with_precision(bits) / 2, hc = c.with_precision(bits) / 2;
    return sinh(k * ha) / sinh(ha) * (cosh(hc) + cosh(ha) * cosh(hb)) + cosh(k * ha) * cosh(hb);
}

inline Real back_geodesic_length(const Real& a, const Real& b, const Real& c, long k,
                                 unsigned bits = kDefaultPrecisionBits) {
    return 2 * acosh(back_geodesic_cosh(a, b, c, k, bits));
}

inline Real back_geodesic_length(const PantsWithCusps& p, long k, unsigned bits = kDefaultPrecisionBits) {
    return back_geodesic_length(p.boundary[0], p.boundary[1], p.boundary[2], k, bits);
}

struct RealMatrix {
    Real a, b, c, d;

    Real trace() const { return a + d; }
    Real det() const { return a * d - b * c; }
    RealMatrix inverse() const { return {d, -b, -c, a}; }

    friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

inline RealMatrix real_power(const RealMatrix& m, long k) {
    const unsigned p = m.a.precision();
    RealMatrix out{Real(1L, p), Real(p), Real(p), Real(1L, p)};
    for (long i = 0; i < k; ++i) out = out * m;
    return out;
}

// Generators of a pants group with tr alpha = 2cosh(a/2),
// tr beta = 2cosh(b/2), tr(alpha beta) = -2cosh(c/2):
//   alpha = diag(e^(a/2), e^(-a/2)),  beta = [[p, 1], [ps - 1, s]].
struct PantsGroup {
    RealMatrix alpha;
    RealMatrix beta;
};

inline PantsGroup pants_group(const Real& a, const Real& b, const Real& c, unsigned bits = kDefaultPrecisionBits) {
    require(a > 0 && b > 0 && c > 0, Errc::invalid_argument, "boundary lengths must be positive");
    const Real ha = a.with_precision(bits) / 2, hb = b.with_precision(bits) / 2, hc = c.with_precision(bits) / 2;
    const Real p = -(cosh(hc) + exp(-ha) * cosh(hb)) / sinh(ha);
    const Real s = 2 * cosh(hb) - p;
    return {{exp(ha), Real(bits), Real(bits), exp(-ha)}, {p, Real(1L, bits), p * s - 1, s}};
}

// 2 acosh(|tr|/2).
inline Real length_from_real_trace(const Real& tr) { return 2 * acosh(abs(tr) / 2); }

// k(cosh(x/2) + cosh(y/2)) + cosh(x/2)
inline Real g2_cosh(const Real& x, const Real& y, long k) {
    return k * (cosh(x / 2) + cosh(y / 2)) + cosh(x / 2);
}

// k(cosh(y/2) + 1) + 1
inline Real g3_cosh(const Real& y, long k) { return k * (cosh(y / 2) + 1) + 1; }

struct ExampleSurfaceReport {
    long k = 0;
    Real x, y;
    Real l_g1, l_g2, l_g3;
    Real collar_2w;
    bool bullet1 = false;     // l(g1) < l(g3)
    bool bullet2 = false;     // l(g1) < 2 w(y)
    bool g3_below_g2 = false; // l(g3) < l(g2)
    Real margin1;             // l(g3) - l(g1)
    Real margin2;             // 2 w(y) - l(g1)
    Real margin3;             // l(g2) - l(g3)
    bool asserted = false;    // k >= 100
    unsigned precision_bits = 0;
    unsigned margin_precision_bits = 0;
};

namespace detail {

struct ExampleValues {
    Real x, y, l1, l2, l3, w2;
};

inline ExampleValues example_values(long k, unsigned bits) {
    const Real kk(k, bits);
    const Real y = 2 * asinh(1 / sinh(kk / 16));
    const Real x = y / sqrt(2 * kk + 1);
    return {x, y, back_geodesic_length(x, x, x, k, bits), 2 * acosh(g2_cosh(x, y, k)),
            2 * acosh(g3_cosh(y, k)), 2 * collar_width(y, bits)};
}

} // namespace detail

inline ExampleSurfaceReport build_example_surface(long k, unsigned bits = kDefaultPrecisionBits,
                                                  unsigned cap = 1024) {
    require(k >= 1, Errc::invalid_argument, "k must be at least 1");
    constexpr unsigned guard = 20;
    auto m1 = certify([&](unsigned p) { auto v = detail::example_values(k, p); return v.l3 - v.l1; }, bits, guard, cap);
    auto m2 = certify([&](unsigned p) { auto v = detail::example_values(k, p); return v.w2 - v.l1; }, bits, guard, cap);
    auto m3 = certify([&](unsigned p) { auto v = detail::example_values(k, p); return v.l2 - v.l3; }, bits, guard, cap);
    const unsigned used = std::max({m1.precision_bits, m2.precision_bits, m3.precision_bits});
    const auto v = detail::example_values(k, used);

    ExampleSurfaceReport r;
    r.k = k;
    r.x = v.x;
    r.y = v.y;
    r.l_g1 = v.l1;
    r.l_g2 = v.l2;
    r.l_g3 = v.l3;
    r.collar_2w = v.w2;
    r.margin1 = m1.value;
    r.margin2 = m2.value;
    r.margin3 = m3.value;
    r.bullet1 = m1.value > 0;
    r.bullet2 = m2.value > 0;
    r.g3_below_g2 = m3.value > 0;
    r.asserted = k >= 100;
    r.precision_bits = bits;
    r.margin_precision_bits = used;
    return r;
}

} // namespace geoforge
