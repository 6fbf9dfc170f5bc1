#pragma once

// Named constants of a cusped hyperbolic surface, either from explicit
// geometric data or from topological type (g, n) with a systole floor.

#include <optional>
#include <string>
#include <vector>

#include "geoforge/real.hpp"
#include "geoforge/threshold.hpp"

namespace geoforge {

// C(k) = 2 asinh(k) + d + 1.
inline Real basmajian_bound(const Integer& k, const Real& d1, unsigned bits = kDefaultPrecisionBits) {
    require(k >= 2, Errc::invalid_argument, "k must be at least 2");
    const unsigned p = bits + bit_length(k);
    return (2 * asinh(Real(k, p)) + d1.with_precision(p) + 1).with_precision(bits);
}

// (eps/12) sqrt(i), valid for eps <= 1/2.
inline Real thick_part_threshold(const Real& eps, const Integer& intersections,
                                 unsigned bits = kDefaultPrecisionBits) {
    require(eps > 0 && eps * 2 <= 1, Errc::epsilon_out_of_range, "needs 0 < eps <= 1/2");
    require(intersections >= 0, Errc::invalid_argument, "intersection number must be non-negative");
    const unsigned p = bits + bit_length(intersections);
    return (eps.with_precision(p) / 12 * sqrt(Real(intersections, p))).with_precision(bits);
}

inline Real bers_bound(int g, int n, unsigned bits = kDefaultPrecisionBits) {
    require(g >= 0 && n >= 0, Errc::not_applicable, "negative topological data");
    const long m = 3L * g - 3 + n;
    require(m >= 1, Errc::not_applicable, "needs 3g - 3 + n >= 1");
    const long chi = 2L * g - 2 + n;
    return 4 * m * log(4 * Real::pi(bits) * chi / m);
}

inline long adams_bound(int g, int n) {
    require(n >= 1 && g >= 0 && 2L * g - 2 + n > 0, Errc::not_hyperbolic_type,
            "needs a cusped hyperbolic type");
    return 12L * g + 5L * n - 11;
}

// Horocycle length bounding a cusp component of the eps0-thin part.
inline Real thin_boundary_horocycle(const Real& eps0, unsigned bits = kDefaultPrecisionBits) {
    require(eps0 > 0, Errc::invalid_argument, "eps0 must be positive");
    return 2 / sqrt(coth(eps0.with_precision(bits)) - 1);
}

// 2 log(4 cosh(L(g,n)/2) / h).
inline Real orthogonal_distance_bound(const Real& h, int g, int n, unsigned bits = kDefaultPrecisionBits) {
    require(h > 0, Errc::invalid_argument, "horocycle length must be positive");
    const Real L = bers_bound(g, n, bits);
    return 2 * log(4 * cosh(L / 2) / h.with_precision(bits));
}

inline Real collar_width(const Real& gamma, unsigned bits = kDefaultPrecisionBits) {
    require(gamma > 0, Errc::invalid_argument, "length must be positive");
    return asinh(1 / sinh(gamma.with_precision(bits) / 2));
}

// (eps0/12) sqrt(x) > 2 asinh(eps0 x/2) + d_eps0 + 2 eps0 for all x >= D.
inline ThresholdCertificate find_D(const Real& eps0, const Real& d_eps0, unsigned bits = kDefaultPrecisionBits,
                                   const Integer& cap = default_d_cap()) {
    require(eps0 > 0, Errc::invalid_argument, "eps0 must be positive");
    require(d_eps0 >= 0, Errc::invalid_argument, "distance must be non-negative");
    auto phi = [&](const Real& x, unsigned p) {
        const Real e = eps0.with_precision(p);
        return e / 12 * sqrt(x) - 2 * asinh(e * x / 2) - d_eps0.with_precision(p) - 2 * e;
    };
    // phi'(x) = eps0/(24 sqrt x) - eps0/sqrt(1 + (eps0 x/2)^2)
    auto slope = [&](const Real& x, unsigned p) {
        const Real e = eps0.with_precision(p);
        const Real q = e * x / 2;
        return sqrt(1 + q * q) - 24 * sqrt(x);
    };
    return certified_threshold(phi, slope, Integer(2), cap, ThresholdDomain::real, bits);
}

// 2 asinh(k) + d1 + 1 < (eps/h_max) k^(1/5) for all k >= K, K >= floor_D.
inline ThresholdCertificate find_K(const Real& eps, const Real& h_max, const Real& d1, const Integer& floor_D,
                                   unsigned bits = kDefaultPrecisionBits,
                                   const Integer& cap = default_k_cap()) {
    require(eps > 0 && h_max > 0 && d1 >= 0, Errc::invalid_argument, "needs positive eps, h_max and d1");
    require(floor_D >= 2, Errc::invalid_argument, "floor must be at least 2");
    auto phi = [&](const Real& k, unsigned p) {
        return eps.with_precision(p) / h_max.with_precision(p) * root(k, 5) - 2 * asinh(k) -
               d1.with_precision(p) - 1;
    };
    // phi'(k) = (eps/(5 h)) k^(-4/5) - 2/sqrt(1+k^2)
    auto slope = [&](const Real& k, unsigned p) {
        const Real c = eps.with_precision(p) / (h_max.with_precision(p) * 5);
        return c * sqrt(1 + k * k) - 2 * root(k, 5) * root(k, 5) * root(k, 5) * root(k, 5);
    };
    return certified_threshold(phi, slope, floor_D, cap, ThresholdDomain::integer, bits);
}

// 2 asinh(k) + d1 + 1 < (eps/12) sqrt(k) for all k >= K.
inline ThresholdCertificate direct_K(const Real& eps, const Real& d1, unsigned bits = kDefaultPrecisionBits,
                                     const Integer& cap = default_k_cap()) {
    require(eps > 0 && d1 >= 0, Errc::invalid_argument, "needs positive eps and non-negative d1");
    auto phi = [&](const Real& k, unsigned p) {
        return eps.with_precision(p) / 12 * sqrt(k) - 2 * asinh(k) - d1.with_precision(p) - 1;
    };
    // phi'(k) = eps/(24 sqrt k) - 2/sqrt(1+k^2)
    auto slope = [&](const Real& k, unsigned p) {
        return eps.with_precision(p) * sqrt(1 + k * k) - 48 * sqrt(k);
    };
    return certified_threshold(phi, slope, Integer(2), cap, ThresholdDomain::integer, bits);
}

enum class SurfaceMode { explicit_data, topological };

struct SurfaceDescription {
    SurfaceMode mode = SurfaceMode::explicit_data;
    std::string name;
    // explicit data
    Real h_max;
    Real systole;
    Real d1;
    Real d_eps0;
    // topological type; systole holds the floor
    int genus = 0;
    int punctures = 0;

    static SurfaceDescription explicit_surface(const Real& h_max, const Real& systole, const Real& d1,
                                               const Real& d_eps0) {
        require(h_max > 0 && systole > 0 && d1 > 0 && d_eps0 > 0, Errc::invalid_argument,
                "lengths must be positive");
        SurfaceDescription s;
        s.mode = SurfaceMode::explicit_data;
        s.name = "explicit";
        s.h_max = h_max;
        s.systole = systole;
        s.d1 = d1;
        s.d_eps0 = d_eps0;
        return s;
    }

    static SurfaceDescription topological_type(int g, int n, const Real& systole_floor) {
        require(systole_floor > 0, Errc::invalid_argument, "systole floor must be positive");
        adams_bound(g, n);
        require(3L * g - 3 + n >= 1, Errc::not_applicable, "needs 3g - 3 + n >= 1");
        SurfaceDescription s;
        s.mode = SurfaceMode::topological;
        s.name = "topological";
        s.genus = g;
        s.punctures = n;
        s.systole = systole_floor;
        return s;
    }
};

// Thrice punctured sphere: Adams bound 4, systole 2 acosh 3, d = 2 log 4
// at the unit horocycle, and the eps0-thin boundary distance from the same
// cusp formula at the thin boundary horocycle.
inline SurfaceDescription thrice_punctured_sphere(unsigned bits = kDefaultPrecisionBits) {
    const Real h_max(4L, bits);
    const Real systole = 2 * acosh(Real(3L, bits));
    const Real eps0 = min(1 / (30 * h_max) / 5, systole / 5);
    const Real d_eps0 = 2 * log(2 * sqrt(coth(eps0) - 1));
    auto s = SurfaceDescription::explicit_surface(h_max, systole, 2 * log(Real(4L, bits)), d_eps0);
    s.name = "Y";
    return s;
}

struct ThinConstants {
    Real h0;
    Real eps0;
    std::string rule;
};

// h0 = 1/(30 h_max); eps0 = min(h0/5, s/5) for explicit data and
// min(h0/5, s/2) for a topological type, where h_max is Adams' bound.
inline ThinConstants derive_thin_constants(const SurfaceDescription& s, unsigned bits = kDefaultPrecisionBits) {
    const bool topo = s.mode == SurfaceMode::topological;
    const Real h_max = topo ? Real(adams_bound(s.genus, s.punctures), bits) : s.h_max.with_precision(bits);
    const Real systole = s.systole.with_precision(bits);
    ThinConstants t;
    t.h0 = 1 / (30 * h_max);
    t.eps0 = topo ? min(t.h0 / 5, systole / 2) : min(t.h0 / 5, systole / 5);
    t.rule = topo ? "min(h0/5, s/2)" : "min(h0/5, s/5)";
    return t;
}

struct ConstantsReport {
    SurfaceDescription surface;
    Real h_max;
    Real systole;
    Real h0;
    Real eps0;
    std::string eps0_rule;
    Real d_used;
    Real d_eps0;
    Real thin_boundary_horocycle;
    ThresholdCertificate D;
    Real eps;
    ThresholdCertificate K;
    Real eps_thick;                      // min(1/4, s/2)
    ThresholdCertificate K_direct_thick;
    ThresholdCertificate K_direct_pipeline;
    std::optional<Real> L_bers;
    std::optional<long> h_adams;
    std::optional<Real> d_corollary;
    unsigned precision_bits = 0;

    unsigned working_bits = 0;         // precision of every Real field above

    Real C(const Integer& k) const { return basmajian_bound(k, d_used, precision_bits); }
};

inline constexpr const char* kEps0Discrepancy =
    "explicit surfaces use eps0 = min(h0/5, s/5); topological classes use eps0 = min(h0/5, s/2); "
    "the two rules are kept distinct";

struct SearchCaps {
    Integer d_cap = default_d_cap();
    Integer k_cap = default_k_cap();
};

// K moves by about dK = K dx / x for a relative input error dx / x, so the
// inputs need log2(K) bits beyond the reporting precision.
inline unsigned constants_working_precision(unsigned bits, const SearchCaps& caps = {}) {
    return bits + bit_length(caps.k_cap) + 64;
}

// Searches certify at `bits`; the inputs and derived fields are carried at
// constants_working_precision(bits, caps). Explicit data should be supplied
// at that precision too.
inline ConstantsReport compute_constants(const SurfaceDescription& s, unsigned bits = kDefaultPrecisionBits,
                                         const SearchCaps& caps = {}) {
    ConstantsReport r;
    r.surface = s;
    r.precision_bits = bits;
    const unsigned work = constants_working_precision(bits, caps);
    r.working_bits = work;
    r.systole = s.systole.with_precision(work);
    const ThinConstants thin = derive_thin_constants(s, work);
    r.h0 = thin.h0;
    r.eps0 = thin.eps0;
    r.eps0_rule = thin.rule;
    if (s.mode == SurfaceMode::topological) {
        r.h_adams = adams_bound(s.genus, s.punctures);
        r.h_max = Real(*r.h_adams, work);
        r.L_bers = bers_bound(s.genus, s.punctures, work);
        r.d_corollary = 2 * log(4 * cosh(*r.L_bers / 2));
        r.d_used = *r.d_corollary;
        r.thin_boundary_horocycle = thin_boundary_horocycle(r.eps0, work);
        r.d_eps0 = orthogonal_distance_bound(r.thin_boundary_horocycle, s.genus, s.punctures, work);
    } else {
        r.h_max = s.h_max.with_precision(work);
        r.d_used = s.d1.with_precision(work);
        r.thin_boundary_horocycle = thin_boundary_horocycle(r.eps0, work);
        r.d_eps0 = s.d_eps0.with_precision(work);
    }
    r.D = find_D(r.eps0, r.d_eps0, bits, caps.d_cap);
    r.eps = r.eps0 / (10 * Real(r.D.value, work));
    r.K = find_K(r.eps, r.h_max, r.d_used, r.D.value, bits, caps.k_cap);
    r.eps_thick = min(Real(0.25, work), r.systole / 2);
    r.K_direct_thick = direct_K(r.eps_thick, r.d_used, bits, caps.k_cap);
    r.K_direct_pipeline = direct_K(r.eps, r.d_used, bits, caps.k_cap);
    return r;
}

} // namespace geoforge
