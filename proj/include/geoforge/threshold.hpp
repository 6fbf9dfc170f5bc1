#pragma once

// Certified search for the least integer n >= floor with phi(x) > 0 for
// every x >= n, where phi decreases up to a single turning point x* and
// increases afterwards. The turning point is located from the sign of
// phi' by bisection; beyond it positivity at one point settles the tail.

#include <string>

#include "geoforge/real.hpp"

namespace geoforge {

struct ThresholdCertificate {
    Integer value;
    Real turning_point;          // phi' > 0 for x > turning_point
    Real phi_at_value;           // > 0
    Real phi_before;             // phi(value - 1), or phi at the turning point if that is the minimum
    bool holds_at_value = false;
    bool fails_below = false;    // value == floor, or the condition fails at value - 1
    bool value_at_floor = false;
    bool beyond_turning_point = false;
    unsigned precision_bits = 0;
};

enum class ThresholdDomain { real, integer };

namespace detail {

inline Integer pow10(unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

} // namespace detail

inline const Integer& default_d_cap() {
    static const Integer cap = detail::pow10(64);
    return cap;
}

inline const Integer& default_k_cap() {
    static const Integer cap = detail::pow10(300);
    return cap;
}

// phi(x, bits) and slope(x, bits) take x at `bits` precision; slope must
// have the sign of phi'. The slope is assumed to change sign at most once on
// [floor, inf), from negative to positive.
template <class Phi, class Slope>
ThresholdCertificate certified_threshold(Phi&& phi, Slope&& slope, const Integer& floor,
                                         const Integer& cap, ThresholdDomain domain,
                                         unsigned bits = kDefaultPrecisionBits) {
    require(floor >= 1, Errc::invalid_argument, "search floor must be positive");
    const unsigned work = bits + 64;

    // Turning point.
    Real lo(floor, work);
    Real turning = lo;
    if (slope(lo, work) <= 0) {
        Real hi = lo * 2;
        const Real real_cap(cap, work + bit_length(cap));
        while (slope(hi, work) <= 0) {
            if (hi > real_cap)
                fail(Errc::no_solution_below_cap, "monotone regime starts beyond the search cap");
            lo = hi;
            hi = hi * 2;
        }
        const Real tol = Real::pow2(-static_cast<long>(bits), work);
        while (hi - lo > hi * tol) {
            Real mid = hi > lo * 4 ? sqrt(lo * hi) : (lo + hi) / 2;
            if (slope(mid, work) > 0) hi = mid;
            else lo = mid;
        }
        turning = hi;
    }

    // A value that stays unresolved up to the cap (an exact zero, say) is
    // returned as evaluated at the cap; `> 0` then rejects it unless it is
    // positive there, which errs towards a larger threshold.
    constexpr unsigned value_cap = 1u << 12;
    auto settle = [&](auto&& f) {
        try {
            return certify(f, bits, 8, value_cap).value;
        } catch (const Error& e) {
            if (e.code() != Errc::precision_exhausted) throw;
            return f(value_cap);
        }
    };
    auto value_at = [&](const Integer& n) {
        const unsigned extra = bit_length(n);
        return settle([&](unsigned p) { return phi(Real(n, p + extra), p + extra); });
    };
    auto value_at_real = [&](const Real& x) {
        return settle([&](unsigned p) { return phi(x.with_precision(p + 64), p + 64); });
    };
    // Minimum of phi over the admissible points >= n when n precedes the
    // turning point.
    auto min_before_turning = [&](const Integer& n) {
        if (domain == ThresholdDomain::real) return value_at_real(turning);
        const Integer t_lo = turning.floor_integer();
        Real m = value_at(t_lo + 1);
        if (t_lo >= n) m = min(m, value_at(t_lo));
        return m;
    };
    const Integer turn_ceil = turning.ceil_integer();
    auto holds_from = [&](const Integer& n) {
        if (n >= turn_ceil) return value_at(n) > 0;
        return min_before_turning(n) > 0;
    };

    Integer hi = floor > turn_ceil ? floor : turn_ceil;
    Integer lo_fail;
    bool have_fail = false;
    if (holds_from(floor)) {
        hi = floor;
    } else {
        lo_fail = floor;
        have_fail = true;
        while (!holds_from(hi)) {
            lo_fail = hi;
            hi *= 2;
            if (hi > cap) {
                if (holds_from(cap)) {
                    hi = cap;
                    break;
                }
                fail(Errc::no_solution_below_cap, "threshold exceeds cap " + cap.str());
            }
        }
        while (hi - lo_fail > 1) {
            const Integer mid = (lo_fail + hi) / 2;
            if (holds_from(mid)) hi = mid;
            else lo_fail = mid;
        }
    }

    ThresholdCertificate cert;
    cert.value = hi;
    cert.turning_point = turning.with_precision(bits);
    cert.phi_at_value = value_at(hi).with_precision(bits);
    cert.holds_at_value = holds_from(hi);
    cert.value_at_floor = hi == floor;
    cert.beyond_turning_point = Real(hi, work + bit_length(hi)) >= turning;
    if (have_fail) {
        const Integer prev = hi - 1;
        cert.phi_before = (prev >= turn_ceil ? value_at(prev) : min_before_turning(prev)).with_precision(bits);
        cert.fails_below = !holds_from(prev);
    } else {
        cert.phi_before = Real(bits);
        cert.fails_below = true;
    }
    cert.precision_bits = bits;
    return cert;
}

} // namespace geoforge
