#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "geoforge/geoforge.hpp"

namespace oracle {

using geoforge::Integer;
using geoforge::Letter;
using geoforge::Letters;
using geoforge::Real;

inline Letters random_reduced_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    const std::size_t n = len(rng);
    Letters w;
    while (w.size() < n) {
        const auto x = static_cast<Letter>(letter(rng));
        if (!w.empty() && w.back() == geoforge::inverse(x)) continue;
        w.push_back(x);
    }
    return w;
}

// Cyclically reduced, not a proper power, hyperbolic.
inline geoforge::CyclicWord random_primitive_hyperbolic(std::mt19937_64& rng, std::size_t min_len,
                                                        std::size_t max_len) {
    for (;;) {
        Letters w = random_reduced_word(rng, min_len, max_len);
        if (w.front() == geoforge::inverse(w.back())) continue;
        const auto c = geoforge::CyclicWord::canonicalize(w);
        if (!c.is_primitive()) continue;
        if (boost::multiprecision::abs(geoforge::evaluate_sl2(c.letters()).trace()) <= 2) continue;
        return c;
    }
}

// Fixed points computed numerically from the matrix, infinity when c = 0.
struct NumericAxis {
    bool has_infinity = false;
    Real lo, hi;   // finite endpoints, lo < hi; only hi used with infinity
};

inline NumericAxis numeric_axis(const geoforge::GroupElement& g, unsigned bits) {
    const Real a(g.a(), bits), b(g.b(), bits), c(g.c(), bits), d(g.d(), bits);
    NumericAxis x;
    if (g.c() == 0) {
        // a z + b = d z  ->  z = b/(d - a)
        x.has_infinity = true;
        x.hi = b / (d - a);
        return x;
    }
    const Real disc = sqrt((a + d) * (a + d) - 4);
    const Real r1 = (a - d - disc) / (2 * c), r2 = (a - d + disc) / (2 * c);
    x.lo = min(r1, r2);
    x.hi = max(r1, r2);
    return x;
}

// Linking of two boundary pairs by direct comparison of numeric endpoints.
inline bool numeric_linked(const NumericAxis& x, const NumericAxis& y) {
    auto inside = [](const NumericAxis& s, const Real& t) { return s.lo < t && t < s.hi; };
    if (x.has_infinity && y.has_infinity) return false;
    if (x.has_infinity) return numeric_linked(y, x);
    if (y.has_infinity) return inside(x, y.hi);  // infinity lies outside every finite interval
    return inside(x, y.lo) != inside(x, y.hi);
}

// Translates n >= 1 of the lifted strand whose starting footpoint -r + n
// lies within the footprint, i.e. n <= 2 sqrt(r^2 - 1/h^2) with
// r = cosh(l/2)/h.
inline std::int64_t translate_count(const Real& h, const Real& length, unsigned bits) {
    const Real hh = h.with_precision(bits);
    const Real r = cosh(length.with_precision(bits) / 2) / hh;
    const Real reach = 2 * sqrt(r * r - 1 / (hh * hh));
    std::int64_t n = 0;
    while (Real(n + 1, bits) <= reach) ++n;
    return n;
}

// Explicit strand in the normalized cusp picture: footprint centre x on the
// horocycle y = 1/h and half-width s = sinh(l/2)/h.
struct ExplicitStrand {
    Real centre;
    Real half_width;
};

// Crossings of two arcs above the horocycle: translates n with interleaving
// footprints, |x1 - x2 - n| strictly between |s1 - s2| and s1 + s2.
inline std::int64_t pair_crossings(const ExplicitStrand& u, const ExplicitStrand& v) {
    const Real delta = u.centre - v.centre;
    const Real lo = abs(u.half_width - v.half_width);
    const Real hi = u.half_width + v.half_width;
    const auto n_min = (delta - hi).floor_integer() - 1;
    const auto n_max = (delta + hi).ceil_integer() + 1;
    std::int64_t count = 0;
    for (Integer n = n_min; n <= n_max; ++n) {
        const Real d = abs(delta - Real(n, delta.precision()));
        if (d > lo && d < hi) ++count;
    }
    return count;
}

// Self-crossings: translates n >= 1 with n < 2s.
inline std::int64_t self_crossings(const ExplicitStrand& u) {
    std::int64_t count = 0;
    while (Real(count + 1, u.half_width.precision()) < 2 * u.half_width) ++count;
    return count;
}

// Pants configuration in the half-plane: boundary geodesics over
// [-e^(a/2), -e^(-a/2)] and [e^(-b/2), e^(b/2)] (a cusp is the degenerate
// interval at -1 or 1), cusp at infinity with horocycle at height T/h where
// T is the translation produced by reflecting in the vertical lines through
// the two centres. Reflection in the unit circle fixes both boundary
// geodesics and carries the cusp at infinity to 0; the orthogonal distance
// is the distance between the top of the horocycle and its image.
inline Real perpendicular_foot_distance(const Real& alpha, const Real& beta, const Real& h, unsigned bits) {
    const Real xa = -exp(-alpha.with_precision(bits) / 2), ya = -exp(alpha.with_precision(bits) / 2);
    const Real xb = exp(-beta.with_precision(bits) / 2), yb = exp(beta.with_precision(bits) / 2);
    const Real ca = (xa + ya) / 2, cb = (xb + yb) / 2;
    // reflect in x = ca then in x = cb: x -> 2cb - (2ca - x) = x + 2(cb - ca)
    const Real probe(0L, bits);
    const Real translation = (2 * cb - (2 * ca - probe)) - probe;
    const Real height = translation / h.with_precision(bits);
    // Image of the horocycle y = H under z -> 1/conj(z) is a horocycle at 0;
    // its highest point is the foot of the common perpendicular (the
    // imaginary axis). Locate it by golden-section search on the image.
    auto image_y = [&](const Real& t) { return height / (t * t + height * height); };
    Real lo = -10 * height, hi = 10 * height;
    const Real phi = (sqrt(Real(5L, bits)) - 1) / 2;
    for (int it = 0; it < static_cast<int>(bits) * 2; ++it) {
        const Real m1 = hi - phi * (hi - lo), m2 = lo + phi * (hi - lo);
        if (image_y(m1) < image_y(m2)) lo = m1;
        else hi = m2;
    }
    const Real t = (lo + hi) / 2;
    const Real r2 = t * t + height * height;
    const geoforge::HalfPlanePoint foot{t / r2, height / r2};
    const geoforge::HalfPlanePoint top{t / r2, height};
    return geoforge::hyperbolic_distance(top, foot);
}

// Least integer k >= start with phi(m) > 0 for every integer m in
// [k, stop], by scanning downward from stop.
template <class Phi>
std::int64_t scan_threshold(Phi&& phi, std::int64_t start, std::int64_t stop) {
    std::int64_t k = stop;
    while (k - 1 >= start && phi(k - 1) > 0) --k;
    return k;
}

} // namespace oracle
