#pragma once

// Numeric self-intersection count by unfolding the axis of w into the
// ideal quadrilateral F with vertices infinity, -1, 0, 1. Side pairings:
// a maps Re z = -1 to Re z = 1, b maps |z + 1/2| = 1/2 to |z - 1/2| = 1/2.
// One period of the closed geodesic is |w| arcs inside F; crossings are
// counted among those arcs, plus coincident side transitions (crossings
// that sit exactly on a side of F).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "geoforge/word.hpp"

namespace geoforge {

struct DomainSegment {
    Real p, q;               // endpoints of the full geodesic, travelling p -> q
    Real entry_x, entry_y;
    Real exit_x, exit_y;
    Letter exit_side;        // side letter crossed when leaving F
};

struct DomainTrace {
    std::vector<DomainSegment> segments;
    Letters cutting_sequence;
    unsigned precision_bits = 0;
};

namespace detail {

// Three-way comparison with a tolerance band: values within `zero` of 0 are
// treated as 0, values beyond `clear` have a definite sign, anything in
// between is too close to call.
struct Band {
    Real zero;
    Real clear;

    int sign(const Real& v) const {
        const Real a = abs(v);
        if (a < zero) return 0;
        if (a > clear) return v.sign();
        fail(Errc::tolerance_breach, "value " + v.str(12) + " inside the tolerance band");
    }
};

inline Band make_band(unsigned bits) {
    return {Real::pow2(-static_cast<long>(3 * bits / 4), bits), Real::pow2(-static_cast<long>(bits / 2), bits)};
}

inline Real act(const Matrix2<Integer>& m, const Real& x) {
    const unsigned p = x.precision();
    return (Real(m.a, p) * x + Real(m.b, p)) / (Real(m.c, p) * x + Real(m.d, p));
}

struct Hit {
    Letter side;
    Real x, y;
};

inline std::vector<Hit> side_hits(const Real& p, const Real& q, const Band& band) {
    const unsigned bits = p.precision();
    const Real c = (p + q) / 2;
    const Real R = abs(q - p) / 2;
    std::vector<Hit> hits;
    for (auto [side, x0] : {std::pair{Letter::a, 1L}, std::pair{Letter::A, -1L}}) {
        const Real dx = Real(x0, bits) - c;
        if (dx * dx < R * R) hits.push_back({side, Real(x0, bits), sqrt(R * R - dx * dx)});
    }
    const Real half(0.5, bits);
    for (auto [side, c2] : {std::pair{Letter::b, half}, std::pair{Letter::B, -half}}) {
        const Real d = abs(c - c2);
        if (d < R + half && d > abs(R - half)) {
            const Real along = (d * d + R * R - half * half) / (2 * d);
            hits.push_back({side, c + (c2 - c) / d * along, sqrt(R * R - along * along)});
        }
    }
    std::vector<Hit> inside;
    const Real one(1L, bits);
    for (auto& h : hits) {
        const Real l = h.x - half, r = h.x + half;
        const bool ok = abs(h.x) <= one + band.clear && l * l + h.y * h.y >= half * half - band.clear &&
                        r * r + h.y * h.y >= half * half - band.clear;
        if (ok) inside.push_back(std::move(h));
    }
    return inside;
}

// Exit point moved to its partner side (a-side by z - 2, b-side by b^-1).
inline std::pair<Real, Real> partner_point(Letter side, const Real& x, const Real& y) {
    if (side == Letter::a) return {x - 2, y};
    if (side == Letter::b) {
        const Real r2 = x * x + y * y;
        const Real den = (1 - 2 * x) * (1 - 2 * x) + 4 * y * y;
        return {(x - 2 * r2) / den, y / den};
    }
    return {x, y};
}

} // namespace detail

inline DomainTrace trace_axis(const CyclicWord& w, unsigned bits) {
    const auto band = detail::make_band(bits);
    const Matrix2<Integer> m = evaluate_sl2(w.letters());
    require(boost::multiprecision::abs(m.trace()) > 2, Errc::not_hyperbolic, "word " + w.str() + " is peripheral");
    const Integer A = m.c, B = m.d - m.a, C = -m.b;
    const Integer disc_i = B * B - 4 * A * C;
    const unsigned p = bits + bit_length(disc_i);
    const Real disc = sqrt(Real(disc_i, p));
    Real r1 = ((Real(-B, p) + disc) / (2 * Real(A, p))).with_precision(bits);
    Real r2 = ((Real(-B, p) - disc) / (2 * Real(A, p))).with_precision(bits);
    // The attracting fixed point has |cz + d| > 1.
    if (abs(Real(m.c, bits) * r1 + Real(m.d, bits)) > 1) std::swap(r1, r2);
    Real from = r1, to = r2;

    DomainTrace t;
    t.precision_bits = bits;
    for (std::size_t step = 0; step < w.size(); ++step) {
        auto hits = detail::side_hits(from, to, band);
        if (hits.size() != 2) fail(Errc::tolerance_breach, "geodesic does not cross F in exactly two sides");
        const bool forward = to > from;
        if ((hits[0].x > hits[1].x) == forward) std::swap(hits[0], hits[1]);
        DomainSegment s{from, to, hits[0].x, hits[0].y, hits[1].x, hits[1].y, hits[1].side};
        t.cutting_sequence.push_back(s.exit_side);
        const auto& g = generator_matrix(inverse(s.exit_side));
        from = detail::act(g, from);
        to = detail::act(g, to);
        t.segments.push_back(std::move(s));
    }
    return t;
}

inline long crossing_oracle(const CyclicWord& w, unsigned bits) {
    require(w.is_primitive(), Errc::not_primitive, "word " + w.str() + " is a proper power");
    const auto band = detail::make_band(bits);
    const DomainTrace t = trace_axis(w, bits);
    const auto& segs = t.segments;
    const std::size_t n = segs.size();
    const Real half(0.5, bits);

    auto on_side = [&](const Real& x, const Real& y) {
        const Real l = x - half, r = x + half;
        return band.sign(abs(x) - 1) == 0 || band.sign(l * l + y * y - half * half) == 0 ||
               band.sign(r * r + y * y - half * half) == 0;
    };
    auto strictly_within = [&](const DomainSegment& s, const Real& x) {
        const Real& lo = s.entry_x < s.exit_x ? s.entry_x : s.exit_x;
        const Real& hi = s.entry_x < s.exit_x ? s.exit_x : s.entry_x;
        return band.sign(x - lo) > 0 && band.sign(hi - x) > 0;
    };

    long count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& s = segs[i];
            const auto& u = segs[j];
            const Real a1 = min(s.p, s.q), b1 = max(s.p, s.q);
            const Real a2 = min(u.p, u.q), b2 = max(u.p, u.q);
            const bool in1 = band.sign(a2 - a1) > 0 && band.sign(b1 - a2) > 0;
            const bool in2 = band.sign(b2 - a1) > 0 && band.sign(b1 - b2) > 0;
            if (in1 == in2) continue;
            const Real c1 = (a1 + b1) / 2, R1 = (b1 - a1) / 2;
            const Real c2 = (a2 + b2) / 2, R2 = (b2 - a2) / 2;
            const Real x = (R1 * R1 - R2 * R2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
            const Real y = sqrt(R1 * R1 - (x - c1) * (x - c1));
            if (on_side(x, y)) continue;
            if (strictly_within(s, x) && strictly_within(u, x)) ++count;
        }
    }
    std::vector<std::pair<Real, Real>> points;
    for (const auto& s : segs) points.push_back(detail::partner_point(s.exit_side, s.exit_x, s.exit_y));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (band.sign(points[i].first - points[j].first) == 0 && band.sign(points[i].second - points[j].second) == 0)
                ++count;
    return count;
}

// Retries at doubled precision while the tolerance band is hit.
inline long crossing_oracle_adaptive(const CyclicWord& w, unsigned bits = kDefaultPrecisionBits,
                                     unsigned cap = 2048) {
    for (;;) {
        try {
            return crossing_oracle(w, bits);
        } catch (const Error& e) {
            if (e.code() != Errc::tolerance_breach || 2 * bits > cap) throw;
            bits *= 2;
        }
    }
}

} // namespace geoforge
