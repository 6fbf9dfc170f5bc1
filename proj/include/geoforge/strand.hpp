#pragma once

// Strands: geodesic arcs that enter a cusp neighborhood bounded by a
// horocycle of length h and leave it again.
//
// Normalized picture: the cusp group is z -> z + 1, the horocycle of
// length h is the line y = 1/h, and a strand of length l lifts to the arc
// of the semicircle |z| = cosh(l/2)/h above that line. The arc's
// footprint on the horocycle has half-width s = sinh(l/2)/h.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "geoforge/real.hpp"

namespace geoforge {

// (2/h) sinh(l/2), i.e. the projected length of a strand measured in
// multiples of the horocycle length.
inline Real strand_span(const Real& h, const Real& length, unsigned bits) {
    require(h > 0, Errc::invalid_argument, "horocycle level must be positive");
    require(length >= 0, Errc::invalid_argument, "length must be non-negative");
    const Real hh = h.with_precision(bits);
    return 2 * sinh(length.with_precision(bits) / 2) / hh;
}

// floor((2/h) sinh(l/2)); an exact integer value counts as that integer.
inline std::int64_t winding_number(const Real& h, const Real& length,
                                   unsigned bits = kDefaultPrecisionBits) {
    const Integer w = guarded_floor([&](unsigned p) { return strand_span(h, length, p); }, bits);
    require(w >= 1, Errc::not_a_strand, "arc too short to wind around the cusp at this level");
    return static_cast<std::int64_t>(w);
}

// Number of horocycle lengths covered by the projection of the strand to
// the horocycle, rounded up: ceil((2/h) sinh(l/2)). This is the winding
// number of an explicit strand; its self-intersection number is one less.
inline std::int64_t projected_winding(const Real& h, const Real& length,
                                      unsigned bits = kDefaultPrecisionBits) {
    require(length > 0, Errc::not_a_strand, "strand length must be positive");
    const Integer w = guarded_ceil([&](unsigned p) { return strand_span(h, length, p); }, bits);
    return static_cast<std::int64_t>(w);
}

// Cusp neighborhood bounded by an embedded horocycle of length h; h_max is
// the supremum of embedded horocycle lengths for the cusp.
struct CuspNeighborhood {
    Real h;
    Real h_max;
};

inline CuspNeighborhood make_cusp_neighborhood(const Real& h, const Real& h_max) {
    require(h > 0 && h < h_max, Errc::invalid_levels, "needs 0 < h < h_max");
    return {h, h_max};
}

struct Strand {
    Real h;
    Real length;
    std::int64_t winding = 1;
};

inline Strand make_strand(const Real& h, const Real& length, unsigned bits = kDefaultPrecisionBits) {
    return {h, length, winding_number(h, length, bits)};
}

inline std::int64_t strand_self_intersections(const Strand& s) { return s.winding - 1; }

// 2 asinh(h(w-1)/2) <= l <= 2 asinh(h w/2).
inline std::pair<Real, Real> strand_length_bounds(const Real& h, std::int64_t omega,
                                                  unsigned bits = kDefaultPrecisionBits) {
    require(h > 0, Errc::invalid_argument, "horocycle level must be positive");
    require(omega >= 1, Errc::invalid_argument, "winding must be at least 1");
    const Real hh = h.with_precision(bits);
    return {2 * asinh(hh * (omega - 1) / 2), 2 * asinh(hh * omega / 2)};
}

// Length of the strand at level h tangent to the horocycle of level h0;
// longer strands enter the deeper neighborhood.
inline Real depth_threshold(const Real& h, const Real& h0, unsigned bits = kDefaultPrecisionBits) {
    require(h0 > 0, Errc::invalid_levels, "deeper level must be positive");
    require(h0 < h, Errc::invalid_levels, "deeper level must be below h");
    return 2 * acosh(h.with_precision(bits) / h0.with_precision(bits));
}

// Length gained by a strand of winding omega at level 1 over a strand with
// the same winding at level h.
inline Real level_comparison_gap(const Real& h, std::int64_t omega, unsigned bits = kDefaultPrecisionBits) {
    const Real hh = h.with_precision(bits);
    require(hh > 0 && hh * 10 < 1, Errc::hypothesis_violated, "needs 0 < h < 1/10");
    require(hh * omega >= 1, Errc::hypothesis_violated, "needs omega >= 1/h");
    return 2 * asinh((1 / hh - 1) / 6);
}

// (2n-1) w_1 + ... + 3 w_{n-1} + w_n - n for ascending windings.
inline Integer multi_strand_bound(const std::vector<std::int64_t>& windings) {
    const std::size_t n = windings.size();
    require(n >= 2, Errc::too_few_strands, "need at least two strands");
    require(std::is_sorted(windings.begin(), windings.end()), Errc::unsorted,
            "windings must be ascending");
    Integer total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        require(windings[i] >= 1, Errc::invalid_argument, "windings must be at least 1");
        total += Integer(2 * (n - 1 - i) + 1) * windings[i];
    }
    return total - Integer(n);
}

} // namespace geoforge
