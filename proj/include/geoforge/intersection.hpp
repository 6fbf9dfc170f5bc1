#pragma once

// Self-intersection number of the closed geodesic of a primitive
// hyperbolic word w in Gamma(2).
//
// Intersection points correspond to unordered pairs {D, D^-1} of double
// cosets D = <w> g <w>, g not in <w>, for which the axis of w and its image
// under g cross. The axis of a cyclically reduced w runs through the tiles
// w^p u F, u a prefix of w, so every crossing double coset has a
// representative u_i u_j^-1 with i, j < |w|; these have length at most
// 2|w| - 2. Candidates are filtered by word length R and the count is
// reported at R, R+1, R+2.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "geoforge/word.hpp"

namespace geoforge {

using DoubleCosetKey = Letters;

namespace detail {

inline bool shortlex_less(const Letters& x, const Letters& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

inline Letters word_power(const Letters& w, long p) {
    const Letters base = p >= 0 ? w : inverse_word(w);
    Letters out;
    out.reserve(base.size() * static_cast<std::size_t>(p >= 0 ? p : -p));
    for (long i = 0; i < (p >= 0 ? p : -p); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

} // namespace detail

// Search window |p|, |q| <= ceil(R/|w|) + 1.
inline int key_window(int radius, std::size_t word_length) {
    const int n = static_cast<int>(word_length);
    return (radius + n - 1) / n + 1;
}

// Shortlex-least reduced word among w^p g w^q, |p|, |q| <= window.
inline DoubleCosetKey double_coset_key(const Letters& g, const CyclicWord& w, int window) {
    require(!g.empty(), Errc::invalid_argument, "g must be nonempty");
    require(window >= 0, Errc::invalid_argument, "window must be non-negative");
    const Letters& wl = w.letters();
    const Letters g_red = free_reduce(g);
    std::vector<Letters> powers;
    for (long q = -window; q <= window; ++q) powers.push_back(detail::word_power(wl, q));
    std::optional<Letters> best;
    for (long p = -window; p <= window; ++p) {
        const Letters left = concat_reduce(powers[static_cast<std::size_t>(p + window)], g_red);
        for (const Letters& right : powers) {
            Letters cand = concat_reduce(left, right);
            if (cand.empty()) fail(Errc::in_cyclic_subgroup, "g lies in the cyclic subgroup of w");
            if (!best || detail::shortlex_less(cand, *best)) best = std::move(cand);
        }
    }
    return *best;
}

inline DoubleCosetKey double_coset_key(const Letters& g, const CyclicWord& w) {
    return double_coset_key(g, w, key_window(static_cast<int>(free_reduce(g).size()), w.size()));
}

struct IntersectionConfig {
    std::optional<int> start_radius;  // default 2|w| - 2, at least 1
    std::optional<int> max_radius;    // default start + 8
};

struct IntersectionResult {
    long count = 0;
    int radius_used = 0;
    bool certified = false;           // equal counts at radius_used, +1, +2
    bool complete = false;            // radius_used >= 2|w| - 2
    int window = 0;
    std::vector<long> counts;         // per radius from start_radius
};

inline int completeness_radius(const CyclicWord& w) { return std::max(1, 2 * static_cast<int>(w.size()) - 2); }

struct CrossingCoset {
    std::size_t length;    // length of the representative u_i u_j^-1
    DoubleCosetKey key;    // min over the pair {D, D^-1}
};

// Crossing double-coset pairs reachable from tile-pair representatives.
inline std::vector<CrossingCoset> crossing_cosets(const CyclicWord& w, int window) {
    const Letters& wl = w.letters();
    const std::size_t n = wl.size();
    const Axis ax = axis_of(evaluate(wl));
    std::set<Letters> seen;
    std::vector<CrossingCoset> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Letters ui(wl.begin(), wl.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Letters uj(wl.begin(), wl.begin() + static_cast<std::ptrdiff_t>(j));
            Letters g = concat_reduce(ui, inverse_word(uj));
            if (g.empty() || !seen.insert(g).second) continue;
            const Axis moved = pushforward(evaluate(g), ax);
            if (moved == ax) continue;
            if (!axes_cross(ax, moved)) continue;
            DoubleCosetKey k = std::min(double_coset_key(g, w, window),
                                        double_coset_key(inverse_word(g), w, window), detail::shortlex_less);
            out.push_back({g.size(), std::move(k)});
        }
    }
    return out;
}

inline IntersectionResult self_intersection(const CyclicWord& w, const IntersectionConfig& config = {}) {
    require(!w.letters().empty(), Errc::trivial_word, "empty word");
    const Integer t = boost::multiprecision::abs(evaluate_sl2(w.letters()).trace());
    require(t > 2, Errc::not_hyperbolic, "word " + w.str() + " is peripheral");
    require(w.is_primitive(), Errc::not_primitive, "word " + w.str() + " is a proper power");

    const int start = std::max(1, config.start_radius.value_or(completeness_radius(w)));
    const int max_r = std::max(start + 2, config.max_radius.value_or(start + 8));

    IntersectionResult r;
    r.window = key_window(max_r, w.size());
    const auto cosets = crossing_cosets(w, r.window);

    auto count_at = [&](int radius) {
        std::set<Letters> keys;
        for (const auto& c : cosets)
            if (static_cast<int>(c.length) <= radius) keys.insert(c.key);
        return static_cast<long>(keys.size());
    };

    for (int radius = start; radius <= max_r; ++radius) {
        r.counts.push_back(count_at(radius));
        const std::size_t m = r.counts.size();
        if (m >= 3 && r.counts[m - 1] == r.counts[m - 2] && r.counts[m - 2] == r.counts[m - 3]) {
            r.count = r.counts[m - 1];
            r.radius_used = radius - 2;
            r.certified = true;
            r.complete = r.radius_used >= completeness_radius(w);
            return r;
        }
    }
    r.count = r.counts.back();
    r.radius_used = max_r;
    r.complete = max_r >= completeness_radius(w);
    return r;
}

// Reference count over the whole Cayley ball of radius R (all reduced g with
// |g| <= R). Exponential in R; intended for short words and small radii.
inline long self_intersection_ball(const CyclicWord& w, int radius) {
    require(radius >= 1, Errc::invalid_argument, "radius must be positive");
    const Axis ax = axis_of(evaluate(w.letters()));
    const int window = key_window(radius, w.size()) + 1;
    std::set<Letters> keys;
    Letters g;
    Matrix2<Integer> m;
    auto rec = [&](auto&& self, const Matrix2<Integer>& mg) -> void {
        if (!g.empty()) {
            const Axis moved = pushforward(GroupElement(mg), ax);
            if (moved != ax && axes_cross(ax, moved))
                keys.insert(std::min(double_coset_key(g, w, window), double_coset_key(inverse_word(g), w, window),
                                     detail::shortlex_less));
        }
        if (static_cast<int>(g.size()) == radius) return;
        for (Letter x : {Letter::a, Letter::A, Letter::b, Letter::B}) {
            if (!g.empty() && g.back() == inverse(x)) continue;
            g.push_back(x);
            self(self, mg * generator_matrix(x));
            g.pop_back();
        }
    };
    rec(rec, m);
    return static_cast<long>(keys.size());
}

} // namespace geoforge
