#pragma once

// Cyclic words in the free group on a, b (A = a^-1, B = b^-1), evaluated
// in Gamma(2) via a -> [[1,2],[0,1]], b -> [[1,0],[2,1]]. The punctures of
// the thrice punctured sphere are the classes of a, b and aB.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoforge/moebius.hpp"
#include "geoforge/parallel.hpp"

namespace geoforge {

// Alphabet order a < A < b < B; a letter and its inverse differ in bit 0.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

using Letters = std::vector<Letter>;

constexpr Letter inverse(Letter x) { return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u); }

constexpr char letter_char(Letter x) {
    constexpr char names[] = {'a', 'A', 'b', 'B'};
    return names[static_cast<std::uint8_t>(x)];
}

inline Letters parse_letters(std::string_view s) {
    Letters out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case 'a': out.push_back(Letter::a); break;
        case 'A': out.push_back(Letter::A); break;
        case 'b': out.push_back(Letter::b); break;
        case 'B': out.push_back(Letter::B); break;
        default: fail(Errc::invalid_argument, std::string("unexpected letter '") + c + "' (use a, b, A, B)");
        }
    }
    return out;
}

inline std::string to_string(const Letters& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(letter_char(x));
    return s;
}

inline Letters inverse_word(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (Letter& x : out) x = inverse(x);
    return out;
}

inline Letters free_reduce(const Letters& w) {
    Letters out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (!out.empty() && out.back() == inverse(x)) out.pop_back();
        else out.push_back(x);
    }
    return out;
}

// Appends y to x with free cancellation at the junction; x is reduced.
inline void append_reduced(Letters& x, const Letters& y) {
    for (Letter l : y) {
        if (!x.empty() && x.back() == inverse(l)) x.pop_back();
        else x.push_back(l);
    }
}

inline Letters concat_reduce(const Letters& x, const Letters& y) {
    Letters out = x;
    append_reduced(out, y);
    return out;
}

inline Letters cyclic_reduce(const Letters& reduced) {
    std::size_t i = 0, j = reduced.size();
    while (j - i >= 2 && reduced[i] == inverse(reduced[j - 1])) {
        ++i;
        --j;
    }
    return Letters(reduced.begin() + static_cast<std::ptrdiff_t>(i), reduced.begin() + static_cast<std::ptrdiff_t>(j));
}

// Start index of the lexicographically least rotation.
inline std::size_t least_rotation(const Letters& s) {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const Letter x = s[(i + k) % n];
        const Letter y = s[(j + k) % n];
        if (x == y) {
            ++k;
            continue;
        }
        if (x > y) i += k + 1;
        else j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

inline Letters rotate_word(const Letters& s, std::size_t start) {
    Letters out;
    out.reserve(s.size());
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

inline Letters swap_generators(const Letters& w) {
    Letters out = w;
    for (Letter& x : out) x = static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 2u);
    return out;
}

class CyclicWord {
public:
    CyclicWord() = default;

    // Free and cyclic reduction, then the least rotation of the word and of
    // its inverse. `fold_swap` also identifies words related by a <-> b.
    static CyclicWord canonicalize(const Letters& letters, bool fold_swap = false) {
        Letters w = cyclic_reduce(free_reduce(letters));
        require(!w.empty(), Errc::trivial_word, "word reduces to the identity");
        auto least = [](const Letters& s) { return rotate_word(s, least_rotation(s)); };
        Letters best = std::min(least(w), least(inverse_word(w)));
        if (fold_swap) {
            const Letters s = swap_generators(w);
            best = std::min({best, least(s), least(inverse_word(s))});
        }
        CyclicWord out;
        out.letters_ = std::move(best);
        return out;
    }

    static CyclicWord canonicalize(std::string_view s, bool fold_swap = false) {
        return canonicalize(parse_letters(s), fold_swap);
    }

    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    std::string str() const { return to_string(letters_); }

    // Smallest period of the letter sequence as a cyclic word.
    std::size_t period() const {
        const std::size_t n = letters_.size();
        for (std::size_t p = 1; p < n; ++p) {
            if (n % p != 0) continue;
            bool ok = true;
            for (std::size_t i = p; i < n && ok; ++i) ok = letters_[i] == letters_[i - p];
            if (ok) return p;
        }
        return n;
    }

    bool is_primitive() const { return period() == letters_.size(); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    // Length first, then lexicographic.
    friend std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y) {
        if (auto c = x.size() <=> y.size(); c != 0) return c;
        return x.letters_ <=> y.letters_;
    }

private:
    Letters letters_;
};

inline bool is_canonical(const Letters& w) {
    if (w.empty()) return false;
    if (w.front() == inverse(w.back())) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == inverse(w[i - 1])) return false;
    return CyclicWord::canonicalize(w).letters() == w;
}

inline const Matrix2<Integer>& generator_matrix(Letter x) {
    static const Matrix2<Integer> m[4] = {
        {1, 2, 0, 1}, {1, -2, 0, 1}, {1, 0, 2, 1}, {1, 0, -2, 1}};
    return m[static_cast<std::uint8_t>(x)];
}

// SL(2,Z) product; the lift of the free group keeps the trace sign.
inline Matrix2<Integer> evaluate_sl2(const Letters& w) {
    Matrix2<Integer> m;
    for (Letter x : w) m = m * generator_matrix(x);
    return m;
}

inline GroupElement evaluate(const Letters& w) { return GroupElement(evaluate_sl2(w)); }
inline GroupElement evaluate(const CyclicWord& w) { return evaluate(w.letters()); }

enum class WordKind { peripheral, hyperbolic };

inline std::string_view kind_name(WordKind k) { return k == WordKind::peripheral ? "peripheral" : "hyperbolic"; }

struct BackShape {
    std::string cusp;  // "a", "b" or "aB"
    long k = 0;
    std::string str() const { return cusp.size() == 1 ? cusp + "^" + std::to_string(k) : "(" + cusp + ")^" + std::to_string(k); }
};

struct WordClassification {
    WordKind kind = WordKind::peripheral;
    bool primitive = true;
    Integer trace;
    std::optional<Real> length;
    std::optional<BackShape> back_shape;
};

// Canonical words of literal shape y x^k, x one of the cusp words a, b, aB
// and y a single letter that is not a power of x.
inline std::optional<BackShape> back_shape(const CyclicWord& w) {
    static const std::pair<const char*, Letters> cusps[] = {
        {"a", {Letter::a}}, {"b", {Letter::b}}, {"aB", {Letter::a, Letter::B}}};
    const std::size_t n = w.size();
    for (const auto& [name, x] : cusps) {
        if (n < 1 + x.size() || (n - 1) % x.size() != 0) continue;
        const long k = static_cast<long>((n - 1) / x.size());
        for (Letter y : {Letter::a, Letter::A, Letter::b, Letter::B}) {
            if (x.size() == 1 && (y == x[0] || y == inverse(x[0]))) continue;
            Letters candidate{y};
            for (long i = 0; i < k; ++i) candidate.insert(candidate.end(), x.begin(), x.end());
            const Letters reduced = cyclic_reduce(free_reduce(candidate));
            if (reduced.size() != n) continue;
            if (CyclicWord::canonicalize(reduced) == w) return BackShape{name, k};
        }
    }
    return std::nullopt;
}

inline WordClassification classify_word(const CyclicWord& w, unsigned bits = kDefaultPrecisionBits) {
    WordClassification c;
    c.trace = evaluate_sl2(w.letters()).trace();
    const Integer t = boost::multiprecision::abs(c.trace);
    if (t < 2) fail(Errc::invalid_argument, "internal: |trace| < 2 for a nontrivial word " + w.str());
    c.kind = t == 2 ? WordKind::peripheral : WordKind::hyperbolic;
    c.primitive = w.is_primitive();
    if (c.kind == WordKind::hyperbolic) c.length = length_from_trace(c.trace, bits);
    if (c.kind == WordKind::hyperbolic) c.back_shape = back_shape(w);
    return c;
}

enum class WordFilter { all, hyperbolic, hyperbolic_primitive };

inline bool passes(const CyclicWord& w, WordFilter f) {
    if (f == WordFilter::all) return true;
    const Integer t = boost::multiprecision::abs(evaluate_sl2(w.letters()).trace());
    if (t <= 2) return false;
    return f == WordFilter::hyperbolic || w.is_primitive();
}

namespace detail {

// Depth-first extension of a reduced prefix to length n, in alphabet order.
template <class Emit>
void extend_words(Letters& w, std::size_t n, bool b_only, Emit& emit) {
    if (w.size() == n) {
        if (is_canonical(w)) emit(w);
        return;
    }
    for (Letter x : {Letter::a, Letter::A, Letter::b, Letter::B}) {
        if (b_only && (x == Letter::a || x == Letter::A)) continue;
        if (!w.empty() && w.back() == inverse(x)) continue;
        w.push_back(x);
        extend_words(w, n, b_only, emit);
        w.pop_back();
    }
}

// Reduced prefixes of length p, in alphabet order, that can start a
// canonical word: a canonical word begins with a unless it has no a/A.
inline std::vector<Letters> canonical_prefixes(std::size_t p) {
    std::vector<Letters> out;
    Letters w;
    auto rec = [&](auto&& self) -> void {
        if (w.size() == p) {
            out.push_back(w);
            return;
        }
        for (Letter x : {Letter::a, Letter::A, Letter::b, Letter::B}) {
            if (w.empty() && x != Letter::a && x != Letter::b) continue;
            if (!w.empty() && w.back() == inverse(x)) continue;
            if (!w.empty() && w.front() == Letter::b && (x == Letter::a || x == Letter::A)) continue;
            w.push_back(x);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return out;
}

} // namespace detail

// Every canonical word of length 1..max_len passing the filter, ordered by
// length then lexicographically. Output is identical for any thread count.
inline std::vector<CyclicWord> enumerate_words(std::size_t max_len, WordFilter filter = WordFilter::all,
                                               unsigned threads = 1) {
    require(max_len >= 1, Errc::invalid_argument, "max_len must be at least 1");
    std::vector<CyclicWord> out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const auto prefixes = detail::canonical_prefixes(std::min<std::size_t>(n, 4));
        auto parts = parallel_map(prefixes.size(), threads, [&](std::size_t i) {
            std::vector<CyclicWord> found;
            Letters w = prefixes[i];
            auto emit = [&](const Letters& word) {
                CyclicWord c = CyclicWord::canonicalize(word);
                if (passes(c, filter)) found.push_back(std::move(c));
            };
            detail::extend_words(w, n, w.front() == Letter::b, emit);
            return found;
        });
        for (auto& part : parts)
            for (auto& c : part) out.push_back(std::move(c));
    }
    return out;
}

} // namespace geoforge
