#pragma once

// Extended-precision reals on top of MPFR. Every value carries its own
// precision in bits; binary operations round to the larger of the two.

#include <mpfr.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include "geoforge/error.hpp"

namespace geoforge {

using Integer = boost::multiprecision::cpp_int;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 32;
inline constexpr unsigned kMaxPrecisionBits = 1u << 16;

// GEOFORGE_PRECISION_BITS overrides the default working precision.
inline unsigned default_precision_bits() {
    if (const char* env = std::getenv("GEOFORGE_PRECISION_BITS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= kMinPrecisionBits && v <= kMaxPrecisionBits)
            return static_cast<unsigned>(v);
    }
    return kDefaultPrecisionBits;
}

class Real {
public:
    explicit Real(unsigned bits = kDefaultPrecisionBits) {
        mpfr_init2(v_, clamp(bits));
        mpfr_set_zero(v_, 1);
    }

    Real(long value, unsigned bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(int value, unsigned bits) : Real(static_cast<long>(value), bits) {}
    Real(double value, unsigned bits) : Real(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }

    Real(const std::string& decimal, unsigned bits) : Real(bits) {
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            fail(Errc::invalid_argument, "not a decimal number: '" + decimal + "'");
    }

    Real(const Integer& value, unsigned bits) : Real(bits) {
        const std::string s = value.str();
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    Real(const Real& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    Real(Real&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }

    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    Real with_precision(unsigned bits) const {
        Real r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Rounds toward -infinity.
    Integer floor_integer() const {
        require(is_finite(), Errc::invalid_argument, "floor of non-finite value");
        mpz_t z;
        mpz_init(z);
        mpfr_get_z(z, v_, MPFR_RNDD);
        char* s = mpz_get_str(nullptr, 10, z);
        Integer out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, std::char_traits<char>::length(s) + 1);
        mpz_clear(z);
        return out;
    }

    Integer ceil_integer() const {
        Integer f = floor_integer();
        if (!is_integer()) ++f;
        return f;
    }

    // Significant digits default to what the precision supports.
    std::string str(int digits = 0) const {
        if (digits <= 0) digits = decimal_digits(precision());
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    static int decimal_digits(unsigned bits) {
        return static_cast<int>(std::floor(bits * 0.30102999566398120)) ;
    }

    Real& operator+=(const Real& o) { return assign_binary(mpfr_add, o); }
    Real& operator-=(const Real& o) { return assign_binary(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return assign_binary(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return assign_binary(mpfr_div, o); }

    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& x, const Real& y) { return binary(mpfr_add, x, y); }
    friend Real operator-(const Real& x, const Real& y) { return binary(mpfr_sub, x, y); }
    friend Real operator*(const Real& x, const Real& y) { return binary(mpfr_mul, x, y); }
    friend Real operator/(const Real& x, const Real& y) { return binary(mpfr_div, x, y); }

    friend Real operator+(const Real& x, long y) {
        Real r(x.precision());
        mpfr_add_si(r.v_, x.v_, y, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& x, long y) {
        Real r(x.precision());
        mpfr_sub_si(r.v_, x.v_, y, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long x, const Real& y) {
        Real r(y.precision());
        mpfr_si_sub(r.v_, x, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& x, long y) {
        Real r(x.precision());
        mpfr_mul_si(r.v_, x.v_, y, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long x, const Real& y) { return y * x; }
    friend Real operator/(const Real& x, long y) {
        Real r(x.precision());
        mpfr_div_si(r.v_, x.v_, y, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long x, const Real& y) {
        Real r(y.precision());
        mpfr_si_div(r.v_, x, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long x, const Real& y) { return y + x; }

    friend int compare(const Real& x, const Real& y) { return mpfr_cmp(x.v_, y.v_); }
    friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }
    friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
    friend bool operator>=(const Real& x, const Real& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }

    friend bool operator<(const Real& x, long y) { return mpfr_cmp_si(x.v_, y) < 0; }
    friend bool operator>(const Real& x, long y) { return mpfr_cmp_si(x.v_, y) > 0; }
    friend bool operator<=(const Real& x, long y) { return mpfr_cmp_si(x.v_, y) <= 0; }
    friend bool operator>=(const Real& x, long y) { return mpfr_cmp_si(x.v_, y) >= 0; }
    friend bool operator==(const Real& x, long y) { return mpfr_cmp_si(x.v_, y) == 0; }

    friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

#define GEOFORGE_REAL_UNARY(name, fn)                 \
    friend Real name(const Real& x) {                 \
        Real r(x.precision());                        \
        fn(r.v_, x.v_, MPFR_RNDN);                    \
        return r;                                     \
    }
    GEOFORGE_REAL_UNARY(sqrt, mpfr_sqrt)
    GEOFORGE_REAL_UNARY(log, mpfr_log)
    GEOFORGE_REAL_UNARY(log2, mpfr_log2)
    GEOFORGE_REAL_UNARY(exp, mpfr_exp)
    GEOFORGE_REAL_UNARY(sinh, mpfr_sinh)
    GEOFORGE_REAL_UNARY(cosh, mpfr_cosh)
    GEOFORGE_REAL_UNARY(tanh, mpfr_tanh)
    GEOFORGE_REAL_UNARY(coth, mpfr_coth)
    GEOFORGE_REAL_UNARY(asinh, mpfr_asinh)
    GEOFORGE_REAL_UNARY(acosh, mpfr_acosh)
    GEOFORGE_REAL_UNARY(abs, mpfr_abs)
    GEOFORGE_REAL_UNARY(sqr, mpfr_sqr)
#undef GEOFORGE_REAL_UNARY

    friend Real floor(const Real& x) {
        Real r(x.precision());
        mpfr_floor(r.v_, x.v_);
        return r;
    }
    friend Real ceil(const Real& x) {
        Real r(x.precision());
        mpfr_ceil(r.v_, x.v_);
        return r;
    }
    friend Real pow(const Real& x, const Real& y) { return binary(mpfr_pow, x, y); }
    friend Real root(const Real& x, unsigned long k) {
        Real r(x.precision());
        mpfr_rootn_ui(r.v_, x.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real min(const Real& x, const Real& y) { return x <= y ? x : y; }
    friend Real max(const Real& x, const Real& y) { return x >= y ? x : y; }

    // |x - nearest integer|
    friend Real distance_to_integer(const Real& x) {
        Real r(x.precision());
        mpfr_rint(r.v_, x.v_, MPFR_RNDN);
        return abs(x - r);
    }

    // 2^e at the given precision.
    static Real pow2(long e, unsigned bits) {
        Real r(1L, bits);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    static Real pi(unsigned bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;

    static mpfr_prec_t clamp(unsigned bits) {
        return static_cast<mpfr_prec_t>(std::clamp(bits, kMinPrecisionBits, kMaxPrecisionBits));
    }

    using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    static Real binary(BinaryFn fn, const Real& x, const Real& y) {
        Real r(std::max(x.precision(), y.precision()));
        fn(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    Real& assign_binary(BinaryFn fn, const Real& o) {
        *this = binary(fn, *this, o);
        return *this;
    }
};

// Number of bits needed for |n|.
inline unsigned bit_length(const Integer& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

struct CertifiedValue {
    Real value;
    unsigned precision_bits = 0;
};

// Evaluates f(bits) and f(2 bits) and accepts once they agree to `guard`
// bits relative to the result; doubles the precision otherwise.
template <class F>
CertifiedValue certify(F&& f, unsigned bits, unsigned guard = 20,
                       unsigned cap = 4096) {
    bits = std::max(bits, kMinPrecisionBits);
    for (;;) {
        const unsigned hi = 2 * bits;
        if (hi > cap)
            fail(Errc::precision_exhausted,
                 "could not certify value below " + std::to_string(cap) + " bits");
        Real lo_v = f(bits);
        Real hi_v = f(hi);
        if (!hi_v.is_zero()) {
            const Real diff = abs(hi_v - lo_v);
            if (diff.is_zero() || diff * Real::pow2(guard, hi) <= abs(hi_v)) return {hi_v, hi};
        }
        bits = hi;
    }
}

} // namespace geoforge

namespace geoforge {

// Floor of a value known only to `bits` bits. Near an integer the value is
// recomputed at twice the precision; if it is still within the input
// resolution of an integer n, the result is n.
template <class F>
Integer guarded_floor(F&& f, unsigned bits) {
    const Real v = f(bits);
    require(v.is_finite(), Errc::invalid_argument, "non-finite value");
    const Real scale = max(Real(1L, bits), abs(v));
    const Real band = Real::pow2(-static_cast<long>(bits) + 10, bits) * scale;
    if (distance_to_integer(v) >= band) return v.floor_integer();
    const Real w = f(2 * bits);
    if (distance_to_integer(w) < band) {
        Real nearest(w.precision());
        mpfr_rint(nearest.get(), w.get(), MPFR_RNDN);
        return nearest.floor_integer();
    }
    return w.floor_integer();
}

template <class F>
Integer guarded_ceil(F&& f, unsigned bits) {
    return -guarded_floor([&](unsigned p) { return -f(p); }, bits);
}

} // namespace geoforge
