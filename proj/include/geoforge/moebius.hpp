#pragma once

// Exact arithmetic on PSL(2,Z) elements, their axes as integer binary
// quadratic forms, and a little upper half-plane geometry.

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "geoforge/real.hpp"

namespace geoforge {

// Raw SL(2) product; keeps the sign of the trace.
template <class Int>
struct Matrix2 {
    Int a{1}, b{0}, c{0}, d{1};

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    // Inverse for determinant one.
    Matrix2 inverse() const { return {d, -b, -c, a}; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

enum class MoebiusKind { identity, elliptic, parabolic, hyperbolic };

inline std::string_view kind_name(MoebiusKind k) {
    switch (k) {
    case MoebiusKind::identity: return "identity";
    case MoebiusKind::elliptic: return "elliptic";
    case MoebiusKind::parabolic: return "parabolic";
    case MoebiusKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Element of PSL(2,Z): determinant one, sign fixed so that the first
// nonzero entry of (a, b, c, d) is positive.
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(Integer a, Integer b, Integer c, Integer d)
        : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        require(m_.det() == 1, Errc::invalid_argument, "determinant must be 1");
        normalize();
    }

    explicit GroupElement(const Matrix2<Integer>& m) : GroupElement(m.a, m.b, m.c, m.d) {}

    static GroupElement identity() { return {}; }

    const Integer& a() const { return m_.a; }
    const Integer& b() const { return m_.b; }
    const Integer& c() const { return m_.c; }
    const Integer& d() const { return m_.d; }
    const Matrix2<Integer>& matrix() const { return m_; }

    // Trace of the normalized representative; only |tr| is meaningful in PSL.
    Integer trace() const { return m_.trace(); }
    Integer abs_trace() const { return boost::multiprecision::abs(m_.trace()); }

    GroupElement inverse() const { return GroupElement(m_.inverse()); }

    MoebiusKind kind() const {
        const Integer t = abs_trace();
        if (t > 2) return MoebiusKind::hyperbolic;
        if (t == 2) return m_.b == 0 && m_.c == 0 ? MoebiusKind::identity : MoebiusKind::parabolic;
        return MoebiusKind::elliptic;
    }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        return GroupElement(x.m_ * y.m_);
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
        return os << "[[" << g.a() << ", " << g.b() << "], [" << g.c() << ", " << g.d() << "]]";
    }

private:
    Matrix2<Integer> m_;

    void normalize() {
        const Integer& lead = m_.a != 0 ? m_.a : m_.b != 0 ? m_.b : m_.c;
        if (lead < 0) m_ = {-m_.a, -m_.b, -m_.c, -m_.d};
    }
};

inline MoebiusKind classify(const GroupElement& g) { return g.kind(); }

// 2 acosh(|tr|/2).
inline Real translation_length(const GroupElement& g, unsigned bits) {
    require(g.kind() == MoebiusKind::hyperbolic, Errc::not_hyperbolic,
            "translation length needs a hyperbolic element");
    return 2 * acosh(Real(g.abs_trace(), bits + bit_length(g.abs_trace())) / 2).with_precision(bits);
}

// Translation length from a trace; shared by the word engine.
inline Real length_from_trace(const Integer& trace, unsigned bits) {
    const Integer t = boost::multiprecision::abs(trace);
    require(t > 2, Errc::not_hyperbolic, "|trace| must exceed 2");
    return (2 * acosh(Real(t, bits + bit_length(t)) / 2)).with_precision(bits);
}

// Axis of a hyperbolic element as the primitive integer form
// A z^2 + B z + C whose roots are the fixed points, first nonzero
// coefficient positive.
class Axis {
public:
    Axis(Integer A, Integer B, Integer C) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
        require(discriminant() > 0, Errc::invalid_argument, "axis form must have positive discriminant");
        normalize();
    }

    const Integer& A() const { return A_; }
    const Integer& B() const { return B_; }
    const Integer& C() const { return C_; }
    Integer discriminant() const { return B_ * B_ - 4 * A_ * C_; }

    friend bool operator==(const Axis&, const Axis&) = default;
    friend bool operator<(const Axis& x, const Axis& y) {
        if (x.A_ != y.A_) return x.A_ < y.A_;
        if (x.B_ != y.B_) return x.B_ < y.B_;
        return x.C_ < y.C_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Axis& x) {
        return os << "(" << x.A_ << ", " << x.B_ << ", " << x.C_ << ")";
    }

private:
    Integer A_, B_, C_;

    void normalize() {
        using boost::multiprecision::gcd;
        Integer g = gcd(gcd(A_, B_), C_);
        if (g < 0) g = -g;
        A_ /= g;
        B_ /= g;
        C_ /= g;
        const Integer& lead = A_ != 0 ? A_ : B_;
        if (lead < 0) {
            A_ = -A_;
            B_ = -B_;
            C_ = -C_;
        }
    }
};

// Fixed points of z -> (az+b)/(cz+d) solve c z^2 + (d-a) z - b = 0.
inline Axis axis_of(const GroupElement& g) {
    require(g.kind() == MoebiusKind::hyperbolic, Errc::not_hyperbolic, "axis needs a hyperbolic element");
    return Axis(g.c(), g.d() - g.a(), -g.b());
}

// Axis of N g N^{-1} from the axis of g: the form Q(N^{-1} z) up to scale.
inline Axis pushforward(const GroupElement& n, const Axis& x) {
    const Integer &a = n.a(), &b = n.b(), &c = n.c(), &d = n.d();
    const Integer &A = x.A(), &B = x.B(), &C = x.C();
    return Axis(A * d * d - B * d * c + C * c * c,
                -2 * A * d * b + B * (d * a + b * c) - 2 * C * a * c,
                A * b * b - B * b * a + C * a * a);
}

// Resultant of the two binary quadratic forms. Negative exactly when the
// root pairs interlace on the projective line, zero when a root is shared.
inline Integer axes_resultant(const Axis& x, const Axis& y) {
    const Integer ac = x.A() * y.C() - y.A() * x.C();
    const Integer ab = x.A() * y.B() - y.A() * x.B();
    const Integer bc = x.B() * y.C() - y.B() * x.C();
    return ac * ac - ab * bc;
}

inline bool axes_cross(const Axis& x, const Axis& y) {
    require(x != y, Errc::degenerate_axes, "axes coincide");
    const Integer r = axes_resultant(x, y);
    require(r != 0, Errc::degenerate_axes, "axes share an endpoint");
    return r < 0;
}

// Endpoint of an axis on the boundary; nullopt stands for infinity.
using BoundaryPoint = std::optional<Real>;

inline std::pair<BoundaryPoint, BoundaryPoint> endpoints(const Axis& x, unsigned bits) {
    const Real disc = sqrt(Real(x.discriminant(), bits + bit_length(x.discriminant())));
    const Real B(x.B(), disc.precision());
    if (x.A() == 0) return {BoundaryPoint{}, BoundaryPoint{(Real(x.C(), disc.precision()) / -B).with_precision(bits)}};
    const Real twoA = Real(x.A(), disc.precision()) * 2;
    return {BoundaryPoint{((-B - disc) / twoA).with_precision(bits)},
            BoundaryPoint{((-B + disc) / twoA).with_precision(bits)}};
}

struct HalfPlanePoint {
    Real x;
    Real y;
};

inline HalfPlanePoint make_point(const Real& x, const Real& y) {
    require(y > 0, Errc::invalid_point, "imaginary part must be positive");
    return {x, y};
}

inline Real hyperbolic_distance(const HalfPlanePoint& p, const HalfPlanePoint& q) {
    require(p.y > 0 && q.y > 0, Errc::invalid_point, "imaginary part must be positive");
    const Real dx = p.x - q.x;
    const Real dy = p.y - q.y;
    return 2 * asinh(sqrt(dx * dx + dy * dy) / (2 * sqrt(p.y * q.y)));
}

} // namespace geoforge
