#include <gtest/gtest.h>

#include <random>

#include "geoforge/pants.hpp"
#include "geoforge/word.hpp"
#include "oracles.hpp"

using namespace geoforge;

namespace {

Real R(const char* s, unsigned bits = 128) { return Real(std::string(s), bits); }

template <class F>
void expect_code(F&& f, Errc code) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

Real relative_error(const Real& x, const Real& ref) { return abs(x - ref) / abs(ref); }

} // namespace

TEST(HorocycleDistance, CuspCases) {
    const Real one(1L, 128);
    const auto tps = make_pants(0, 0, 0);
    EXPECT_EQ(cusp_case(tps), 3);
    EXPECT_LT(abs(horocycle_self_distance(tps, one) - R("2.77258872223978123766892848583270627230")), R("1e-30"));
    const Real g = 2 * acosh(Real(3L, 128));
    const auto geo = make_pants(Real(0L, 128), g, g);
    EXPECT_EQ(cusp_case(geo), 1);
    EXPECT_LT(abs(horocycle_self_distance(geo, one) - R("4.96981329957600062045941895967775768160")), R("1e-30"));
    EXPECT_EQ(cusp_case(make_pants(Real(0L, 128), g, Real(0L, 128))), 2);
}

TEST(HorocycleDistance, Rejections) {
    expect_code([] { cusp_case(make_pants(1, 0, 0)); }, Errc::no_cusp);
    expect_code([] { horocycle_self_distance(make_pants(0, 0, 0), Real(4.5, 128)); }, Errc::level_too_large);
    EXPECT_TRUE(horocycle_self_distance(make_pants(0, 0, 0), Real(4L, 128)).is_zero());
    expect_code([] { make_pants(-1, 0, 0); }, Errc::invalid_argument);
}

TEST(HorocycleDistance, MatchesPerpendicularFoot) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ld(0.05, 8.0), hf(0.01, 1.0);
    for (int cusps = 0; cusps <= 2; ++cusps) {
        for (int i = 0; i < 30; ++i) {
            const Real a(cusps >= 1 ? 0.0 : ld(rng), 128), b(cusps >= 2 ? 0.0 : ld(rng), 128);
            const auto pants = make_pants(Real(0L, 128), a, b);
            const Real h = horocycle_level_limit(pants) * Real(hf(rng), 128);
            const Real ref = oracle::perpendicular_foot_distance(a, b, h, 128);
            EXPECT_LT(relative_error(horocycle_self_distance(pants, h), ref), R("1e-10"));
        }
    }
}

TEST(BackGeodesic, MatchesPantsGroupTrace) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ld(0.1, 5.0);
    for (int i = 0; i < 50; ++i) {
        const Real a(ld(rng), 256), b(ld(rng), 256), c(ld(rng), 256);
        const auto grp = pants_group(a, b, c, 256);
        EXPECT_LT(abs(grp.alpha.det() - 1), R("1e-60", 256));
        EXPECT_LT(abs(grp.beta.det() - 1), R("1e-60", 256));
        EXPECT_LT(abs(abs((grp.alpha * grp.beta).trace()) - 2 * cosh(c / 2)), R("1e-60", 256));
        for (long k = 1; k <= 6; ++k) {
            const Real tr = (grp.beta.inverse() * real_power(grp.alpha, k)).trace();
            const Real expected = back_geodesic_length(a, b, c, k, 256);
            EXPECT_LT(relative_error(length_from_real_trace(tr), expected), R("1e-50", 256)) << k;
        }
    }
}

TEST(BackGeodesic, DegeneratesToCuspFormula) {
    // y -> 0 in g3 recovers 2 acosh(2k + 1), the length of b a^k in the
    // thrice punctured sphere.
    const Real tiny = R("1e-40");
    for (long k = 1; k <= 8; ++k) {
        const Real limit = 2 * acosh(g3_cosh(tiny, k));
        const Real word = length_from_trace(evaluate_sl2(parse_letters("b" + std::string(k, 'a'))).trace(), 128);
        EXPECT_LT(abs(limit - word), R("1e-10"));
    }
}

TEST(ExampleSurface, FrozenValuesAtHundred) {
    // 45-digit mpmath evaluation of the closed forms.
    const auto r = build_example_surface(100);
    EXPECT_LT(abs(cosh(r.l_g1 / 2) - R("201.02510125438667322")), R("1e-15"));
    EXPECT_LT(abs(cosh(r.l_g3 / 2) - R("201.00074533341201486")), R("1e-15"));
    EXPECT_LT(abs(r.collar_2w - R("12.5")), R("1e-30"));
    EXPECT_TRUE(r.asserted);
    EXPECT_TRUE(r.bullet2);
    EXPECT_TRUE(r.g3_below_g2);
    // l(g1) < l(g3) does not hold for this surface.
    EXPECT_FALSE(r.bullet1);
    EXPECT_LT(r.margin1, 0);
}

TEST(ExampleSurface, SmallKNotAsserted) {
    const auto r = build_example_surface(10);
    EXPECT_FALSE(r.asserted);
    EXPECT_GE(r.margin_precision_bits, 128u);
}

TEST(ExampleSurface, PrecisionCap) {
    expect_code([] { build_example_surface(100, 128, 128); }, Errc::precision_exhausted);
}
