#include <gtest/gtest.h>

#include "geoforge/constants.hpp"
#include "oracles.hpp"

using namespace geoforge;

namespace {

Real R(const char* s, unsigned bits = 128) { return Real(std::string(s), bits); }

void expect_near(const Real& x, const char* golden, const char* tol = "1e-30") {
    EXPECT_LT(abs(x - R(golden, x.precision())), R(tol)) << x << " vs " << golden;
}

template <class F>
void expect_code(F&& f, Errc code) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

// Values below come from a 400-bit mpmath evaluation of the same closed
// forms and defining inequalities (bisection on the last sign change).
struct Golden {
    const char* D;
    const char* K;
    const char* K_thick;
    const char* K_pipeline;
};

const Golden kY{"108822381877",
                "1598826399462776251437456678025987794971955862594124257519361939317322822677086966702448902",
                "2797879", "1819172971935070880899626833441466695"};
const Golden kTopo11{"373892511501",
                     "62213010828944368351744163476718693836469293583550085537525311204584863074919478819649314288338",
                     "4576820", "57500238353577113202382267075033942191"};
const Golden kTopo21{"8022417607237",
                     "37847449743993139819355863385809088996490646124395579946736765429719348998549444049175402430322928926888886",
                     "12034567", "360651848445060347523934932836647048050171"};

void expect_certificate(const ThresholdCertificate& c, const char* golden) {
    EXPECT_EQ(c.value, Integer(golden));
    EXPECT_TRUE(c.holds_at_value);
    EXPECT_TRUE(c.fails_below);
    EXPECT_TRUE(c.beyond_turning_point);
    EXPECT_GT(c.phi_at_value, 0);
    EXPECT_LE(c.phi_before, 0);
}

void expect_report(const ConstantsReport& r, const Golden& g) {
    expect_certificate(r.D, g.D);
    expect_certificate(r.K, g.K);
    expect_certificate(r.K_direct_thick, g.K_thick);
    expect_certificate(r.K_direct_pipeline, g.K_pipeline);
    // pipeline identities, evaluated with the same operations
    EXPECT_EQ(r.h0, 1 / (30 * r.h_max));
    EXPECT_EQ(r.eps, r.eps0 / (10 * Real(r.D.value, r.working_bits)));
    EXPECT_GE(r.K.value, r.D.value);
}

} // namespace

TEST(ClosedForms, Values) {
    expect_near(basmajian_bound(2, 2 * log(Real(4L, 128))), "6.65985967259740192265548196637891681111");
    expect_near(bers_bound(1, 1), "10.1240969878771631719115663770776473912");
    expect_near(bers_bound(0, 4), "12.8966857101169444095804948629103536635");
    expect_near(orthogonal_distance_bound(Real(1L, 128), 1, 1), "11.5104715503753317476363927406550418350");
    expect_near(thin_boundary_horocycle(Real(1L, 128) / 600), "0.0817177467491102479055432277268785038568");
    expect_near(collar_width(2 * acosh(Real(3L, 128))), "0.346573590279972654708616060729088284038");
    EXPECT_EQ(adams_bound(0, 3), 4);
    EXPECT_EQ(adams_bound(1, 1), 6);
    EXPECT_EQ(adams_bound(2, 1), 18);
    // (1/4 / 12) sqrt(2304) = 1
    EXPECT_EQ(thick_part_threshold(Real(0.25, 128), 2304), Real(1L, 128));
}

TEST(ClosedForms, Rejections) {
    expect_code([] { thick_part_threshold(Real(0.75, 128), 1); }, Errc::epsilon_out_of_range);
    expect_code([] { bers_bound(0, 3); }, Errc::not_applicable);
    expect_code([] { adams_bound(0, 2); }, Errc::not_hyperbolic_type);
    expect_code([] { adams_bound(2, 0); }, Errc::not_hyperbolic_type);
    expect_code([] { basmajian_bound(1, Real(1L, 128)); }, Errc::invalid_argument);
}

TEST(Threshold, ReducedSqrtTest) {
    // sqrt(x) > 24 for all x >= 577
    auto phi = [](const Real& x, unsigned) { return sqrt(x) - 24; };
    auto slope = [](const Real& x, unsigned p) { return Real(1L, p) + 0 * x; };
    const auto c = certified_threshold(phi, slope, Integer(1), default_d_cap(), ThresholdDomain::integer, 128);
    EXPECT_EQ(c.value, 577);
    EXPECT_TRUE(c.fails_below);
    EXPECT_TRUE(c.phi_before.is_zero());
}

TEST(Threshold, DirectKAtTwelveAgainstScan) {
    const auto c = direct_K(Real(12L, 128), Real(0L, 128));
    auto phi = [](std::int64_t k) {
        const Real x(k, 128);
        return (sqrt(x) - 2 * asinh(x) - 1).to_double();
    };
    EXPECT_EQ(c.value, oracle::scan_threshold(phi, 2, 100000));
    EXPECT_EQ(c.value, 156);
    EXPECT_TRUE(c.fails_below);
}

TEST(Threshold, CapIsReported) {
    expect_code([] { direct_K(Real(1e-12, 128), Real(1L, 128), 128, Integer(1000000)); },
                Errc::no_solution_below_cap);
}

TEST(Threshold, ValueAtFloor) {
    const auto c = direct_K(Real(12000L, 128), Real(0L, 128));
    EXPECT_EQ(c.value, 2);
    EXPECT_TRUE(c.value_at_floor);
}

TEST(Constants, ThricePuncturedSphere) {
    const SearchCaps caps;
    const unsigned work = constants_working_precision(128, caps);
    const auto y = thrice_punctured_sphere(work);
    expect_near(y.systole, "3.52549434807817210093043729991916923611");
    expect_near(y.d1, "2.77258872223978123766892848583270627230");
    const auto r = compute_constants(y, 128, caps);
    expect_near(r.eps0, "0.00166666666666666666666666666666666666667", "1e-40");
    EXPECT_EQ(r.eps0_rule, "min(h0/5, s/5)");
    expect_near(r.thin_boundary_horocycle, "0.0817177467491102479055432277268785038568");
    expect_near(r.C(2), "6.65985967259740192265548196637891681111");
    expect_report(r, kY);
}

TEST(Constants, TopologicalTypes) {
    const unsigned work = constants_working_precision(128);
    const auto r11 = compute_constants(SurfaceDescription::topological_type(1, 1, Real(1L, work)), 128);
    EXPECT_EQ(r11.eps0_rule, "min(h0/5, s/2)");
    EXPECT_EQ(*r11.h_adams, 6);
    expect_near(*r11.L_bers, "10.1240969878771631719115663770776473912");
    expect_report(r11, kTopo11);
    const auto r21 = compute_constants(SurfaceDescription::topological_type(2, 1, Real(1L, work)), 128);
    EXPECT_EQ(*r21.h_adams, 18);
    expect_report(r21, kTopo21);
}

TEST(Constants, ThinConstants) {
    const auto y = derive_thin_constants(thrice_punctured_sphere(128), 128);
    EXPECT_EQ(y.h0, Real(1L, 128) / 120);
    expect_near(y.eps0, "0.00166666666666666666666666666666666666667", "1e-40");
    const auto unit = derive_thin_constants(
        SurfaceDescription::explicit_surface(Real(1L, 128) / 30, Real(2L, 128), Real(1L, 128), Real(1L, 128)), 128);
    expect_near(unit.h0, "1", "1e-36");
    expect_near(unit.eps0, "0.2", "1e-36");
    const auto t = derive_thin_constants(SurfaceDescription::topological_type(1, 1, Real(1L, 128)), 128);
    EXPECT_EQ(t.h0, 1 / (30 * Real(6L, 128)));
    expect_near(t.eps0, "0.00111111111111111111111111111111111111111", "1e-40");
}

TEST(Constants, Validation) {
    expect_code([] { SurfaceDescription::topological_type(0, 3, Real(1L, 128)); }, Errc::not_applicable);
    expect_code([] { SurfaceDescription::topological_type(1, 0, Real(1L, 128)); }, Errc::not_hyperbolic_type);
    expect_code([] { SurfaceDescription::explicit_surface(Real(0L, 128), Real(1L, 128), Real(1L, 128), Real(1L, 128)); },
                Errc::invalid_argument);
}

TEST(ConstantsProperties, ThresholdsMonotoneInInputs) {
    // A larger additive constant can only push the threshold up.
    Integer previous = 0;
    for (int d = 0; d <= 8; ++d) {
        const auto c = direct_K(Real(0.25, 128), Real(d, 128));
        EXPECT_GE(c.value, previous);
        previous = c.value;
    }
}
