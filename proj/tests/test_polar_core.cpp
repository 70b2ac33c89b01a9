#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "paraph/errors.hpp"
#include "paraph/fit.hpp"
#include "paraph/trs.hpp"

using namespace paraph;

namespace {

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double phi_distance(Angle a, Angle b) { return orientation_distance_deg(a, b); }

std::vector<AngleSample> sample_trs(const TRSParams& trs, std::initializer_list<double> degs) {
    std::vector<AngleSample> samples;
    for (double d : degs) samples.push_back({Angle{d}, trs_intensity(trs, Angle{d})});
    return samples;
}

}  // namespace

TEST_CASE("angle normalization and orientation arithmetic") {
    CHECK(Angle{190.0}.normalized().degrees == doctest::Approx(10.0));
    CHECK(Angle{-10.0}.normalized().degrees == doctest::Approx(170.0));
    CHECK(Angle{360.0}.normalized().degrees == doctest::Approx(0.0));
    CHECK(phi_distance(Angle{5.0}, Angle{175.0}) == doctest::Approx(10.0));
    CHECK(vector_orientation(0.0, 1.0).degrees == doctest::Approx(0.0));
    CHECK(vector_orientation(1.0, 0.0).degrees == doctest::Approx(90.0));
    CHECK(vector_orientation(0.0, -1.0).degrees == doctest::Approx(0.0));
}

TEST_CASE("malus transmission") {
    CHECK(malus_transmission(1.0, Angle{0.0}) == 1.0);
    CHECK(near(malus_transmission(1.0, Angle{90.0}), 0.0, 1e-12));
    CHECK(near(malus_transmission(2.0, Angle{45.0}), 1.0, 1e-12));
    CHECK_THROWS_AS(malus_transmission(-1.0, Angle{0.0}), std::domain_error);
}

TEST_CASE("malus complementarity over random inputs") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> intensity(0.0, 10.0);
    std::uniform_real_distribution<double> angle(-720.0, 720.0);
    for (int i = 0; i < 10000; ++i) {
        double i0 = intensity(rng);
        Angle theta{angle(rng)};
        double sum = malus_transmission(i0, theta) + malus_transmission(i0, theta + Angle{90.0});
        CHECK(near(sum, i0, 1e-12));
    }
}

TEST_CASE("unpolarized transmission is half the incident intensity") {
    CHECK(unpolarized_transmission(1.0) == 0.5);
    CHECK(unpolarized_transmission(0.0) == 0.0);
    CHECK(unpolarized_transmission(3.0) == 1.5);
    CHECK_THROWS_AS(unpolarized_transmission(-0.1), std::domain_error);

    // Closed-form antiderivative of cos^2 over a half period against the
    // direct formula.
    double analytic = (kPi / 2.0) / kPi;  // (theta/2 + sin(2 theta)/4) over [0, pi]
    CHECK(near(unpolarized_transmission(1.0), analytic, 1e-12));

    // Mean of the transmitted intensity over a dense uniform angle lattice.
    const int n = 1000000;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double theta = (k + 0.5) * 180.0 / n;
        sum += malus_transmission(1.0, Angle{theta});
    }
    CHECK(near(sum / n, 0.5, 1e-6));
}

TEST_CASE("transmitted radiance sinusoid evaluation") {
    TRSParams trs{0.2, 0.8, Angle{0.0}};
    CHECK(trs_intensity(trs, Angle{0.0}) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(trs_intensity(trs, Angle{90.0}) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(trs_intensity(trs, Angle{45.0}) == doctest::Approx(0.5).epsilon(1e-12));

    // Periodic with 180 degrees.
    CHECK(near(trs_intensity(trs, Angle{30.0}), trs_intensity(trs, Angle{210.0}), 1e-12));
}

TEST_CASE("sinusoid complementarity and extrema") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double lo = unit(rng);
        double hi = lo + unit(rng);
        TRSParams trs{lo, hi, Angle{180.0 * unit(rng)}};
        Angle theta{360.0 * unit(rng)};
        double sum = trs_intensity(trs, theta) + trs_intensity(trs, theta + Angle{90.0});
        CHECK(near(sum, trs.i_min + trs.i_max, 1e-12));
        CHECK(near(trs_intensity(trs, trs.phi), trs.i_max, 1e-12));
        CHECK(near(trs_intensity(trs, trs.phi + Angle{90.0}), trs.i_min, 1e-12));
    }
}

TEST_CASE("degree of polarization") {
    CHECK(degree_of_polarization(TRSParams{0.5, 0.5, Angle{17.0}}) == 0.0);
    CHECK(degree_of_polarization(TRSParams{0.0, 1.0, Angle{63.0}}) == 1.0);
    CHECK(degree_of_polarization(TRSParams{0.2, 0.8, Angle{120.0}}) == doctest::Approx(0.6));
    CHECK(degree_of_polarization(TRSParams{0.0, 0.0, Angle{45.0}}) == 0.0);  // black pixel
}

TEST_CASE("stokes conversion") {
    LinearStokes s = trs_to_stokes(TRSParams{0.2, 0.8, Angle{0.0}});
    CHECK(near(s.s0, 1.0, 1e-12));
    CHECK(near(s.s1, 0.6, 1e-12));
    CHECK(near(s.s2, 0.0, 1e-12));

    TRSParams unpol = stokes_to_trs(LinearStokes{1.0, 0.0, 0.0});
    CHECK(unpol.i_min == doctest::Approx(0.5));
    CHECK(unpol.i_max == doctest::Approx(0.5));
    CHECK(unpol.phi.degrees == 0.0);  // tie-break

    CHECK_THROWS_AS(stokes_to_trs(LinearStokes{1.0, 1.5, 0.0}), std::domain_error);
}

TEST_CASE("stokes round trip recovers parameters") {
    TRSParams trs{0.1, 0.9, Angle{30.0}};
    TRSParams back = stokes_to_trs(trs_to_stokes(trs));
    CHECK(near(back.i_min, trs.i_min, 1e-12));
    CHECK(near(back.i_max, trs.i_max, 1e-12));
    CHECK(phi_distance(back.phi, trs.phi) <= 1e-12);

    // Cross-check the recovered orientation against a dense scan of the
    // sinusoid peak.
    CHECK(phi_distance(Angle{oracle::grid_peak_orientation(trs)}, back.phi) <= 0.0051);

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        double lo = 0.1 * unit(rng);
        TRSParams t{lo, lo + unit(rng) + 1e-6, Angle{180.0 * unit(rng)}};
        TRSParams b = stokes_to_trs(trs_to_stokes(t));
        CHECK(near(b.i_min, t.i_min, 1e-12));
        CHECK(near(b.i_max, t.i_max, 1e-12));
        CHECK(phi_distance(b.phi, t.phi) <= 1e-10);
    }
}

TEST_CASE("superposition is additive in measurement") {
    TRSParams a = trs_superpose(TRSParams{0.5, 0.5, Angle{0.0}}, TRSParams{0.25, 0.25, Angle{0.0}});
    CHECK(a.i_min == doctest::Approx(0.75));
    CHECK(a.i_max == doctest::Approx(0.75));

    TRSParams cancel = trs_superpose(TRSParams::pure(1.0, Angle{0.0}),
                                     TRSParams::pure(1.0, Angle{90.0}));
    CHECK(cancel.i_min == doctest::Approx(1.0));
    CHECK(cancel.i_max == doctest::Approx(1.0));

    TRSParams oblique = trs_superpose(TRSParams::pure(1.0, Angle{0.0}),
                                      TRSParams::pure(1.0, Angle{45.0}));
    CHECK(oblique.i_min == doctest::Approx((2.0 - std::sqrt(2.0)) / 2.0));
    CHECK(oblique.i_max == doctest::Approx((2.0 + std::sqrt(2.0)) / 2.0));
    CHECK(oblique.phi.degrees == doctest::Approx(22.5));

    // Verify the oblique sum by measuring both beams pointwise at 8 angles.
    for (int k = 0; k < 8; ++k) {
        Angle theta{k * 22.5};
        double direct = trs_intensity(TRSParams::pure(1.0, Angle{0.0}), theta) +
                        trs_intensity(TRSParams::pure(1.0, Angle{45.0}), theta);
        CHECK(near(trs_intensity(oblique, theta), direct, 1e-12));
    }
}

TEST_CASE("superposition linearity over random states") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        TRSParams a{0.3 * unit(rng), 0.3 * unit(rng) + 0.5, Angle{180.0 * unit(rng)}};
        TRSParams b{0.3 * unit(rng), 0.3 * unit(rng) + 0.5, Angle{180.0 * unit(rng)}};
        Angle theta{360.0 * unit(rng)};
        double sum = trs_intensity(a, theta) + trs_intensity(b, theta);
        CHECK(near(trs_intensity(trs_superpose(a, b), theta), sum, 1e-12));
    }
}

TEST_CASE("shutter element transform") {
    TRSParams trs{0.2, 0.8, Angle{0.0}};
    TRSParams twisted = tnlc_transform(trs, TnlcState::Unpowered);
    CHECK(twisted.phi.degrees == doctest::Approx(90.0));
    CHECK(twisted.i_min == trs.i_min);
    CHECK(twisted.i_max == trs.i_max);

    TRSParams same = tnlc_transform(trs, TnlcState::Powered);
    CHECK(same.phi.degrees == trs.phi.degrees);

    // Unpowered applied twice is the identity (90 + 90 = 0 mod 180).
    TRSParams twice = tnlc_transform(twisted, TnlcState::Unpowered);
    CHECK(twice.phi.degrees == doctest::Approx(0.0));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        TRSParams t{unit(rng), unit(rng) + 1.0, Angle{180.0 * unit(rng)}};
        TRSParams back = tnlc_transform(tnlc_transform(t, TnlcState::Unpowered), TnlcState::Unpowered);
        CHECK(phi_distance(back.phi, t.phi) <= 1e-12);
    }
}

TEST_CASE("shutter measurement picks orthogonal components") {
    TRSParams horizontal = TRSParams::pure(1.0, Angle{90.0});
    CHECK(shutter_measure(horizontal, TnlcState::Unpowered) == doctest::Approx(1.0));
    CHECK(near(shutter_measure(horizontal, TnlcState::Powered), 0.0, 1e-12));

    TRSParams unpol = TRSParams::unpolarized(1.0);
    CHECK(shutter_measure(unpol, TnlcState::Unpowered) == doctest::Approx(0.5));
    CHECK(shutter_measure(unpol, TnlcState::Powered) == doctest::Approx(0.5));
}

TEST_CASE("sinusoid fit recovers exact parameters from three samples") {
    TRSParams truth{0.2, 0.8, Angle{30.0}};
    auto samples = sample_trs(truth, {0.0, 45.0, 90.0});
    TrsFit fit = trs_fit(samples);
    CHECK(near(fit.params.i_min, truth.i_min, 1e-9));
    CHECK(near(fit.params.i_max, truth.i_max, 1e-9));
    CHECK(phi_distance(fit.params.phi, truth.phi) <= 1e-9);
    CHECK_FALSE(fit.clamped);

    // Independent grid-search oracle agrees to within its step.
    TRSParams grid = oracle::grid_fit(samples);
    CHECK(near(grid.i_min, truth.i_min, 1e-3));
    CHECK(near(grid.i_max, truth.i_max, 1e-3));
    CHECK(phi_distance(grid.phi, truth.phi) <= 0.011);
}

TEST_CASE("sinusoid fit handles unpolarized and degenerate inputs") {
    std::vector<AngleSample> constant{{Angle{0.0}, 0.5}, {Angle{60.0}, 0.5}, {Angle{120.0}, 0.5}};
    TrsFit fit = trs_fit(constant);
    CHECK(fit.params.i_min == doctest::Approx(0.5));
    CHECK(fit.params.i_max == doctest::Approx(0.5));
    CHECK(fit.params.phi.degrees == 0.0);  // tie-break

    std::vector<AngleSample> degenerate{{Angle{0.0}, 0.1}, {Angle{0.0}, 0.2}, {Angle{0.0}, 0.3}};
    CHECK_THROWS_AS(trs_fit(degenerate), FitError);

    // Angles 90 degrees apart cannot separate the 45/135 component.
    std::vector<AngleSample> two_angles{{Angle{0.0}, 0.3}, {Angle{90.0}, 0.7}, {Angle{180.0}, 0.3}};
    CHECK_THROWS_AS(trs_fit(two_angles), FitError);

    CHECK_THROWS_AS(trs_fit(std::vector<AngleSample>{{Angle{0.0}, 1.0}}), FitError);
}

TEST_CASE("sinusoid fit clamps slightly negative minima") {
    // Samples of a sinusoid whose mean is below its amplitude; the
    // unconstrained fit dips under zero.
    std::vector<AngleSample> samples;
    for (double deg : {0.0, 60.0, 120.0}) {
        double t = 2.0 * deg * kDegToRad;
        samples.push_back({Angle{deg}, 0.1 + 0.2 * std::cos(t)});
    }
    TrsFit fit = trs_fit(samples);
    CHECK(fit.clamped);
    CHECK(fit.params.i_min == 0.0);
    CHECK(fit.params.i_max == doctest::Approx(0.3));
}

TEST_CASE("overdetermined fit stays exact on noiseless samples") {
    TRSParams truth{0.15, 0.65, Angle{141.0}};
    auto samples = sample_trs(truth, {0.0, 30.0, 60.0, 90.0, 120.0, 150.0});
    TrsFit fit = trs_fit(samples);
    CHECK(near(fit.params.i_min, truth.i_min, 1e-12));
    CHECK(near(fit.params.i_max, truth.i_max, 1e-12));
    CHECK(phi_distance(fit.params.phi, truth.phi) <= 1e-10);
}

TEST_CASE("fit of sampled sinusoid is the identity on parameters") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        TRSParams truth{0.5 * unit(rng), 0.5 * unit(rng) + 0.6, Angle{180.0 * unit(rng)}};
        auto samples = sample_trs(truth, {10.0, 70.0, 130.0});
        TrsFit fit = trs_fit(samples);
        CHECK(near(fit.params.i_min, truth.i_min, 1e-9));
        CHECK(near(fit.params.i_max, truth.i_max, 1e-9));
        CHECK(phi_distance(fit.params.phi, truth.phi) <= 1e-9);
    }
}
