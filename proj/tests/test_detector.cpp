#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paraph/detector.hpp"
#include "paraph/errors.hpp"
#include "paraph/pipeline.hpp"

using namespace paraph;

namespace {

ImageF smooth_random(int w, int h, uint32_t seed) {
    ImageF img(w, h, 1);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double& v : img.pixels()) v = unit(rng);
    return gaussian_blur(img, 2.0, 6);
}

ImageF white_noise(int w, int h, uint32_t seed) {
    ImageF img(w, h, 1);
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 0.2);
    for (double& v : img.pixels()) v = gauss(rng);
    return img;
}

DetectorConfig config_for(int w, int h) {
    DetectorConfig cfg;
    cfg.roi = Rect{4, 4, w - 8, h - 8};
    cfg.structure_threshold = 0.5;
    cfg.uniformity_threshold = 0.8;
    return cfg;
}

}  // namespace

TEST_CASE("identical inputs correlate perfectly") {
    ImageF img = smooth_random(48, 48, 10);
    DetectorConfig cfg = config_for(48, 48);
    CHECK(structure_score(img, img, cfg.roi, cfg) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("noise against smooth shading stays near zero") {
    // 100-seed Monte Carlo at the scale of the face region.
    DetectorConfig cfg = config_for(144, 144);
    ImageF diffuse = smooth_random(144, 144, 20);
    double worst = 0.0;
    for (uint32_t seed = 0; seed < 100; ++seed) {
        double score = structure_score(white_noise(144, 144, 1000 + seed), diffuse, cfg.roi, cfg);
        worst = std::max(worst, std::fabs(score));
    }
    CAPTURE(worst);
    CHECK(worst < 0.1);
}

TEST_CASE("zero variance fields score zero") {
    ImageF flat(32, 32, 1, 0.25);
    ImageF textured = smooth_random(32, 32, 30);
    DetectorConfig cfg = config_for(32, 32);
    CHECK(structure_score(flat, textured, cfg.roi, cfg) == 0.0);
    CHECK(structure_score(textured, flat, cfg.roi, cfg) == 0.0);
}

TEST_CASE("structure score is invariant to positive affine rescaling") {
    ImageF paraph = smooth_random(48, 48, 40);
    ImageF diffuse = smooth_random(48, 48, 41);
    DetectorConfig cfg = config_for(48, 48);
    double base = structure_score(paraph, diffuse, cfg.roi, cfg);

    ImageF rescaled = paraph;
    for (double& v : rescaled.pixels()) v = 3.7 * v + 0.21;
    CHECK(structure_score(rescaled, diffuse, cfg.roi, cfg) == doctest::Approx(base).epsilon(1e-9));

    ImageF diffuse_rescaled = diffuse;
    for (double& v : diffuse_rescaled.pixels()) v = 0.4 * v - 1.1;
    CHECK(structure_score(paraph, diffuse_rescaled, cfg.roi, cfg) ==
          doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("invalid detector configuration is rejected") {
    ImageF img = smooth_random(32, 32, 50);
    DetectorConfig cfg = config_for(32, 32);
    cfg.sigma_coarse = cfg.sigma_fine;
    CHECK_THROWS_AS(structure_score(img, img, cfg.roi, cfg), PipelineError);

    DetectorConfig out_of_bounds = config_for(32, 32);
    out_of_bounds.roi = Rect{20, 20, 32, 32};
    CHECK_THROWS_AS(structure_score(img, img, out_of_bounds.roi, out_of_bounds), PipelineError);
}

TEST_CASE("uniformity of flat and alternating regions") {
    ImageF constant(32, 32, 1, -0.97);
    CHECK(uniformity_score(constant, Rect{0, 0, 32, 32}) == doctest::Approx(1.0));

    // Checkerboard of -1/+1 has standard deviation 1, clipped by the 0.25 cap.
    ImageF checker(32, 32, 1);
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 32; ++x) checker.at(x, y) = (x + y) % 2 == 0 ? 1.0 : -1.0;
    CHECK(uniformity_score(checker, Rect{0, 0, 32, 32}) == doctest::Approx(0.0));

    CHECK_THROWS_AS(uniformity_score(constant, Rect{0, 0, 0, 0}), PipelineError);
}

TEST_CASE("decision rule") {
    DetectorConfig cfg;
    cfg.structure_threshold = 0.5;
    cfg.uniformity_threshold = 0.8;
    CHECK(decide(0.9, 0.1, cfg) == Decision::BonaFide);
    CHECK(decide(0.05, 0.95, cfg) == Decision::AttackUniform);
    CHECK(decide(0.05, 0.2, cfg) == Decision::AttackNoise);
    // High structure cannot rescue an over-uniform image.
    CHECK(decide(0.9, 0.95, cfg) == Decision::AttackUniform);
}

TEST_CASE("decisions partition score space and respect threshold monotonicity") {
    DetectorConfig cfg;
    cfg.structure_threshold = 0.5;
    cfg.uniformity_threshold = 0.8;
    for (int si = -10; si <= 10; ++si) {
        for (int ui = 0; ui <= 10; ++ui) {
            double s = si / 10.0;
            double u = ui / 10.0;
            Decision d = decide(s, u, cfg);
            bool is_bona = d == Decision::BonaFide;
            bool is_uniform = d == Decision::AttackUniform;
            bool is_noise = d == Decision::AttackNoise;
            CHECK(static_cast<int>(is_bona) + static_cast<int>(is_uniform) +
                      static_cast<int>(is_noise) == 1);

            if (d != Decision::BonaFide) {
                DetectorConfig stricter = cfg;
                stricter.structure_threshold = cfg.structure_threshold + 0.3;
                CHECK(decide(s, u, stricter) != Decision::BonaFide);
            }
        }
    }
}

TEST_CASE("classify combines both scores") {
    DetectorConfig cfg = config_for(48, 48);
    cfg.structure_threshold = 0.5;
    cfg.uniformity_threshold = 0.8;

    // A structured field correlated with itself and spread over [-1, 1]
    // decides bona fide.
    ImageF structured = smooth_random(48, 48, 60);
    double lo = 1e9, hi = -1e9;
    for (double v : structured.pixels()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (double& v : structured.pixels()) v = -1.0 + 2.0 * (v - lo) / (hi - lo);
    DetectionResult live = classify(structured, structured, cfg);
    CHECK(live.decision == Decision::BonaFide);

    // A flat field decides attack_uniform regardless of the diffuse content.
    ImageF flat(48, 48, 1, -0.95);
    DetectionResult uniform = classify(flat, structured, cfg);
    CHECK(uniform.decision == Decision::AttackUniform);
    CHECK(uniform.uniformity_score == doctest::Approx(1.0));

    // Wide-spread noise is neither structured nor uniform.
    ImageF noisy = white_noise(48, 48, 61);
    for (double& v : noisy.pixels()) v = std::clamp(2.5 * v, -1.0, 1.0);
    DetectionResult noise = classify(noisy, structured, cfg);
    CHECK(noise.decision == Decision::AttackNoise);
    CHECK(noise.structure_score < cfg.structure_threshold);
    CHECK(noise.uniformity_score < cfg.uniformity_threshold);
}
