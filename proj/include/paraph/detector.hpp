#pragma once

#include <string>

#include "paraph/image.hpp"

namespace paraph {

enum class Decision { BonaFide, AttackUniform, AttackNoise };

const char* to_string(Decision d);

struct DetectorConfig {
    Rect roi;
    double structure_threshold = 0.0;  // calibrated defaults live in config.cpp
    double uniformity_threshold = 1.0;
    double sigma_fine = 1.5;
    double sigma_coarse = 4.0;
};

struct DetectionResult {
    double structure_score = 0.0;   // in [-1, 1]
    double uniformity_score = 0.0;  // in [0, 1]
    Decision decision = Decision::AttackNoise;
};

// Pearson correlation, inside the region, between band-passed
// gradient-magnitude fields of the normalized-difference image and the
// diffuse image. High when polarization structure is co-located with facial
// shading; near zero for noise or uniform media. Zero-variance fields score 0.
double structure_score(const ImageF& paraph, const ImageF& diffuse, Rect roi,
                       const DetectorConfig& config);

// 1 - min(1, stddev(region) / 0.25): near 1 for flat normalized-difference
// regions, low for structured or noisy ones. Throws on an empty region.
double uniformity_score(const ImageF& paraph, Rect roi);

// Decision rule: bona_fide iff structure >= structure_threshold and
// uniformity < uniformity_threshold; otherwise attack_uniform when uniformity
// is at or above its threshold, else attack_noise.
Decision decide(double structure, double uniformity, const DetectorConfig& config);

DetectionResult classify(const ImageF& paraph, const ImageF& diffuse, const DetectorConfig& config);

}  // namespace paraph
