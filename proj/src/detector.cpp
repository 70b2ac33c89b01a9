#include "paraph/detector.hpp"

#include <cmath>

#include "paraph/errors.hpp"
#include "paraph/pipeline.hpp"

namespace paraph {

namespace {

ImageF band_pass(const ImageF& img, double sigma_fine, double sigma_coarse) {
    int radius_fine = std::max(1, static_cast<int>(std::ceil(3.0 * sigma_fine)));
    int radius_coarse = std::max(1, static_cast<int>(std::ceil(3.0 * sigma_coarse)));
    ImageF fine = gaussian_blur(img, sigma_fine, radius_fine);
    ImageF coarse = gaussian_blur(img, sigma_coarse, radius_coarse);
    ImageF out(img.width(), img.height(), img.channels());
    for (size_t i = 0; i < out.size(); ++i)
        out.pixels()[i] = fine.pixels()[i] - coarse.pixels()[i];
    return out;
}

ImageF gradient_magnitude(const ImageF& img) {
    ImageF out(img.width(), img.height(), 1);
    int w = img.width();
    int h = img.height();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double gx = (img.at(std::min(x + 1, w - 1), y) - img.at(std::max(x - 1, 0), y)) * 0.5;
            double gy = (img.at(x, std::min(y + 1, h - 1)) - img.at(x, std::max(y - 1, 0))) * 0.5;
            out.at(x, y) = std::hypot(gx, gy);
        }
    }
    return out;
}

double pearson(const ImageF& a, const ImageF& b, Rect roi) {
    double n = 0.0, mean_a = 0.0, mean_b = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) {
            mean_a += a.at(x, y);
            mean_b += b.at(x, y);
            n += 1.0;
        }
    }
    mean_a /= n;
    mean_b /= n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) {
            double da = a.at(x, y) - mean_a;
            double db = b.at(x, y) - mean_b;
            cov += da * db;
            var_a += da * da;
            var_b += db * db;
        }
    }
    if (var_a <= 0.0 || var_b <= 0.0) return 0.0;
    return cov / std::sqrt(var_a * var_b);
}

void check_roi(const ImageF& img, Rect roi, const char* where) {
    if (roi.w <= 0 || roi.h <= 0) throw PipelineError(std::string(where) + ": empty roi");
    if (!roi.inside(img.width(), img.height()))
        throw PipelineError(std::string(where) + ": roi outside image bounds");
}

}  // namespace

const char* to_string(Decision d) {
    switch (d) {
        case Decision::BonaFide: return "bona_fide";
        case Decision::AttackUniform: return "attack_uniform";
        case Decision::AttackNoise: return "attack_noise";
    }
    return "unknown";
}

double structure_score(const ImageF& paraph, const ImageF& diffuse, Rect roi,
                       const DetectorConfig& config) {
    if (!(config.sigma_fine > 0.0) || !(config.sigma_coarse > config.sigma_fine))
        throw PipelineError("structure_score: need 0 < sigma_fine < sigma_coarse");
    ImageF p = to_grayscale(paraph);
    ImageF d = to_grayscale(diffuse);
    check_roi(p, roi, "structure_score");
    check_roi(d, roi, "structure_score");

    ImageF grad_p = gradient_magnitude(band_pass(p, config.sigma_fine, config.sigma_coarse));
    ImageF grad_d = gradient_magnitude(band_pass(d, config.sigma_fine, config.sigma_coarse));
    return pearson(grad_p, grad_d, roi);
}

double uniformity_score(const ImageF& paraph, Rect roi) {
    ImageF p = to_grayscale(paraph);
    check_roi(p, roi, "uniformity_score");

    double n = 0.0, mean = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) {
            mean += p.at(x, y);
            n += 1.0;
        }
    }
    mean /= n;
    double var = 0.0;
    for (int y = roi.y; y < roi.y + roi.h; ++y) {
        for (int x = roi.x; x < roi.x + roi.w; ++x) {
            double d = p.at(x, y) - mean;
            var += d * d;
        }
    }
    double stddev = std::sqrt(var / n);
    return 1.0 - std::min(1.0, stddev / 0.25);
}

Decision decide(double structure, double uniformity, const DetectorConfig& config) {
    if (structure >= config.structure_threshold && uniformity < config.uniformity_threshold)
        return Decision::BonaFide;
    if (uniformity >= config.uniformity_threshold) return Decision::AttackUniform;
    return Decision::AttackNoise;
}

DetectionResult classify(const ImageF& paraph, const ImageF& diffuse,
                         const DetectorConfig& config) {
    DetectionResult result;
    result.structure_score = structure_score(paraph, diffuse, config.roi, config);
    result.uniformity_score = uniformity_score(paraph, config.roi);
    result.decision = decide(result.structure_score, result.uniformity_score, config);
    return result;
}

}  // namespace paraph
