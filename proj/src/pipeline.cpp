#include "paraph/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "paraph/errors.hpp"

namespace paraph {

namespace {

std::vector<double> gaussian_taps(double sigma, int radius) {
    std::vector<double> taps(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        taps[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
        sum += taps[i + radius];
    }
    for (double& t : taps) t /= sum;
    return taps;
}

ImageF convolve_separable(const ImageF& img, const std::vector<double>& taps) {
    int radius = (static_cast<int>(taps.size()) - 1) / 2;
    int w = img.width();
    int h = img.height();
    int ch = img.channels();

    ImageF rows(w, h, ch);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double sum = 0.0;
                for (int i = -radius; i <= radius; ++i) {
                    int xs = std::clamp(x + i, 0, w - 1);
                    sum += taps[i + radius] * img.at(xs, y, c);
                }
                rows.at(x, y, c) = sum;
            }
        }
    }
    ImageF out(w, h, ch);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double sum = 0.0;
                for (int i = -radius; i <= radius; ++i) {
                    int ys = std::clamp(y + i, 0, h - 1);
                    sum += taps[i + radius] * rows.at(x, ys, c);
                }
                out.at(x, y, c) = sum;
            }
        }
    }
    return out;
}

// Integer translation with edge clamping.
ImageF translate(const ImageF& img, int dx, int dy) {
    ImageF out(img.width(), img.height(), img.channels());
    for (int y = 0; y < img.height(); ++y) {
        int ys = std::clamp(y - dy, 0, img.height() - 1);
        for (int x = 0; x < img.width(); ++x) {
            int xs = std::clamp(x - dx, 0, img.width() - 1);
            for (int c = 0; c < img.channels(); ++c) out.at(x, y, c) = img.at(xs, ys, c);
        }
    }
    return out;
}

double sum_abs_diff(const ImageF& a, const ImageF& b) {
    double sad = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sad += std::fabs(a.pixels()[i] - b.pixels()[i]);
    return sad;
}

}  // namespace

GaussianKernel5x5 make_gaussian_kernel5(double sigma) {
    if (!(sigma > 0.0)) throw PipelineError("gaussian kernel: sigma must be positive");
    GaussianKernel5x5 kernel;
    kernel.sigma = sigma;
    std::vector<double> taps = gaussian_taps(sigma, 2);
    for (int dy = 0; dy < 5; ++dy)
        for (int dx = 0; dx < 5; ++dx) kernel.weights[dy * 5 + dx] = taps[dy] * taps[dx];
    return kernel;
}

std::vector<FramePair> pair_frames(const std::vector<PolarizedFrame>& frames) {
    if (frames.size() < 2) throw PipelineError("pair_frames: need at least 2 frames");
    for (size_t i = 0; i < frames.size(); ++i) {
        TnlcState expected = i % 2 == 0 ? TnlcState::Unpowered : TnlcState::Powered;
        if (frames[i].tnlc_state != expected)
            throw PipelineError("pair_frames: frames must alternate starting unpowered");
    }
    std::vector<FramePair> pairs;
    for (size_t i = 0; i + 1 < frames.size(); i += 2) {
        if (!frames[i].pixels.same_shape(frames[i + 1].pixels))
            throw PipelineError("pair_frames: frame dimensions differ within a pair");
        pairs.push_back(FramePair{frames[i], frames[i + 1]});
    }
    return pairs;
}

FramePair align_pair(const FramePair& pair, int max_shift, std::array<int, 2>* shift_out) {
    if (max_shift < 0) throw PipelineError("align_pair: negative max_shift");
    if (shift_out) *shift_out = {0, 0};
    if (max_shift == 0) return pair;

    double best_sad = sum_abs_diff(pair.i_v.pixels, pair.i_h.pixels);
    int best_dx = 0;
    int best_dy = 0;
    for (int dy = -max_shift; dy <= max_shift; ++dy) {
        for (int dx = -max_shift; dx <= max_shift; ++dx) {
            if (dx == 0 && dy == 0) continue;
            double sad = sum_abs_diff(translate(pair.i_v.pixels, dx, dy), pair.i_h.pixels);
            if (sad < best_sad) {
                best_sad = sad;
                best_dx = dx;
                best_dy = dy;
            }
        }
    }
    FramePair aligned = pair;
    aligned.i_v.pixels = translate(pair.i_v.pixels, best_dx, best_dy);
    if (shift_out) *shift_out = {best_dx, best_dy};
    return aligned;
}

ImageF gaussian_blur(const ImageF& img, double sigma, int radius) {
    if (!(sigma > 0.0)) throw PipelineError("gaussian_blur: sigma must be positive");
    if (radius < 1) throw PipelineError("gaussian_blur: radius must be at least 1");
    return convolve_separable(img, gaussian_taps(sigma, radius));
}

ImageF gaussian_denoise(const ImageF& frame, double sigma) {
    return gaussian_blur(frame, sigma, 2);
}

ImageF paraph_image(const ImageF& i_h, const ImageF& i_v, double floor) {
    if (!i_h.same_shape(i_v)) throw PipelineError("paraph_image: image shapes differ");
    if (floor < 0.0) throw PipelineError("paraph_image: negative floor");
    ImageF out(i_h.width(), i_h.height(), i_h.channels());
    for (size_t i = 0; i < out.size(); ++i) {
        double h = i_h.pixels()[i];
        double v = i_v.pixels()[i];
        double denom = std::max(h + v, floor);
        out.pixels()[i] = denom == 0.0 ? 0.0 : (h - v) / denom;
    }
    return out;
}

ImageF to_grayscale(const ImageF& img) {
    if (img.channels() == 1) return img;
    if (img.channels() != 3) throw PipelineError("to_grayscale: expected 1 or 3 channels");
    ImageF out(img.width(), img.height(), 1);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out.at(x, y) = (img.at(x, y, 0) + img.at(x, y, 1) + img.at(x, y, 2)) / 3.0;
    return out;
}

ImageU8 to_display(const ImageF& img) {
    ImageU8 out(img.width(), img.height(), img.channels());
    for (size_t i = 0; i < img.size(); ++i) {
        double v = img.pixels()[i];
        if (!(v >= -1.0 && v <= 1.0))
            throw PipelineError("to_display: value outside [-1, 1]");
        out.pixels()[i] = static_cast<uint8_t>(std::floor((v + 1.0) * 127.5 + 0.5));
    }
    return out;
}

PipelineResult run_pipeline(const std::vector<PolarizedFrame>& frames,
                            const PipelineConfig& config) {
    std::vector<FramePair> pairs = pair_frames(frames);
    FramePair pair = pairs.front();

    PipelineResult result;
    if (config.align) pair = align_pair(pair, config.max_shift, &result.align_shift);

    ImageF h = gaussian_denoise(pair.i_h.pixels, config.sigma);
    ImageF v = gaussian_denoise(pair.i_v.pixels, config.sigma);
    result.paraph = paraph_image(h, v, config.floor);
    result.paraph_gray = to_grayscale(result.paraph);
    result.display = to_display(result.paraph_gray);
    result.diffuse = v;
    return result;
}

}  // namespace paraph
