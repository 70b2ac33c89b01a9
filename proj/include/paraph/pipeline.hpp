#pragma once

#include <array>
#include <vector>

#include "paraph/capture.hpp"
#include "paraph/image.hpp"

namespace paraph {

// One horizontal/vertical measurement pair.
struct FramePair {
    PolarizedFrame i_h;  // unpowered shutter
    PolarizedFrame i_v;  // powered shutter
};

// 5x5 normalized Gaussian taps (weights sum to 1, symmetric under 90 degree
// rotation and reflection).
struct GaussianKernel5x5 {
    double sigma = 1.0;
    std::array<double, 25> weights{};

    double at(int dx, int dy) const { return weights[(dy + 2) * 5 + (dx + 2)]; }
};

GaussianKernel5x5 make_gaussian_kernel5(double sigma);

// Pairs each unpowered frame with the immediately following powered frame.
// A trailing unpaired frame is dropped. Throws PipelineError when the list is
// too short, starts powered, or does not alternate.
std::vector<FramePair> pair_frames(const std::vector<PolarizedFrame>& frames);

// Translates i_v by the integer shift within +/-max_shift minimizing the sum
// of absolute differences against i_h. max_shift 0 returns the pair as-is.
// The chosen (dx, dy) is reported through shift_out when given.
FramePair align_pair(const FramePair& pair, int max_shift,
                     std::array<int, 2>* shift_out = nullptr);

// Separable Gaussian convolution with edge replication and a truncated,
// renormalized kernel of the given radius.
ImageF gaussian_blur(const ImageF& img, double sigma, int radius);

// Separable 5x5 Gaussian convolution with edge replication.
ImageF gaussian_denoise(const ImageF& frame, double sigma);

// Normalized per-pixel difference (h - v) / max(h + v, floor). With floor 0
// the 0/0 pixel is defined as 0. Output values always lie in [-1, +1].
ImageF paraph_image(const ImageF& i_h, const ImageF& i_v, double floor);

// Unweighted channel mean (identity on single-channel input).
ImageF to_grayscale(const ImageF& img);

// Maps [-1, +1] to display codes: v -> round-half-up((v + 1) * 127.5).
ImageU8 to_display(const ImageF& img);

struct PipelineConfig {
    double sigma = 1.0;        // denoise Gaussian sigma
    double floor = 0.0;        // division guard, linear frame units
    bool align = false;
    int max_shift = 2;
};

struct PipelineResult {
    ImageF paraph;          // per-channel normalized difference
    ImageF paraph_gray;
    ImageU8 display;
    ImageF diffuse;         // denoised vertical-component frame
    std::array<int, 2> align_shift{0, 0};
};

// Full chain on the first frame pair: pair, optional align, denoise both,
// normalized difference per channel, grayscale reduction, display mapping.
PipelineResult run_pipeline(const std::vector<PolarizedFrame>& frames,
                            const PipelineConfig& config);

}  // namespace paraph
