#pragma once

#include <cstdint>
#include <vector>

#include "paraph/shading.hpp"

namespace paraph {

// Camera plus switchable-analyzer rig model.
struct CaptureRig {
    double frame_rate = 30.0;      // informational; outputs carry frame indices
    double read_noise_sigma = 0.0; // additive Gaussian, linear units
    double dark_floor = 0.0;       // constant pedestal added to every pixel
    int bit_depth = 8;             // 8 or 16
    double motion_dx = 0.0;        // scene translation per frame, pixels
    double motion_dy = 0.0;
    double tnlc_contrast = 0.0;    // fraction of the blocked component leaking through
    uint64_t rng_seed = 0;
    // When false, frames keep exact linear intensities instead of being
    // snapped to the bit_depth code lattice.
    bool quantize = true;
};

// One capture through one shutter state. Values live in [0, 1] linear scale;
// after quantization each value times (2^bit_depth - 1) is an integer code.
struct PolarizedFrame {
    ImageF pixels;
    TnlcState tnlc_state = TnlcState::Unpowered;
    int frame_index = 0;
    bool quantized = false;
    int bit_depth = 8;
};

// Simulates an alternating-shutter burst: frame k is captured in state
// unpowered (k even, horizontal component) or powered (k odd, vertical
// component) of the field translated by k * (motion_dx, motion_dy) with
// bilinear edge-clamped sampling, plus analyzer leakage, dark pedestal and
// seeded Gaussian read noise, clamped to >= 0 and quantized per the rig.
// Noise depends only on (rng_seed, frame_index, x, y, channel).
std::vector<PolarizedFrame> capture_sequence(const TRSField& field, const CaptureRig& rig,
                                             int n_frames);

}  // namespace paraph
