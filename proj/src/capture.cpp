#include "paraph/capture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paraph/rng.hpp"

namespace paraph {

namespace {

// Bilinear sample with edge clamping; exact at integer coordinates.
double sample_bilinear(const ImageF& img, double x, double y, int c) {
    x = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
    y = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    int x1 = std::min(x0 + 1, img.width() - 1);
    int y1 = std::min(y0 + 1, img.height() - 1);
    double fx = x - x0;
    double fy = y - y0;
    if (fx == 0.0 && fy == 0.0) return img.at(x0, y0, c);
    double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
    double bot = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
    return top * (1.0 - fy) + bot * fy;
}

}  // namespace

std::vector<PolarizedFrame> capture_sequence(const TRSField& field, const CaptureRig& rig,
                                             int n_frames) {
    if (n_frames < 2) throw std::invalid_argument("capture_sequence: need at least 2 frames");
    if (rig.bit_depth != 8 && rig.bit_depth != 16)
        throw std::invalid_argument("capture_sequence: bit_depth must be 8 or 16");
    if (rig.read_noise_sigma < 0.0 || rig.dark_floor < 0.0)
        throw std::invalid_argument("capture_sequence: negative noise parameters");

    int w = field.width();
    int h = field.height();
    int ch = field.channels();

    // The shutter measurement and leakage mix are linear in the polarization
    // state, so precompute one analytic measurement image per shutter state
    // and sample that under motion.
    ImageF measured[2] = {ImageF(w, h, ch), ImageF(w, h, ch)};
    for (int s = 0; s < 2; ++s) {
        TnlcState state = s == 0 ? TnlcState::Unpowered : TnlcState::Powered;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                for (int c = 0; c < ch; ++c) {
                    const TRSParams& trs = field.at(x, y, c);
                    double pass = shutter_measure(trs, state);
                    double blocked = trs.total() - pass;
                    measured[s].at(x, y, c) = pass + rig.tnlc_contrast * blocked;
                }
            }
        }
    }

    double maxcode = static_cast<double>((1 << rig.bit_depth) - 1);
    std::vector<PolarizedFrame> frames;
    frames.reserve(n_frames);

    for (int k = 0; k < n_frames; ++k) {
        PolarizedFrame frame;
        frame.frame_index = k;
        frame.tnlc_state = k % 2 == 0 ? TnlcState::Unpowered : TnlcState::Powered;
        frame.quantized = rig.quantize;
        frame.bit_depth = rig.bit_depth;
        frame.pixels = ImageF(w, h, ch);

        const ImageF& source = measured[k % 2];
        double shift_x = k * rig.motion_dx;
        double shift_y = k * rig.motion_dy;

        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                for (int c = 0; c < ch; ++c) {
                    double v = sample_bilinear(source, x - shift_x, y - shift_y, c);
                    v += rig.dark_floor;
                    if (rig.read_noise_sigma > 0.0) {
                        uint64_t hash = pixel_hash(
                            rig.rng_seed, RngStream::ReadNoise,
                            (static_cast<uint64_t>(k) << 32) | static_cast<uint64_t>(c),
                            static_cast<uint64_t>(y), static_cast<uint64_t>(x));
                        v += rig.read_noise_sigma * gaussian_from_hash(hash);
                    }
                    v = std::max(0.0, v);
                    if (rig.quantize) v = std::min(maxcode, std::round(v * maxcode)) / maxcode;
                    frame.pixels.at(x, y, c) = v;
                }
            }
        }
        frames.push_back(std::move(frame));
    }
    return frames;
}

}  // namespace paraph
