#pragma once

#include <string>

#include "paraph/scene.hpp"

namespace paraph {

// Per-medium knobs for the named scenes.
struct SceneSpec {
    std::string name = "live";  // live | lcd | glossy | matte
    int width = 352;
    int height = 288;
    double lcd_leakage = 0.01;
    // Displays leak backlight: the darkest emitted level is this fraction of
    // full brightness.
    double lcd_black_level = 0.15;
    double gloss_dop = 0.7;
    // Orientation of the gloss sheen; negative means "derive from the
    // illumination": a flat print reflects s-polarized light perpendicular to
    // the projected plane of incidence.
    double gloss_phi_deg = -1.0;
    double matte_residual_dop = 0.10;
    // Reproduction lowpass: prints and screens replayed through a webcam lose
    // fine detail relative to the live subject.
    double photo_blur_sigma = 1.5;
    FaceParams face{};
};

// Plain-camera photograph of a scene: per-pixel total intensity through an
// ideal unpolarized capture (half the incident total), clamped to [0, 1].
// This is the texture the attack media display.
ImageF photograph(const Scene& scene, const Illumination& illum);

// Named scene builder. "live" is the procedural head; the others present a
// photograph of that head on the respective medium. Throws ConfigError on an
// unknown name.
Scene make_canonical_scene(const SceneSpec& spec, const Illumination& illum, uint64_t seed);

}  // namespace paraph
