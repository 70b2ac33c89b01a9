#pragma once

#include <cstdint>

#include "paraph/image.hpp"
#include "paraph/material.hpp"
#include "paraph/vec3.hpp"

namespace paraph {

// Capture subject description: per-pixel surface normal (camera looks along
// -z, image x right, y down), material, and linear albedo (1 or 3 channels).
struct Scene {
    int width = 0;
    int height = 0;
    Image<Vec3> normals;          // unit length, z >= 0
    ImageF albedo;                // 1 or 3 channels
    std::vector<Material> materials;  // one per pixel, row-major
    Rect face_roi;
    uint64_t seed = 0;  // drives per-pixel stochastic material structure

    const Material& material_at(int x, int y) const {
        return materials[static_cast<size_t>(y) * width + x];
    }
    Material& material_at(int x, int y) {
        return materials[static_cast<size_t>(y) * width + x];
    }
};

struct Illumination {
    Vec3 direction{0.0, 0.0, 1.0};  // unit vector toward the light
    double intensity = 1.0;
    double ambient = 0.015;
    // Multiplier on the specular term left of the face centerline, modelling
    // a non-specular wall on that side of the subject.
    double left_wall_attenuation = 0.25;
};

// Knobs for the procedural head. Fractions are relative to image size.
struct FaceParams {
    double center_x_frac = 0.5;
    double center_y_frac = 0.5;
    double radius_x_frac = 0.30;
    double radius_y_frac = 0.42;
    double depth_frac = 0.33;      // dome height relative to min(w, h)
    double nose_amp_frac = 0.055;  // relative to dome height
    double brow_amp_frac = 0.035;
    double texture_amplitude = 0.03;
    double feature_contrast = 0.4;  // scales the dark facial feature marks
    Skin skin{};
};

// Procedural live-subject scene: a smooth convex head-shaped lobe with nose
// and brow ridges, skin material inside the face region, background outside.
// Normals on the flanks tilt horizontally and on top/chin vertically.
Scene face_heightfield(int width, int height, const FaceParams& params = {}, uint64_t seed = 0);

// Flat presentation-attack scene: correct texture (the rendered face image),
// flattened geometry, and the given medium's polarization signature at every
// pixel. The face region marks where the face appears within the displayed
// content. Only LcdEmitter, GlossyPrint and MattePrint are valid media.
Scene presentation_scene(const ImageF& rendered_face, const Material& medium, Rect face_roi,
                         uint64_t seed = 0);

}  // namespace paraph
