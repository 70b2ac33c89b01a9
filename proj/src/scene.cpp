#include "paraph/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paraph/rng.hpp"

namespace paraph {

namespace {

// Smooth seeded value noise: random lattice values, bilinear interpolation.
double value_noise(uint64_t seed, double x, double y, double cell) {
    double gx = x / cell;
    double gy = y / cell;
    int x0 = static_cast<int>(std::floor(gx));
    int y0 = static_cast<int>(std::floor(gy));
    double fx = gx - x0;
    double fy = gy - y0;
    auto lattice = [&](int ix, int iy) {
        uint64_t h = pixel_hash(seed, RngStream::Texture, static_cast<uint64_t>(ix + 0x8000),
                                static_cast<uint64_t>(iy + 0x8000), static_cast<uint64_t>(cell));
        return 2.0 * to_unit(h) - 1.0;
    };
    double top = lattice(x0, y0) * (1.0 - fx) + lattice(x0 + 1, y0) * fx;
    double bot = lattice(x0, y0 + 1) * (1.0 - fx) + lattice(x0 + 1, y0 + 1) * fx;
    return top * (1.0 - fy) + bot * fy;
}

double gauss2(double u, double su, double v, double sv) {
    return std::exp(-0.5 * (u * u) / (su * su) - 0.5 * (v * v) / (sv * sv));
}

struct HeadGeometry {
    double cx, cy, rx, ry, depth, nose_amp, brow_amp;

    // Height of the head surface above the image plane, defined everywhere.
    double height(double x, double y) const {
        double u = (x - cx) / rx;
        double v = (y - cy) / ry;
        double r2 = u * u + v * v;
        if (r2 >= 1.0) return 0.0;
        double dome = depth * std::sqrt(1.0 - r2);
        // Ridges are well inside the dome; their tails vanish near the rim.
        double nose = nose_amp * gauss2(u, 0.13, v - 0.10, 0.35);
        double brow_window = std::exp(-0.5 * std::pow(u / 0.40, 4.0));
        double brow = brow_amp * std::exp(-0.5 * std::pow((v + 0.34) / 0.10, 2.0)) * brow_window;
        return dome + nose + brow;
    }

    bool inside(double x, double y) const {
        double u = (x - cx) / rx;
        double v = (y - cy) / ry;
        return u * u + v * v < 1.0;
    }
};

}  // namespace

Scene face_heightfield(int width, int height, const FaceParams& params, uint64_t seed) {
    if (width < 64 || height < 64)
        throw std::invalid_argument("face_heightfield: dimensions must be at least 64x64");

    HeadGeometry geo;
    geo.cx = params.center_x_frac * width;
    geo.cy = params.center_y_frac * height;
    geo.rx = params.radius_x_frac * width;
    geo.ry = params.radius_y_frac * height;
    geo.depth = params.depth_frac * std::min(width, height);
    geo.nose_amp = params.nose_amp_frac * geo.depth;
    geo.brow_amp = params.brow_amp_frac * geo.depth;

    Scene scene;
    scene.width = width;
    scene.height = height;
    scene.seed = seed;
    scene.normals = Image<Vec3>(width, height, 1, Vec3{0.0, 0.0, 1.0});
    scene.albedo = ImageF(width, height, 3);
    scene.materials.assign(static_cast<size_t>(width) * height, Background{});

    int roi_x = std::max(0, static_cast<int>(std::floor(geo.cx - geo.rx)));
    int roi_y = std::max(0, static_cast<int>(std::floor(geo.cy - geo.ry)));
    int roi_x1 = std::min(width, static_cast<int>(std::ceil(geo.cx + geo.rx)));
    int roi_y1 = std::min(height, static_cast<int>(std::ceil(geo.cy + geo.ry)));
    scene.face_roi = Rect{roi_x, roi_y, roi_x1 - roi_x, roi_y1 - roi_y};

    const double base[3] = {0.72, 0.56, 0.45};  // skin tone, linear
    const double background_albedo = 0.30;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double u = (x - geo.cx) / geo.rx;
            double v = (y - geo.cy) / geo.ry;

            if (geo.inside(x, y)) {
                double gx = (geo.height(x + 1.0, y) - geo.height(x - 1.0, y)) * 0.5;
                double gy = (geo.height(x, y + 1.0) - geo.height(x, y - 1.0)) * 0.5;
                scene.normals.at(x, y) = normalized(Vec3{-gx, -gy, 1.0});
                scene.material_at(x, y) = params.skin;

                double tex = 0.7 * value_noise(seed, x, y, 24.0) +
                             0.3 * value_noise(seed, x, y, 8.0);
                // Darker facial features give the texture face-like structure.
                double brows = 0.50 * (gauss2(u - 0.33, 0.14, v + 0.30, 0.05) +
                                       gauss2(u + 0.33, 0.14, v + 0.30, 0.05));
                double eyes = 0.55 * (gauss2(u - 0.33, 0.08, v + 0.18, 0.06) +
                                      gauss2(u + 0.33, 0.08, v + 0.18, 0.06));
                double mouth = 0.35 * gauss2(u, 0.20, v - 0.52, 0.06);
                double darkening =
                    params.feature_contrast * std::min(0.9, brows + eyes + mouth);
                for (int c = 0; c < 3; ++c) {
                    double a = base[c] * (1.0 + params.texture_amplitude * tex) * (1.0 - darkening);
                    scene.albedo.at(x, y, c) = std::clamp(a, 0.02, 1.0);
                }
            } else {
                for (int c = 0; c < 3; ++c) scene.albedo.at(x, y, c) = background_albedo;
            }
        }
    }
    return scene;
}

Scene presentation_scene(const ImageF& rendered_face, const Material& medium, Rect face_roi,
                         uint64_t seed) {
    if (std::holds_alternative<Skin>(medium) || std::holds_alternative<Background>(medium))
        throw std::invalid_argument("presentation_scene: medium must be a presentation material");
    if (rendered_face.empty())
        throw std::invalid_argument("presentation_scene: empty face image");

    Scene scene;
    scene.width = rendered_face.width();
    scene.height = rendered_face.height();
    scene.seed = seed;
    scene.normals = Image<Vec3>(scene.width, scene.height, 1, Vec3{0.0, 0.0, 1.0});
    scene.albedo = rendered_face;
    scene.materials.assign(static_cast<size_t>(scene.width) * scene.height, medium);
    scene.face_roi = face_roi;
    return scene;
}

}  // namespace paraph
