#include "paraph/shading.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "paraph/rng.hpp"

namespace paraph {

namespace {

TRSParams shade_skin(const Skin& skin, const Vec3& n, double albedo, const Illumination& illum,
                     bool left_of_centerline) {
    Vec3 view{0.0, 0.0, 1.0};
    Vec3 half = normalized(illum.direction + view);

    double ndl = std::max(0.0, dot(n, illum.direction));
    double diffuse = albedo * ndl * illum.intensity + illum.ambient;

    double ndh = std::max(0.0, dot(n, half));
    double side = left_of_centerline ? illum.left_wall_attenuation : 1.0;
    double specular =
        skin.specular_strength * std::pow(ndh, skin.shininess) * illum.intensity * side;

    // Where the surface turns away from the camera, part of the diffuse exit
    // light picks up polarization along the occluding contour: vertical on
    // the flanks, horizontal on top and chin.
    double contour_fraction = std::clamp(skin.diffuse_dop_max * (1.0 - n.z) * (1.0 - n.z), 0.0, 1.0);
    Angle contour_phi = (vector_orientation(n.x, n.y) + Angle{90.0}).normalized();

    TRSParams result = TRSParams::unpolarized((1.0 - contour_fraction) * diffuse);
    result = trs_superpose(result, TRSParams::pure(contour_fraction * diffuse, contour_phi));
    result = trs_superpose(result, TRSParams::pure(specular, Angle{90.0}));
    return result;
}

TRSParams shade_lcd(const LcdEmitter& lcd, double albedo, const Illumination& illum) {
    double emitted = albedo * illum.intensity;
    return TRSParams{lcd.leakage * emitted, (1.0 - lcd.leakage) * emitted, Angle{0.0}};
}

TRSParams shade_glossy(const GlossyPrint& print, const Vec3& n, double albedo,
                       const Illumination& illum) {
    double ndl = std::max(0.0, dot(n, illum.direction));
    double body = albedo * ndl * illum.intensity;
    double gloss = kGlossReflectance * illum.intensity;
    TRSParams sheen{gloss * (1.0 - print.gloss_dop) / 2.0, gloss * (1.0 + print.gloss_dop) / 2.0,
                    print.gloss_phi.normalized()};
    return trs_superpose(TRSParams::unpolarized(body), sheen);
}

TRSParams shade_matte(const MattePrint& print, const Vec3& n, double albedo,
                      const Illumination& illum, uint64_t seed, int x, int y) {
    double ndl = std::max(0.0, dot(n, illum.direction));
    double body = albedo * ndl * illum.intensity;
    double dop = print.residual_dop *
                 to_unit(pixel_hash(seed, RngStream::MatteDop, static_cast<uint64_t>(x),
                                    static_cast<uint64_t>(y)));
    Angle phi{180.0 * to_unit(pixel_hash(seed, RngStream::MatteOrientation,
                                         static_cast<uint64_t>(x), static_cast<uint64_t>(y)))};
    return trs_superpose(TRSParams::unpolarized(body * (1.0 - dop)),
                         TRSParams::pure(body * dop, phi));
}

}  // namespace

void shade_pixel(const Scene& scene, int x, int y, const Illumination& illum,
                 TRSParams* out_per_channel) {
    const Vec3& n = scene.normals.at(x, y);
    int channels = scene.albedo.channels();
    int centerline = scene.face_roi.w > 0 ? scene.face_roi.x + scene.face_roi.w / 2
                                          : scene.width / 2;
    bool left = x < centerline;

    for (int c = 0; c < channels; ++c) {
        double albedo = scene.albedo.at(x, y, c);
        out_per_channel[c] = std::visit(
            [&](const auto& mat) -> TRSParams {
                using T = std::decay_t<decltype(mat)>;
                if constexpr (std::is_same_v<T, Skin>) {
                    return shade_skin(mat, n, albedo, illum, left);
                } else if constexpr (std::is_same_v<T, LcdEmitter>) {
                    return shade_lcd(mat, albedo, illum);
                } else if constexpr (std::is_same_v<T, GlossyPrint>) {
                    return shade_glossy(mat, n, albedo, illum);
                } else if constexpr (std::is_same_v<T, MattePrint>) {
                    return shade_matte(mat, n, albedo, illum, scene.seed, x, y);
                } else {
                    return TRSParams::unpolarized(illum.ambient);
                }
            },
            scene.material_at(x, y));
    }
}

TRSField render_trs_field(const Scene& scene, const Illumination& illum) {
    int channels = scene.albedo.channels();
    TRSField field(scene.width, scene.height, channels);
    std::vector<TRSParams> px(channels);
    for (int y = 0; y < scene.height; ++y) {
        for (int x = 0; x < scene.width; ++x) {
            shade_pixel(scene, x, y, illum, px.data());
            for (int c = 0; c < channels; ++c) field.at(x, y, c) = px[c];
        }
    }
    return field;
}

ImageF field_intensity(const TRSField& field, Angle analyzer) {
    ImageF out(field.width(), field.height(), field.channels());
    for (int y = 0; y < field.height(); ++y)
        for (int x = 0; x < field.width(); ++x)
            for (int c = 0; c < field.channels(); ++c)
                out.at(x, y, c) = trs_intensity(field.at(x, y, c), analyzer);
    return out;
}

ImageF field_dop(const TRSField& field) {
    ImageF out(field.width(), field.height(), 1);
    for (int y = 0; y < field.height(); ++y) {
        for (int x = 0; x < field.width(); ++x) {
            double sum = 0.0;
            for (int c = 0; c < field.channels(); ++c)
                sum += degree_of_polarization(field.at(x, y, c));
            out.at(x, y) = sum / field.channels();
        }
    }
    return out;
}

}  // namespace paraph
