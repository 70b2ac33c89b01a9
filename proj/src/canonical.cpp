#include "paraph/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "paraph/errors.hpp"
#include "paraph/pipeline.hpp"
#include "paraph/shading.hpp"

namespace paraph {

ImageF photograph(const Scene& scene, const Illumination& illum) {
    TRSField field = render_trs_field(scene, illum);
    ImageF photo(field.width(), field.height(), field.channels());
    for (size_t i = 0; i < photo.size(); ++i)
        photo.pixels()[i] = std::clamp(field.pixels()[i].total() / 2.0, 0.0, 1.0);
    return photo;
}

Scene make_canonical_scene(const SceneSpec& spec, const Illumination& illum, uint64_t seed) {
    if (spec.name == "live") return face_heightfield(spec.width, spec.height, spec.face, seed);

    Scene live = face_heightfield(spec.width, spec.height, spec.face, seed);
    ImageF photo = photograph(live, illum);
    if (spec.photo_blur_sigma > 0.0) {
        int radius = std::max(1, static_cast<int>(std::ceil(3.0 * spec.photo_blur_sigma)));
        photo = gaussian_blur(photo, spec.photo_blur_sigma, radius);
    }

    if (spec.name == "lcd") {
        ImageF emitted = photo;
        for (double& v : emitted.pixels())
            v = spec.lcd_black_level + (1.0 - spec.lcd_black_level) * v;
        return presentation_scene(emitted, LcdEmitter{spec.lcd_leakage}, live.face_roi, seed);
    }
    if (spec.name == "glossy") {
        // Specular sheen off a flat print is s-polarized: perpendicular to the
        // projected plane of incidence of the dominant light.
        Angle phi = spec.gloss_phi_deg >= 0.0
                        ? Angle{spec.gloss_phi_deg}
                        : vector_orientation(-illum.direction.y, illum.direction.x);
        return presentation_scene(photo, GlossyPrint{spec.gloss_dop, phi}, live.face_roi, seed);
    }
    if (spec.name == "matte") {
        return presentation_scene(photo, MattePrint{spec.matte_residual_dop}, live.face_roi, seed);
    }
    throw ConfigError("unknown scene name: " + spec.name);
}

}  // namespace paraph
