#include "paraph/material.hpp"

#include <variant>

namespace paraph {

namespace {

bool ratio_ok(double r) { return r >= 0.0 && r <= 1.0; }

}  // namespace

bool material_valid(const Material& m) {
    return std::visit(
        [](const auto& mat) -> bool {
            using T = std::decay_t<decltype(mat)>;
            if constexpr (std::is_same_v<T, Skin>) {
                return ratio_ok(mat.specular_strength) && mat.shininess >= 0.0 &&
                       ratio_ok(mat.diffuse_dop_max);
            } else if constexpr (std::is_same_v<T, LcdEmitter>) {
                return mat.leakage >= 0.0 && mat.leakage < 0.5;
            } else if constexpr (std::is_same_v<T, GlossyPrint>) {
                return ratio_ok(mat.gloss_dop);
            } else if constexpr (std::is_same_v<T, MattePrint>) {
                return ratio_ok(mat.residual_dop);
            } else {
                return true;  // Background
            }
        },
        m);
}

double material_specular_budget(const Material& m) {
    if (const Skin* skin = std::get_if<Skin>(&m)) return skin->specular_strength;
    if (std::holds_alternative<GlossyPrint>(m)) return kGlossReflectance;
    return 0.0;
}

}  // namespace paraph
