#pragma once

#include <variant>

#include "paraph/angle.hpp"

namespace paraph {

// Live skin: unpolarized diffuse body, horizontally polarized specular lobe,
// and a contour term that re-polarizes part of the diffuse light where the
// surface turns away from the camera.
struct Skin {
    double specular_strength = 0.25;
    double shininess = 12.0;
    double diffuse_dop_max = 0.5;
};

// Display panel: emits (does not reflect) vertically polarized light, with a
// small leakage fraction in the crossed orientation.
struct LcdEmitter {
    double leakage = 0.01;  // < 0.5
};

// Print behind a smooth gloss coat: unpolarized body plus a spatially uniform
// sheen polarized at one fixed orientation, independent of the printed
// content.
struct GlossyPrint {
    double gloss_dop = 0.7;
    Angle gloss_phi{90.0};
};

// Print on rough paper: body reflection with a small residual degree of
// polarization at a pseudo-random per-pixel orientation.
struct MattePrint {
    double residual_dop = 0.05;
};

struct Background {};

using Material = std::variant<Skin, LcdEmitter, GlossyPrint, MattePrint, Background>;

bool material_valid(const Material& m);

// Specular/gloss reflectance used by the energy bound; zero for materials
// without a polarized reflection term.
double material_specular_budget(const Material& m);

// Fraction of the illumination reflected by the gloss coat of GlossyPrint.
inline constexpr double kGlossReflectance = 0.5;

}  // namespace paraph
