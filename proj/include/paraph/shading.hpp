#pragma once

#include "paraph/scene.hpp"
#include "paraph/trs.hpp"

namespace paraph {

// Per-pixel-per-channel polarization states for a whole scene.
using TRSField = Image<TRSParams>;

// Polarization state of the light one pixel sends toward the camera, per
// albedo channel. Material-dispatched; components combine by superposition.
void shade_pixel(const Scene& scene, int x, int y, const Illumination& illum,
                 TRSParams* out_per_channel);

// shade_pixel applied over the grid. Deterministic for fixed scene and
// illumination (per-pixel stochastic structure is driven by scene.seed).
TRSField render_trs_field(const Scene& scene, const Illumination& illum);

// Analytic measurement image: per-pixel intensity through an analyzer at the
// given orientation.
ImageF field_intensity(const TRSField& field, Angle analyzer);

// Per-pixel degree of linear polarization (channel mean for color fields).
ImageF field_dop(const TRSField& field);

}  // namespace paraph
