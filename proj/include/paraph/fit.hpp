#pragma once

#include <span>

#include "paraph/trs.hpp"

namespace paraph {

struct AngleSample {
    Angle angle;
    double intensity = 0.0;
};

struct TrsFit {
    TRSParams params;
    // Set when the unconstrained least squares produced a slightly negative
    // i_min (typical with noisy data) that was clamped back to zero.
    bool clamped = false;
};

// Least-squares estimate of the transmitted radiance sinusoid from intensity
// samples at known analyzer angles. Fits
//   I(t) = c0 + c1 cos(2t) + c2 sin(2t)
// and converts to TRSParams. Requires at least three samples whose angles
// make the normal equations nonsingular; with exactly three well-posed
// noiseless samples the recovery is exact. Throws FitError on degenerate
// angle sets.
TrsFit trs_fit(std::span<const AngleSample> samples);

}  // namespace paraph
