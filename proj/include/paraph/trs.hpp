#pragma once

#include <cmath>
#include <stdexcept>

#include "paraph/angle.hpp"

namespace paraph {

// Partial linear polarization state of light at one pixel. Rotating a linear
// analyzer in front of the source traces the measured intensity
//
//   I(t) = i_min + (i_max - i_min) * cos^2(t - phi)
//
// between i_min (analyzer crossed with phi) and i_max (analyzer at phi).
// i_min + i_max is the total intensity; all values are linear radiometric
// units, no gamma.
struct TRSParams {
    double i_min = 0.0;
    double i_max = 0.0;
    Angle phi;  // orientation of maximum transmission

    static TRSParams unpolarized(double total) {
        return TRSParams{total / 2.0, total / 2.0, Angle{0.0}};
    }
    static TRSParams pure(double total, Angle orientation) {
        return TRSParams{0.0, total, orientation.normalized()};
    }

    double total() const { return i_min + i_max; }
    bool valid() const {
        return std::isfinite(i_min) && std::isfinite(i_max) && i_min >= 0.0 && i_max >= i_min;
    }
};

// Linear Stokes components: s0 total intensity, s1 the 0/90 degree balance,
// s2 the 45/135 degree balance. Valid states satisfy sqrt(s1^2+s2^2) <= s0.
struct LinearStokes {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

inline LinearStokes operator+(const LinearStokes& a, const LinearStokes& b) {
    return LinearStokes{a.s0 + b.s0, a.s1 + b.s1, a.s2 + b.s2};
}

inline LinearStokes operator*(double k, const LinearStokes& s) {
    return LinearStokes{k * s.s0, k * s.s1, k * s.s2};
}

// Switchable analyzer element: unpowered rotates linear polarization by 90
// degrees, powered passes it unchanged.
enum class TnlcState { Unpowered, Powered };

// Intensity of purely polarized light transmitted through a linear polarizer
// at relative angle theta.
inline double malus_transmission(double i0, Angle theta) {
    if (!(i0 >= 0.0)) throw std::domain_error("malus_transmission: negative intensity");
    double c = std::cos(theta.radians());
    return i0 * c * c;
}

// Expected transmission of unpolarized light through a linear polarizer.
inline double unpolarized_transmission(double i0) {
    if (!(i0 >= 0.0)) throw std::domain_error("unpolarized_transmission: negative intensity");
    return 0.5 * i0;
}

// Measured intensity through an analyzer at the given orientation.
inline double trs_intensity(const TRSParams& trs, Angle analyzer) {
    double c = std::cos((analyzer - trs.phi).radians());
    return trs.i_min + (trs.i_max - trs.i_min) * c * c;
}

// (i_max - i_min) / (i_max + i_min); zero-intensity states count as
// unpolarized.
inline double degree_of_polarization(const TRSParams& trs) {
    double total = trs.i_min + trs.i_max;
    if (total <= 0.0) return 0.0;
    return (trs.i_max - trs.i_min) / total;
}

inline LinearStokes trs_to_stokes(const TRSParams& trs) {
    double p = trs.i_max - trs.i_min;
    double two_phi = 2.0 * trs.phi.radians();
    return LinearStokes{trs.i_max + trs.i_min, p * std::cos(two_phi), p * std::sin(two_phi)};
}

inline TRSParams stokes_to_trs(const LinearStokes& s) {
    double p = std::hypot(s.s1, s.s2);
    if (p > s.s0 * (1.0 + 1e-9))
        throw std::domain_error("stokes_to_trs: polarized component exceeds total intensity");
    p = std::min(p, s.s0);
    if (p == 0.0) return TRSParams{s.s0 / 2.0, s.s0 / 2.0, Angle{0.0}};  // phi tie-break
    Angle phi{0.5 * std::atan2(s.s2, s.s1) * kRadToDeg};
    return TRSParams{(s.s0 - p) / 2.0, (s.s0 + p) / 2.0, phi.normalized()};
}

// Superposition of two independent partially polarized beams. Additive in
// Stokes space, so measurement is linear: the intensity of the sum through
// any analyzer equals the sum of the individual intensities.
inline TRSParams trs_superpose(const TRSParams& a, const TRSParams& b) {
    return stokes_to_trs(trs_to_stokes(a) + trs_to_stokes(b));
}

// Powered element is the identity; unpowered rotates the orientation by 90
// degrees (mod 180). Applying the unpowered transform twice is the identity.
inline TRSParams tnlc_transform(const TRSParams& trs, TnlcState state) {
    if (state == TnlcState::Powered) return trs;
    return TRSParams{trs.i_min, trs.i_max, (trs.phi + Angle{90.0}).normalized()};
}

// Switchable element followed by a fixed vertical polarizer: the unpowered
// state measures the horizontal component of the incident light, the powered
// state the vertical component.
inline double shutter_measure(const TRSParams& trs, TnlcState state) {
    return trs_intensity(tnlc_transform(trs, state), Angle{0.0});
}

}  // namespace paraph
