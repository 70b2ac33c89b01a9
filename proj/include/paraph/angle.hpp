#pragma once

#include <cmath>

namespace paraph {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

// Angle in degrees measured from vertical: 0 = vertical, 90 = horizontal.
// Polarization orientations are periodic with 180 degrees.
struct Angle {
    double degrees = 0.0;

    double radians() const { return degrees * kDegToRad; }

    // Normalized into [0, 180).
    Angle normalized() const {
        double d = std::fmod(degrees, 180.0);
        if (d < 0.0) d += 180.0;
        if (d == 180.0) d = 0.0;  // fmod can land on -0.0 + 180
        return Angle{d};
    }
};

inline Angle operator+(Angle a, Angle b) { return Angle{a.degrees + b.degrees}; }
inline Angle operator-(Angle a, Angle b) { return Angle{a.degrees - b.degrees}; }

// Smallest separation between two orientations, in [0, 90].
inline double orientation_distance_deg(Angle a, Angle b) {
    double d = (a - b).normalized().degrees;
    return d > 90.0 ? 180.0 - d : d;
}

// Orientation of an image-plane vector (x right, y down), measured from
// vertical. The zero vector maps to 0.
inline Angle vector_orientation(double vx, double vy) {
    if (vx == 0.0 && vy == 0.0) return Angle{0.0};
    return Angle{std::atan2(vx, vy) * kRadToDeg}.normalized();
}

}  // namespace paraph
