#include "paraph/fit.hpp"

#include <array>
#include <cmath>

#include "paraph/errors.hpp"

namespace paraph {

namespace {

// Gaussian elimination with partial pivoting on a 3x3 system. Returns false
// when the matrix is numerically singular.
bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3>& b) {
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return false;

    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12 * scale) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            double f = a[r][col] / a[col][col];
            for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int col = 2; col >= 0; --col) {
        double v = b[col];
        for (int c = col + 1; c < 3; ++c) v -= a[col][c] * b[c];
        b[col] = v / a[col][col];
    }
    return true;
}

}  // namespace

TrsFit trs_fit(std::span<const AngleSample> samples) {
    if (samples.size() < 3) throw FitError("trs_fit: at least 3 samples required");

    // Normal equations for I(t) = c0 + c1 cos(2t) + c2 sin(2t).
    std::array<std::array<double, 3>, 3> ata{};
    std::array<double, 3> atb{};
    for (const AngleSample& s : samples) {
        double t = 2.0 * s.angle.radians();
        std::array<double, 3> row{1.0, std::cos(t), std::sin(t)};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * s.intensity;
        }
    }
    if (!solve3(ata, atb))
        throw FitError("trs_fit: degenerate angle set (singular normal equations)");

    double mean = atb[0];
    double amplitude = std::hypot(atb[1], atb[2]);

    TrsFit result;
    if (amplitude == 0.0) {
        result.params = TRSParams{mean, mean, Angle{0.0}};  // phi tie-break
    } else {
        Angle phi{0.5 * std::atan2(atb[2], atb[1]) * kRadToDeg};
        result.params = TRSParams{mean - amplitude, mean + amplitude, phi.normalized()};
    }
    // Noisy data routinely undershoots zero; keep the state physical.
    if (result.params.i_min < 0.0) {
        result.params.i_min = 0.0;
        result.clamped = true;
    }
    if (result.params.i_max < 0.0) {
        result.params.i_max = 0.0;
        result.clamped = true;
    }
    return result;
}

}  // namespace paraph
