#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paraph/image.hpp"

namespace paraph {

// Binary portable graymap/pixmap ("P5"/"P6"), maxval 255 or 65535 (16-bit
// samples big-endian). Codes are stored as-is so writing a file read from
// disk reproduces it byte for byte (the writer emits the canonical header).
struct PnmImage {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 = P5, 3 = P6
    int maxval = 255;  // 255 or 65535
    std::vector<uint16_t> codes;  // row-major, interleaved

    uint16_t at(int x, int y, int c = 0) const {
        return codes[(static_cast<size_t>(y) * width + x) * channels + c];
    }
};

PnmImage read_pnm(std::istream& in);
PnmImage read_pnm_file(const std::string& path);

void write_pnm(std::ostream& out, const PnmImage& img);
void write_pnm_file(const std::string& path, const PnmImage& img);

// Conversions between code images and linear [0, 1] images.
PnmImage from_linear(const ImageF& img, int maxval);
ImageF to_linear(const PnmImage& img);

PnmImage from_display(const ImageU8& img);

// Signed [-1, +1] values stored as 16-bit offset codes: v -> round((v + 1) *
// 32767.5). Byte-exact on every platform, unlike floating-point text.
PnmImage encode_signed16(const ImageF& img);
ImageF decode_signed16(const PnmImage& img);

}  // namespace paraph
