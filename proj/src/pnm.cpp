#include "paraph/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "paraph/errors.hpp"

namespace paraph {

namespace {

struct Reader {
    std::istream& in;
    size_t offset = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << "pnm parse error at byte " << offset << ": " << what;
        throw IoError(msg.str());
    }

    int get() {
        int c = in.get();
        if (c != EOF) ++offset;
        return c;
    }

    // Skips whitespace and '#' comments that run to end of line.
    void skip_space(bool required) {
        int skipped = 0;
        while (true) {
            int c = in.peek();
            if (c == '#') {
                while (c != EOF && c != '\n') c = get();
                ++skipped;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
                ++skipped;
            } else {
                break;
            }
        }
        if (required && skipped == 0) fail("expected whitespace");
    }

    int read_int(const char* name) {
        int c = in.peek();
        if (c < '0' || c > '9') fail(std::string("expected integer ") + name);
        long value = 0;
        while (c >= '0' && c <= '9') {
            value = value * 10 + (c - '0');
            if (value > 1 << 30) fail(std::string("oversized ") + name);
            get();
            c = in.peek();
        }
        return static_cast<int>(value);
    }
};

}  // namespace

PnmImage read_pnm(std::istream& in) {
    Reader r{in};
    int m0 = r.get();
    int m1 = r.get();
    if (m0 != 'P' || (m1 != '5' && m1 != '6')) r.fail("unsupported magic (expected P5 or P6)");

    PnmImage img;
    img.channels = m1 == '5' ? 1 : 3;
    r.skip_space(true);
    img.width = r.read_int("width");
    r.skip_space(true);
    img.height = r.read_int("height");
    r.skip_space(true);
    img.maxval = r.read_int("maxval");
    if (img.maxval != 255 && img.maxval != 65535) r.fail("unsupported maxval (255 or 65535)");
    if (img.width <= 0 || img.height <= 0) r.fail("non-positive dimensions");

    // Exactly one whitespace byte separates the header from the payload.
    int sep = r.get();
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') r.fail("missing raster separator");

    size_t samples = static_cast<size_t>(img.width) * img.height * img.channels;
    img.codes.resize(samples);
    bool wide = img.maxval == 65535;
    for (size_t i = 0; i < samples; ++i) {
        int hi = r.get();
        if (hi == EOF) r.fail("truncated payload");
        if (wide) {
            int lo = r.get();
            if (lo == EOF) r.fail("truncated payload");
            img.codes[i] = static_cast<uint16_t>((hi << 8) | lo);
        } else {
            img.codes[i] = static_cast<uint16_t>(hi);
        }
    }
    if (in.peek() != EOF) r.fail("trailing data after raster");
    return img;
}

PnmImage read_pnm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    return read_pnm(in);
}

void write_pnm(std::ostream& out, const PnmImage& img) {
    if (img.channels != 1 && img.channels != 3)
        throw IoError("write_pnm: channels must be 1 or 3");
    if (img.maxval != 255 && img.maxval != 65535)
        throw IoError("write_pnm: maxval must be 255 or 65535");
    out << (img.channels == 1 ? "P5" : "P6") << '\n'
        << img.width << ' ' << img.height << '\n'
        << img.maxval << '\n';
    bool wide = img.maxval == 65535;
    for (uint16_t code : img.codes) {
        if (wide) out.put(static_cast<char>(code >> 8));
        out.put(static_cast<char>(code & 0xff));
    }
    if (!out) throw IoError("write_pnm: stream failure");
}

void write_pnm_file(const std::string& path, const PnmImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_pnm(out, img);
}

PnmImage from_linear(const ImageF& img, int maxval) {
    PnmImage out;
    out.width = img.width();
    out.height = img.height();
    out.channels = img.channels();
    out.maxval = maxval;
    out.codes.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        double v = std::clamp(img.pixels()[i], 0.0, 1.0);
        out.codes[i] = static_cast<uint16_t>(std::lround(v * maxval));
    }
    return out;
}

ImageF to_linear(const PnmImage& img) {
    ImageF out(img.width, img.height, img.channels);
    for (size_t i = 0; i < out.size(); ++i)
        out.pixels()[i] = static_cast<double>(img.codes[i]) / img.maxval;
    return out;
}

PnmImage from_display(const ImageU8& img) {
    PnmImage out;
    out.width = img.width();
    out.height = img.height();
    out.channels = img.channels();
    out.maxval = 255;
    out.codes.assign(img.pixels().begin(), img.pixels().end());
    return out;
}

PnmImage encode_signed16(const ImageF& img) {
    PnmImage out;
    out.width = img.width();
    out.height = img.height();
    out.channels = img.channels();
    out.maxval = 65535;
    out.codes.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        double v = std::clamp(img.pixels()[i], -1.0, 1.0);
        out.codes[i] = static_cast<uint16_t>(std::lround((v + 1.0) * 32767.5));
    }
    return out;
}

ImageF decode_signed16(const PnmImage& img) {
    if (img.maxval != 65535) throw IoError("decode_signed16: expected 16-bit codes");
    ImageF out(img.width, img.height, img.channels);
    for (size_t i = 0; i < out.size(); ++i)
        out.pixels()[i] = static_cast<double>(img.codes[i]) / 32767.5 - 1.0;
    return out;
}

}  // namespace paraph
