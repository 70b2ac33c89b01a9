#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace paraph {

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool contains(int px, int py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
    bool inside(int image_w, int image_h) const {
        return x >= 0 && y >= 0 && w >= 0 && h >= 0 && x + w <= image_w && y + h <= image_h;
    }
    long long area() const { return static_cast<long long>(w) * h; }
};

// Dense row-major raster with interleaved channels.
template <typename T>
class Image {
  public:
    Image() = default;
    Image(int width, int height, int channels = 1, T fill = T{})
        : width_(width),
          height_(height),
          channels_(channels),
          data_(static_cast<size_t>(width) * height * channels, fill) {
        assert(width >= 0 && height >= 0 && channels >= 1);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
    const T& at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

    std::vector<T>& pixels() { return data_; }
    const std::vector<T>& pixels() const { return data_; }

    bool same_shape(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
    }

  private:
    size_t index(int x, int y, int c) const {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_ && c >= 0 && c < channels_);
        return (static_cast<size_t>(y) * width_ + x) * channels_ + c;
    }

    int width_ = 0;
    int height_ = 0;
    int channels_ = 1;
    std::vector<T> data_;
};

using ImageF = Image<double>;
using ImageU8 = Image<uint8_t>;

}  // namespace paraph
