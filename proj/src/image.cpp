#include "adsi/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adsi {

Image::Image(int channels, int height, int width, double fill)
    : channels_(channels), height_(height), width_(width),
      data_(static_cast<std::size_t>(channels) * height * width, fill) {
    require_valid(*this);
}

Image Image::from_planes(int channels, int height, int width,
                         std::vector<double> data) {
    if (channels <= 0 || height <= 0 || width <= 0 ||
        data.size() != static_cast<std::size_t>(channels) * height * width) {
        throw std::invalid_argument("image: plane buffer size does not match "
                                    "channels*height*width");
    }
    Image image;
    image.channels_ = channels;
    image.height_ = height;
    image.width_ = width;
    image.data_ = std::move(data);
    require_valid(image);
    return image;
}

void Image::clamp01() {
    for (double& v : data_) v = std::clamp(v, 0.0, 1.0);
}

Image Image::resized_bilinear(int out_height, int out_width) const {
    require_valid(*this);
    if (out_height < 2 || out_width < 2) {
        throw std::invalid_argument("image: resize target must be at least 2x2");
    }
    Image out(channels_, out_height, out_width);
    const double scale_y = static_cast<double>(height_) / out_height;
    const double scale_x = static_cast<double>(width_) / out_width;
    for (int c = 0; c < channels_; ++c) {
        for (int y = 0; y < out_height; ++y) {
            double sy = (y + 0.5) * scale_y - 0.5;
            sy = std::clamp(sy, 0.0, static_cast<double>(height_ - 1));
            const int y0 = static_cast<int>(sy);
            const int y1 = std::min(y0 + 1, height_ - 1);
            const double fy = sy - y0;
            for (int x = 0; x < out_width; ++x) {
                double sx = (x + 0.5) * scale_x - 0.5;
                sx = std::clamp(sx, 0.0, static_cast<double>(width_ - 1));
                const int x0 = static_cast<int>(sx);
                const int x1 = std::min(x0 + 1, width_ - 1);
                const double fx = sx - x0;
                const double top = at(c, y0, x0) * (1.0 - fx) + at(c, y0, x1) * fx;
                const double bot = at(c, y1, x0) * (1.0 - fx) + at(c, y1, x1) * fx;
                out.at(c, y, x) = top * (1.0 - fy) + bot * fy;
            }
        }
    }
    return out;
}

double Image::energy() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return sum;
}

void require_valid(const Image& image) {
    if (image.channels() != 1 && image.channels() != 3) {
        throw std::invalid_argument("image: expected 1 or 3 channels, got " +
                                    std::to_string(image.channels()));
    }
    if (image.height() < 2 || image.width() < 2) {
        throw std::invalid_argument("image: both dimensions must be at least 2");
    }
}

} // namespace adsi
