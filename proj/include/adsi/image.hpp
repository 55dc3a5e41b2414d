#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adsi {

/// Planar floating-point raster. Channel c of a CxHxW image occupies
/// data()[c*H*W .. (c+1)*H*W), row-major. Loaded images hold samples in
/// [0,1]; intermediate results (unclamped reconstructions) may leave that
/// range until clamp01() is applied.
class Image {
public:
    Image() = default;
    Image(int channels, int height, int width, double fill = 0.0);

    /// Wraps an existing planar buffer; data.size() must equal C*H*W.
    static Image from_planes(int channels, int height, int width,
                             std::vector<double> data);

    int channels() const { return channels_; }
    int height() const { return height_; }
    int width() const { return width_; }
    bool empty() const { return data_.empty(); }
    std::size_t sample_count() const { return data_.size(); }

    double& at(int c, int y, int x) {
        return data_[plane_offset(c) + static_cast<std::size_t>(y) * width_ + x];
    }
    double at(int c, int y, int x) const {
        return data_[plane_offset(c) + static_cast<std::size_t>(y) * width_ + x];
    }

    std::span<double> plane(int c) {
        return {data_.data() + plane_offset(c), plane_size()};
    }
    std::span<const double> plane(int c) const {
        return {data_.data() + plane_offset(c), plane_size()};
    }

    std::span<double> samples() { return data_; }
    std::span<const double> samples() const { return data_; }

    void clamp01();

    /// Bilinear resize with half-pixel-centered sampling. Resizing to the
    /// current size reproduces the image exactly.
    Image resized_bilinear(int out_height, int out_width) const;

    /// Sum of squared samples over all channels.
    double energy() const;

    bool operator==(const Image&) const = default;

private:
    std::size_t plane_size() const {
        return static_cast<std::size_t>(height_) * width_;
    }
    std::size_t plane_offset(int c) const { return plane_size() * c; }

    int channels_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<double> data_;
};

/// Throws std::invalid_argument unless channels is 1 or 3 and both spatial
/// dimensions are at least 2.
void require_valid(const Image& image);

} // namespace adsi
