#include "adsi/masks.hpp"

#include <cmath>
#include <stdexcept>

namespace adsi {

namespace {

FrequencyMask make_mask(int height, int width, MaskKind kind, MaskParams params) {
    if (height < 2 || width < 2) {
        throw std::invalid_argument("mask: dimensions must be at least 2x2");
    }
    FrequencyMask mask;
    mask.height = height;
    mask.width = width;
    mask.kind = kind;
    mask.params = params;
    mask.weights.assign(static_cast<std::size_t>(height) * width, 0.0);
    return mask;
}

} // namespace

std::string to_string(MaskKind kind) {
    switch (kind) {
    case MaskKind::box: return "box";
    case MaskKind::circle: return "circle";
    case MaskKind::butterworth: return "butterworth";
    case MaskKind::adsi_attenuation: return "adsi";
    }
    return "unknown";
}

MaskKind mask_kind_from_string(const std::string& name) {
    if (name == "box") return MaskKind::box;
    if (name == "circle") return MaskKind::circle;
    if (name == "butterworth") return MaskKind::butterworth;
    if (name == "adsi") return MaskKind::adsi_attenuation;
    throw std::invalid_argument("mask: unknown kind '" + name + "'");
}

FrequencyCoord normalized_coord(int y, int x, int height, int width) {
    FrequencyCoord coord;
    coord.u = static_cast<double>(y - height / 2) / height;
    coord.v = static_cast<double>(x - width / 2) / width;
    coord.radius = std::hypot(coord.u, coord.v);
    return coord;
}

FrequencyMask box_mask(int height, int width, double beta) {
    if (beta < 0.0 || beta > 0.5) {
        throw std::invalid_argument("box mask: beta must lie in [0, 0.5]");
    }
    FrequencyMask mask = make_mask(height, width, MaskKind::box, {.beta = beta});
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const FrequencyCoord c = normalized_coord(y, x, height, width);
            const bool inside = std::abs(c.u) <= beta && std::abs(c.v) <= beta;
            mask.at(y, x) = inside ? 0.0 : 1.0;
        }
    }
    return mask;
}

FrequencyMask circle_mask(int height, int width, double beta) {
    if (beta < 0.0) {
        throw std::invalid_argument("circle mask: beta must be nonnegative");
    }
    FrequencyMask mask = make_mask(height, width, MaskKind::circle, {.beta = beta});
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const FrequencyCoord c = normalized_coord(y, x, height, width);
            mask.at(y, x) = c.radius <= beta ? 0.0 : 1.0;
        }
    }
    return mask;
}

FrequencyMask butterworth_mask(int height, int width, double beta, int order,
                               double epsilon) {
    if (beta <= 0.0 || beta > 0.5) {
        throw std::invalid_argument("butterworth mask: beta must lie in (0, 0.5]");
    }
    if (order < 1) {
        throw std::invalid_argument("butterworth mask: order must be at least 1");
    }
    if (epsilon <= 0.0) {
        throw std::invalid_argument("butterworth mask: epsilon must be positive");
    }
    FrequencyMask mask = make_mask(
        height, width, MaskKind::butterworth,
        {.beta = beta, .order = order, .epsilon = epsilon});
    const double cutoff = beta + epsilon;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const FrequencyCoord c = normalized_coord(y, x, height, width);
            mask.at(y, x) =
                1.0 / (1.0 + std::pow(c.radius / cutoff, 2.0 * order));
        }
    }
    return mask;
}

FrequencyMask adsi_mask(const FrequencyMask& butterworth, double alpha) {
    if (butterworth.kind != MaskKind::butterworth) {
        throw std::invalid_argument(
            "adsi mask: attenuation is defined over a butterworth mask");
    }
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("adsi mask: alpha must lie in [0, 1]");
    }
    FrequencyMask mask = butterworth;
    mask.kind = MaskKind::adsi_attenuation;
    mask.params.alpha = alpha;
    for (double& w : mask.weights) w = 1.0 - alpha * w;
    return mask;
}

} // namespace adsi
