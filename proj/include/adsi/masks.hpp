#pragma once

#include <string>
#include <vector>

namespace adsi {

enum class MaskKind { box, circle, butterworth, adsi_attenuation };

std::string to_string(MaskKind kind);
MaskKind mask_kind_from_string(const std::string& name);

/// Parameters a mask was built from; fields not used by a kind stay at
/// their defaults.
struct MaskParams {
    double beta = 0.0;
    double alpha = 0.0;
    int order = 0;
    double epsilon = 0.0;
};

/// H x W plane of weights in [0,1] on the centered frequency grid,
/// multiplied into spectra bin by bin. Centro-symmetric by construction:
/// every kind depends only on |u|, |v|, or the radius.
struct FrequencyMask {
    int height = 0;
    int width = 0;
    MaskKind kind = MaskKind::box;
    MaskParams params;
    std::vector<double> weights;

    double at(int y, int x) const {
        return weights[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int y, int x) {
        return weights[static_cast<std::size_t>(y) * width + x];
    }
};

/// Dimensionless coordinates of a centered bin: u, v in [-0.5, 0.5) and
/// the radius sqrt(u^2 + v^2).
struct FrequencyCoord {
    double u = 0.0;
    double v = 0.0;
    double radius = 0.0;
};

FrequencyCoord normalized_coord(int y, int x, int height, int width);

inline constexpr double kDefaultEpsilon = 1e-8;

/// Binary low-frequency removal: 0 where |u| <= beta and |v| <= beta,
/// 1 elsewhere. beta is the half-extent of the removed square as a fraction
/// of the grid; beta in [0, 0.5], boundary bins fall inside the box.
FrequencyMask box_mask(int height, int width, double beta);

/// Binary removal of the disc radius <= beta around DC; beta >= 0.
FrequencyMask circle_mask(int height, int width, double beta);

/// Smooth low-pass response 1 / (1 + (r / (beta + epsilon))^(2*order)).
/// Close to 1 at DC, 0.5 at r = beta, decaying at high radius. Requires
/// beta in (0, 0.5], order >= 1, epsilon > 0.
FrequencyMask butterworth_mask(int height, int width, double beta, int order,
                               double epsilon = kDefaultEpsilon);

/// Attenuation mask 1 - alpha * butterworth weight: keeps high frequencies
/// and scales low frequencies down by at most alpha. alpha in [0, 1].
FrequencyMask adsi_mask(const FrequencyMask& butterworth, double alpha);

} // namespace adsi
