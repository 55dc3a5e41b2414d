#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "adsi/image.hpp"
#include "adsi/masks.hpp"
#include "adsi/spectral.hpp"

namespace adsi {

enum class Variant {
    adsi,
    box,
    box_amplitude,
    circle,
    color,
    butterworth_amplitude,
};

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& name);

enum class MaskTarget { amplitude, phase, both };

std::string to_string(MaskTarget target);
MaskTarget mask_target_from_string(const std::string& name);

/// Sampling ranges and reproducibility knobs for one augmentation run.
/// The seed fully determines every draw.
struct AugmentConfig {
    Variant variant = Variant::adsi;
    double beta_min = 0.01;
    double beta_max = 0.4;
    double alpha_min = 0.0;
    double alpha_max = 1.0;
    std::vector<int> orders = {1, 2, 3};
    double epsilon = kDefaultEpsilon;
    std::uint64_t seed = 0;
    bool clamp = true;

    /// Throws std::invalid_argument on out-of-range fields. Butterworth-based
    /// variants cap beta at 0.4; box/circle removal may extend to 0.5.
    void validate() const;
};

struct ChannelDraw {
    double alpha = 0.0;
    double beta = 0.0;
    int order = 1;
};

/// Parameters drawn for one image: a single entry shared by all channels,
/// or one entry per channel for the color variant.
struct ParamDraw {
    std::vector<ChannelDraw> channels;
};

/// What augment_image actually did to one image.
struct AugmentRecord {
    Variant variant = Variant::adsi;
    std::vector<ChannelDraw> draws;
    double imag_residue = 0.0;
};

/// Deterministic uniform sampler over mt19937_64. Draw order is part of the
/// reproducibility contract: callers advance the stream only through this
/// class.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = (rng_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    int pick(const std::vector<int>& values) {
        return values[rng_() % values.size()];
    }

private:
    std::mt19937_64 rng_;
};

/// Draws (alpha, beta, order) for one image: one triple for shared-draw
/// variants, channel_count triples for the color variant.
ParamDraw sample_draw(const AugmentConfig& config, int channel_count,
                      ParamSampler& sampler);

/// Multiplies the selected plane(s) by the mask bin by bin. Phase values are
/// scaled in place (shrunk toward 0), not re-wrapped. Self-conjugate bins
/// (DC, Nyquist) keep their phase: real inputs force it to 0 or pi there, and
/// scaling pi off the real axis would break the Hermitian symmetry the
/// inverse transform relies on.
SpectralImage apply_mask(const SpectralImage& spectral, const FrequencyMask& mask,
                         MaskTarget target);

/// Runs one image through the configured variant with the given draw.
std::pair<Image, AugmentRecord> augment_image(const Image& image,
                                              const AugmentConfig& config,
                                              const ParamDraw& draw);

/// Convenience overload that draws parameters from the sampler first.
std::pair<Image, AugmentRecord> augment_image(const Image& image,
                                              const AugmentConfig& config,
                                              ParamSampler& sampler);

} // namespace adsi
