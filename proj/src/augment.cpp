#include "adsi/augment.hpp"

#include <cmath>
#include <stdexcept>

namespace adsi {

namespace {

// Table 5 semantics for each ablation variant.
struct VariantTraits {
    MaskTarget target = MaskTarget::both;
    bool butterworth_based = true; // box/circle removal otherwise
    bool per_channel_draw = false;
    bool binarize_alpha = false;   // keep-or-remove draw for box (amplitude)
};

VariantTraits traits_for(Variant variant) {
    switch (variant) {
    case Variant::adsi:
        return {MaskTarget::both, true, false, false};
    case Variant::box:
        return {MaskTarget::both, false, false, false};
    case Variant::box_amplitude:
        return {MaskTarget::amplitude, false, false, true};
    case Variant::circle:
        return {MaskTarget::both, false, false, false};
    case Variant::color:
        return {MaskTarget::both, true, true, false};
    case Variant::butterworth_amplitude:
        return {MaskTarget::amplitude, true, false, false};
    }
    throw std::invalid_argument("augment: unknown variant");
}

bool uses_circle(Variant variant) { return variant == Variant::circle; }

// Attenuation weights for one channel draw. Butterworth variants build
// 1 - alpha * butterworth; box/circle removal scales the removed region by
// 1 - alpha (weight = 1 - alpha * (1 - M_beta)).
FrequencyMask build_variant_mask(Variant variant, const ChannelDraw& draw,
                                 int height, int width, double epsilon) {
    const VariantTraits traits = traits_for(variant);
    if (traits.butterworth_based) {
        return adsi_mask(
            butterworth_mask(height, width, draw.beta, draw.order, epsilon),
            draw.alpha);
    }
    double alpha = draw.alpha;
    if (traits.binarize_alpha) alpha = alpha >= 0.5 ? 1.0 : 0.0;
    FrequencyMask mask = uses_circle(variant)
                             ? circle_mask(height, width, draw.beta)
                             : box_mask(height, width, draw.beta);
    for (double& w : mask.weights) w = 1.0 - alpha * (1.0 - w);
    return mask;
}

} // namespace

std::string to_string(Variant variant) {
    switch (variant) {
    case Variant::adsi: return "adsi";
    case Variant::box: return "box";
    case Variant::box_amplitude: return "box-amplitude";
    case Variant::circle: return "circle";
    case Variant::color: return "color";
    case Variant::butterworth_amplitude: return "butterworth-amplitude";
    }
    return "unknown";
}

Variant variant_from_string(const std::string& name) {
    if (name == "adsi") return Variant::adsi;
    if (name == "box") return Variant::box;
    if (name == "box-amplitude") return Variant::box_amplitude;
    if (name == "circle") return Variant::circle;
    if (name == "color") return Variant::color;
    if (name == "butterworth-amplitude") return Variant::butterworth_amplitude;
    throw std::invalid_argument("augment: unknown variant '" + name + "'");
}

std::string to_string(MaskTarget target) {
    switch (target) {
    case MaskTarget::amplitude: return "amplitude";
    case MaskTarget::phase: return "phase";
    case MaskTarget::both: return "both";
    }
    return "unknown";
}

MaskTarget mask_target_from_string(const std::string& name) {
    if (name == "amplitude") return MaskTarget::amplitude;
    if (name == "phase") return MaskTarget::phase;
    if (name == "both") return MaskTarget::both;
    throw std::invalid_argument("augment: unknown mask target '" + name + "'");
}

void AugmentConfig::validate() const {
    if (alpha_min < 0.0 || alpha_max > 1.0 || alpha_min > alpha_max) {
        throw std::invalid_argument(
            "augment config: alpha range must satisfy 0 <= min <= max <= 1");
    }
    const bool butterworth_based = traits_for(variant).butterworth_based;
    const double beta_cap = butterworth_based ? 0.4 : 0.5;
    if (beta_min < 0.0 || beta_min > beta_max || beta_max > beta_cap) {
        throw std::invalid_argument(
            "augment config: beta range must satisfy 0 <= min <= max <= " +
            std::to_string(beta_cap) + " for variant " + to_string(variant));
    }
    if (butterworth_based && beta_min <= 0.0) {
        throw std::invalid_argument(
            "augment config: butterworth-based variants need beta_min > 0");
    }
    if (orders.empty()) {
        throw std::invalid_argument("augment config: order set is empty");
    }
    for (int order : orders) {
        if (order < 1 || order > 3) {
            throw std::invalid_argument(
                "augment config: orders must come from {1, 2, 3}");
        }
    }
    if (epsilon <= 0.0) {
        throw std::invalid_argument("augment config: epsilon must be positive");
    }
}

ParamDraw sample_draw(const AugmentConfig& config, int channel_count,
                      ParamSampler& sampler) {
    config.validate();
    const int draws = traits_for(config.variant).per_channel_draw ? channel_count : 1;
    ParamDraw draw;
    draw.channels.reserve(draws);
    for (int i = 0; i < draws; ++i) {
        ChannelDraw d;
        d.alpha = sampler.uniform(config.alpha_min, config.alpha_max);
        d.beta = sampler.uniform(config.beta_min, config.beta_max);
        d.order = sampler.pick(config.orders);
        draw.channels.push_back(d);
    }
    return draw;
}

SpectralImage apply_mask(const SpectralImage& spectral, const FrequencyMask& mask,
                         MaskTarget target) {
    if (mask.height != spectral.height || mask.width != spectral.width) {
        throw std::invalid_argument("apply_mask: mask and spectrum shapes differ");
    }
    SpectralImage out = spectral;
    for (int c = 0; c < spectral.channels; ++c) {
        for (int y = 0; y < spectral.height; ++y) {
            const bool self_y = self_conjugate(y, spectral.height);
            for (int x = 0; x < spectral.width; ++x) {
                const double w = mask.at(y, x);
                const std::size_t i = spectral.index(c, y, x);
                if (target != MaskTarget::phase) out.amplitude[i] *= w;
                if (target != MaskTarget::amplitude &&
                    !(self_y && self_conjugate(x, spectral.width))) {
                    out.phase[i] *= w;
                }
            }
        }
    }
    return out;
}

std::pair<Image, AugmentRecord> augment_image(const Image& image,
                                              const AugmentConfig& config,
                                              const ParamDraw& draw) {
    require_valid(image);
    config.validate();
    const VariantTraits traits = traits_for(config.variant);
    const std::size_t expected_draws =
        traits.per_channel_draw ? static_cast<std::size_t>(image.channels()) : 1;
    if (draw.channels.size() != expected_draws) {
        throw std::invalid_argument("augment: draw has wrong number of channels");
    }

    AugmentRecord record;
    record.variant = config.variant;
    record.draws = draw.channels;

    SpectralImage spectral = forward_spectrum(image);
    if (traits.per_channel_draw) {
        // Channels are masked independently; slice, mask, reassemble.
        const std::size_t plane = spectral.plane_size();
        for (int c = 0; c < spectral.channels; ++c) {
            SpectralImage one;
            one.channels = 1;
            one.height = spectral.height;
            one.width = spectral.width;
            one.amplitude.assign(spectral.amplitude.begin() + plane * c,
                                 spectral.amplitude.begin() + plane * (c + 1));
            one.phase.assign(spectral.phase.begin() + plane * c,
                             spectral.phase.begin() + plane * (c + 1));
            const FrequencyMask mask =
                build_variant_mask(config.variant, draw.channels[c],
                                   spectral.height, spectral.width, config.epsilon);
            one = apply_mask(one, mask, traits.target);
            std::copy(one.amplitude.begin(), one.amplitude.end(),
                      spectral.amplitude.begin() + plane * c);
            std::copy(one.phase.begin(), one.phase.end(),
                      spectral.phase.begin() + plane * c);
        }
    } else {
        const FrequencyMask mask =
            build_variant_mask(config.variant, draw.channels.front(),
                               spectral.height, spectral.width, config.epsilon);
        spectral = apply_mask(spectral, mask, traits.target);
    }

    Reconstruction reconstruction = inverse_spectrum(spectral, config.clamp);
    record.imag_residue = reconstruction.imag_residue;
    return {std::move(reconstruction.image), std::move(record)};
}

std::pair<Image, AugmentRecord> augment_image(const Image& image,
                                              const AugmentConfig& config,
                                              ParamSampler& sampler) {
    const ParamDraw draw = sample_draw(config, image.channels(), sampler);
    return augment_image(image, config, draw);
}

} // namespace adsi
