#include "adsi/di.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace adsi {

namespace {

FeatureSet embed_corpora(const std::vector<Image>& corpus_a,
                         const std::vector<Image>& corpus_b,
                         const Embedder& embedder,
                         const std::function<Image(const Image&)>& transform) {
    if (corpus_a.empty() || corpus_b.empty()) {
        throw std::invalid_argument("di: both corpora must be non-empty");
    }
    auto embed_all = [&](const std::vector<Image>& corpus, Dataset dataset) {
        std::vector<FeatureVector> vectors;
        vectors.reserve(corpus.size());
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            FeatureVector v = embedder(transform(corpus[i]));
            v.source_dataset = dataset;
            if (v.source_id.empty()) {
                v.source_id = std::string(1, dataset_label(dataset)) + ":" +
                              std::to_string(i);
            }
            vectors.push_back(std::move(v));
        }
        return vectors;
    };
    return FeatureSet::from_datasets(embed_all(corpus_a, Dataset::a),
                                     embed_all(corpus_b, Dataset::b));
}

} // namespace

DistanceMatrix pairwise_distances(const FeatureSet& features) {
    const int n = features.size();
    const int dim = features.dimension();
    DistanceMatrix matrix;
    matrix.size = n;
    matrix.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto& a = features.vector(i).values;
        for (int j = i + 1; j < n; ++j) {
            const auto& b = features.vector(j).values;
            double sum = 0.0;
            for (int k = 0; k < dim; ++k) {
                const double d = a[k] - b[k];
                sum += d * d;
            }
            const double distance = std::sqrt(sum);
            matrix.at(i, j) = distance;
            matrix.at(j, i) = distance;
        }
    }
    return matrix;
}

DIReport domain_independence(const FeatureSet& features) {
    if (features.count_a() < 2 || features.count_b() < 2) {
        throw std::invalid_argument(
            "di: nearest-neighbor protocol needs at least 2 vectors per dataset");
    }
    const DistanceMatrix matrix = pairwise_distances(features);
    const int n = features.size();

    DIReport report;
    report.items.reserve(n);
    for (int i = 0; i < n; ++i) {
        NearestNeighbor nn;
        nn.index = i;
        nn.neighbor = -1;
        nn.distance = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = matrix.at(i, j);
            if (d < nn.distance) {
                nn.distance = d;
                nn.neighbor = j;
                nn.tie = false;
            } else if (d == nn.distance) {
                nn.tie = true;
            }
        }
        nn.cross = features.dataset(i) != features.dataset(nn.neighbor);
        if (nn.cross) {
            ++report.cross_count;
        } else {
            ++report.same_count;
        }
        if (nn.tie) ++report.tie_count;
        report.items.push_back(nn);
    }
    report.di = static_cast<double>(report.cross_count) /
                static_cast<double>(report.cross_count + report.same_count);
    return report;
}

SweepCurve beta_sweep(const std::vector<Image>& corpus_a,
                      const std::vector<Image>& corpus_b,
                      const std::vector<double>& betas, MaskKind mask_kind,
                      MaskTarget removal_target, const Embedder& embedder,
                      const std::string& embedder_id, int butterworth_order,
                      double epsilon) {
    if (corpus_a.empty() || corpus_b.empty()) {
        throw std::invalid_argument("sweep: both corpora must be non-empty");
    }
    if (betas.empty()) {
        throw std::invalid_argument("sweep: beta list is empty");
    }
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (betas[i] < 0.0 || betas[i] > 0.5) {
            throw std::invalid_argument("sweep: betas must lie in [0, 0.5]");
        }
        if (i > 0 && betas[i] <= betas[i - 1]) {
            throw std::invalid_argument("sweep: betas must be strictly increasing");
        }
    }
    if (mask_kind == MaskKind::adsi_attenuation) {
        throw std::invalid_argument("sweep: mask kind must be box, circle, or "
                                    "butterworth");
    }
    if (mask_kind == MaskKind::butterworth && betas.front() <= 0.0) {
        throw std::invalid_argument("sweep: butterworth removal needs beta > 0");
    }

    // Forward transforms are shared across betas.
    std::vector<SpectralImage> spectra;
    spectra.reserve(corpus_a.size() + corpus_b.size());
    for (const Image& image : corpus_a) spectra.push_back(forward_spectrum(image));
    for (const Image& image : corpus_b) spectra.push_back(forward_spectrum(image));
    const std::size_t count_a = corpus_a.size();

    SweepCurve curve;
    curve.mask_kind = mask_kind;
    curve.embedder_id = embedder_id;
    for (double beta : betas) {
        std::vector<FeatureVector> a;
        std::vector<FeatureVector> b;
        for (std::size_t i = 0; i < spectra.size(); ++i) {
            const SpectralImage& spectral = spectra[i];
            FrequencyMask mask;
            switch (mask_kind) {
            case MaskKind::box:
                mask = box_mask(spectral.height, spectral.width, beta);
                break;
            case MaskKind::circle:
                mask = circle_mask(spectral.height, spectral.width, beta);
                break;
            default:
                mask = adsi_mask(butterworth_mask(spectral.height, spectral.width,
                                                  beta, butterworth_order, epsilon),
                                 1.0);
                break;
            }
            const SpectralImage masked = apply_mask(spectral, mask, removal_target);
            FeatureVector v = embedder(inverse_spectrum(masked, true).image);
            const Dataset dataset = i < count_a ? Dataset::a : Dataset::b;
            v.source_dataset = dataset;
            v.source_id = std::string(1, dataset_label(dataset)) + ":" +
                          std::to_string(i < count_a ? i : i - count_a);
            (i < count_a ? a : b).push_back(std::move(v));
        }
        const DIReport report = domain_independence(
            FeatureSet::from_datasets(std::move(a), std::move(b)));
        curve.points.push_back({beta, report.di});
    }
    return curve;
}

std::string sweep_curve_csv(const SweepCurve& curve) {
    std::ostringstream out;
    out << "beta,di\n";
    char row[64];
    for (const SweepPoint& p : curve.points) {
        std::snprintf(row, sizeof(row), "%.17g,%.17g\n", p.beta, p.di);
        out << row;
    }
    return out.str();
}

AmplitudePhaseDI amplitude_phase_di(const std::vector<Image>& corpus_a,
                                    const std::vector<Image>& corpus_b,
                                    const Embedder& embedder) {
    auto amplitude_only = [](const Image& image) {
        SpectralImage spectral = forward_spectrum(image);
        std::fill(spectral.phase.begin(), spectral.phase.end(), 0.0);
        return inverse_spectrum(spectral, true).image;
    };
    auto phase_only = [](const Image& image) {
        SpectralImage spectral = forward_spectrum(image);
        std::fill(spectral.amplitude.begin(), spectral.amplitude.end(), 1.0);
        return inverse_spectrum(spectral, true).image;
    };
    AmplitudePhaseDI result;
    result.amplitude_only = domain_independence(
        embed_corpora(corpus_a, corpus_b, embedder, amplitude_only));
    result.phase_only = domain_independence(
        embed_corpora(corpus_a, corpus_b, embedder, phase_only));
    return result;
}

} // namespace adsi
