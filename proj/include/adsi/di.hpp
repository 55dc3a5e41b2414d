#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adsi/augment.hpp"
#include "adsi/embed.hpp"
#include "adsi/image.hpp"
#include "adsi/masks.hpp"

namespace adsi {

/// Symmetric pairwise Euclidean distances with a zero diagonal; row/column
/// order follows the FeatureSet (dataset A first).
struct DistanceMatrix {
    int size = 0;
    std::vector<double> values;

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * size + j];
    }
    double& at(int i, int j) {
        return values[static_cast<std::size_t>(i) * size + j];
    }
};

DistanceMatrix pairwise_distances(const FeatureSet& features);

struct NearestNeighbor {
    int index = 0;
    int neighbor = 0;
    double distance = 0.0;
    bool cross = false; // neighbor belongs to the other dataset
    bool tie = false;   // another vector sits at exactly the same distance
};

/// Domain Independence: the fraction of vectors whose nearest neighbor
/// (self excluded, ties to the lowest index) comes from the other dataset.
struct DIReport {
    double di = 0.0;
    int cross_count = 0; // M
    int same_count = 0;  // N
    int tie_count = 0;
    std::vector<NearestNeighbor> items;

    int total() const { return cross_count + same_count; }
};

DIReport domain_independence(const FeatureSet& features);

using Embedder = std::function<FeatureVector(const Image&)>;

struct SweepPoint {
    double beta = 0.0;
    double di = 0.0;
};

/// Ordered (beta, DI) pairs from one removal sweep.
struct SweepCurve {
    std::vector<SweepPoint> points;
    MaskKind mask_kind = MaskKind::box;
    std::string embedder_id;
};

/// For each beta, removes low frequencies from every image of both corpora
/// (box/circle: binary removal; butterworth: the alpha=1 attenuation form,
/// which needs beta > 0), embeds the reconstructions, and scores DI.
/// Betas must be strictly increasing within [0, 0.5].
SweepCurve beta_sweep(const std::vector<Image>& corpus_a,
                      const std::vector<Image>& corpus_b,
                      const std::vector<double>& betas, MaskKind mask_kind,
                      MaskTarget removal_target, const Embedder& embedder,
                      const std::string& embedder_id = kBuiltinEmbedderId,
                      int butterworth_order = 2,
                      double epsilon = kDefaultEpsilon);

/// "beta,di" rows, one per sweep point.
std::string sweep_curve_csv(const SweepCurve& curve);

struct AmplitudePhaseDI {
    DIReport amplitude_only; // reconstruction from amplitude with phase zeroed
    DIReport phase_only;     // reconstruction from phase with unit amplitude
};

AmplitudePhaseDI amplitude_phase_di(const std::vector<Image>& corpus_a,
                                    const std::vector<Image>& corpus_b,
                                    const Embedder& embedder);

} // namespace adsi
