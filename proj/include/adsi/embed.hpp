#pragma once

#include <string>
#include <vector>

#include "adsi/image.hpp"

namespace adsi {

enum class Dataset { a, b };

inline char dataset_label(Dataset d) { return d == Dataset::a ? 'A' : 'B'; }

struct FeatureVector {
    std::vector<double> values;
    Dataset source_dataset = Dataset::a;
    std::string source_id;
};

/// Vectors from two datasets, dimension-checked at construction. Dataset A
/// vectors come first, then dataset B.
class FeatureSet {
public:
    /// Requires at least 2 vectors per dataset, a uniform dimension, and
    /// finite values; throws std::invalid_argument otherwise.
    static FeatureSet from_datasets(std::vector<FeatureVector> a,
                                    std::vector<FeatureVector> b);

    int size() const { return static_cast<int>(vectors_.size()); }
    int dimension() const { return dimension_; }
    int count_a() const { return count_a_; }
    int count_b() const { return size() - count_a_; }
    const FeatureVector& vector(int i) const { return vectors_[i]; }
    Dataset dataset(int i) const { return vectors_[i].source_dataset; }

    /// Same vectors with the A/B labels exchanged.
    FeatureSet with_swapped_labels() const;

private:
    std::vector<FeatureVector> vectors_;
    int dimension_ = 0;
    int count_a_ = 0;
};

/// Deterministic image embedding: the image is resized to 64x64 bilinearly
/// and each channel contributes its lowest 8x8 block of orthonormal type-II
/// DCT coefficients plus the channel mean and standard deviation, giving
/// 66 values per channel (198 for RGB).
FeatureVector builtin_embed(const Image& image);

inline constexpr const char* kBuiltinEmbedderId = "builtin";

/// Loads one feature vector per CSV row (comma-separated floats; optional
/// leading id column). Throws std::runtime_error naming the offending row
/// on ragged or non-numeric input.
std::vector<FeatureVector> load_features(const std::string& path, Dataset dataset,
                                         bool leading_id_column = false);

} // namespace adsi
