#include "adsi/embed.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace adsi {

namespace {

constexpr int kResize = 64;
constexpr int kDctBlock = 8;

// Lowest kDctBlock x kDctBlock coefficients of the orthonormal type-II DCT
// of one kResize x kResize plane, computed separably.
void dct_low_block(std::span<const double> plane, std::vector<double>& out) {
    static const auto basis = [] {
        std::array<std::array<double, kResize>, kDctBlock> table{};
        for (int u = 0; u < kDctBlock; ++u) {
            const double scale =
                u == 0 ? std::sqrt(1.0 / kResize) : std::sqrt(2.0 / kResize);
            for (int x = 0; x < kResize; ++x) {
                table[u][x] = scale * std::cos((2 * x + 1) * u *
                                               std::numbers::pi / (2.0 * kResize));
            }
        }
        return table;
    }();

    // Rows first: partial[u][y] = sum_x plane(y, x) * basis[u][x].
    std::array<std::array<double, kResize>, kDctBlock> partial{};
    for (int v = 0; v < kDctBlock; ++v) {
        for (int y = 0; y < kResize; ++y) {
            double sum = 0.0;
            for (int x = 0; x < kResize; ++x) {
                sum += plane[static_cast<std::size_t>(y) * kResize + x] * basis[v][x];
            }
            partial[v][y] = sum;
        }
    }
    for (int u = 0; u < kDctBlock; ++u) {
        for (int v = 0; v < kDctBlock; ++v) {
            double sum = 0.0;
            for (int y = 0; y < kResize; ++y) sum += basis[u][y] * partial[v][y];
            out.push_back(sum);
        }
    }
}

double parse_cell(const std::string& cell, std::size_t row) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        throw std::runtime_error("features: non-numeric cell '" + cell +
                                 "' at row " + std::to_string(row));
    }
    while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed]))) {
        ++consumed;
    }
    if (consumed != cell.size() || !std::isfinite(value)) {
        throw std::runtime_error("features: non-numeric cell '" + cell +
                                 "' at row " + std::to_string(row));
    }
    return value;
}

} // namespace

FeatureSet FeatureSet::from_datasets(std::vector<FeatureVector> a,
                                     std::vector<FeatureVector> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument(
            "feature set: each dataset needs at least 2 vectors");
    }
    FeatureSet set;
    set.count_a_ = static_cast<int>(a.size());
    set.dimension_ = static_cast<int>(a.front().values.size());
    set.vectors_ = std::move(a);
    for (auto& v : b) set.vectors_.push_back(std::move(v));
    for (std::size_t i = 0; i < set.vectors_.size(); ++i) {
        auto& v = set.vectors_[i];
        v.source_dataset = static_cast<int>(i) < set.count_a_ ? Dataset::a : Dataset::b;
        if (static_cast<int>(v.values.size()) != set.dimension_) {
            throw std::invalid_argument("feature set: inconsistent dimensions (" +
                                        std::to_string(v.values.size()) + " vs " +
                                        std::to_string(set.dimension_) + ")");
        }
        for (double x : v.values) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("feature set: non-finite value");
            }
        }
    }
    if (set.dimension_ == 0) {
        throw std::invalid_argument("feature set: zero-dimensional vectors");
    }
    return set;
}

FeatureSet FeatureSet::with_swapped_labels() const {
    std::vector<FeatureVector> a;
    std::vector<FeatureVector> b;
    for (const auto& v : vectors_) {
        (v.source_dataset == Dataset::b ? a : b).push_back(v);
    }
    return from_datasets(std::move(a), std::move(b));
}

FeatureVector builtin_embed(const Image& image) {
    require_valid(image);
    const Image resized = image.resized_bilinear(kResize, kResize);

    FeatureVector feature;
    feature.values.reserve(static_cast<std::size_t>(image.channels()) *
                           (kDctBlock * kDctBlock + 2));
    for (int c = 0; c < resized.channels(); ++c) {
        const auto plane = resized.plane(c);
        dct_low_block(plane, feature.values);
        double mean = 0.0;
        for (double v : plane) mean += v;
        mean /= static_cast<double>(plane.size());
        double var = 0.0;
        for (double v : plane) var += (v - mean) * (v - mean);
        var /= static_cast<double>(plane.size());
        feature.values.push_back(mean);
        feature.values.push_back(std::sqrt(var));
    }
    return feature;
}

std::vector<FeatureVector> load_features(const std::string& path, Dataset dataset,
                                         bool leading_id_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("features: cannot open '" + path + "'");

    std::vector<FeatureVector> vectors;
    std::string line;
    std::size_t row = 0;
    std::size_t expected_columns = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        FeatureVector v;
        v.source_dataset = dataset;
        std::stringstream cells(line);
        std::string cell;
        bool first = true;
        while (std::getline(cells, cell, ',')) {
            if (first && leading_id_column) {
                v.source_id = cell;
                first = false;
                continue;
            }
            first = false;
            v.values.push_back(parse_cell(cell, row));
        }
        if (v.source_id.empty()) v.source_id = path + ":" + std::to_string(row);
        if (v.values.empty()) {
            throw std::runtime_error("features: row " + std::to_string(row) +
                                     " has no numeric columns");
        }
        if (expected_columns == 0) {
            expected_columns = v.values.size();
        } else if (v.values.size() != expected_columns) {
            throw std::runtime_error(
                "features: ragged row " + std::to_string(row) + " (" +
                std::to_string(v.values.size()) + " columns, expected " +
                std::to_string(expected_columns) + ")");
        }
        vectors.push_back(std::move(v));
    }
    if (vectors.empty()) {
        throw std::runtime_error("features: '" + path + "' contains no rows");
    }
    return vectors;
}

} // namespace adsi
