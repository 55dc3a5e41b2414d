// Shared fixtures and independent oracles for the test suites. Oracles are
// deliberately brute-force and share no code with the library paths they
// check.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "adsi/embed.hpp"
#include "adsi/image.hpp"

namespace testsupport {

inline adsi::Image random_image(std::uint64_t seed, int channels, int height,
                                int width) {
    std::mt19937_64 rng(seed);
    adsi::Image image(channels, height, width);
    for (double& v : image.samples()) {
        v = (rng() >> 11) * 0x1.0p-53;
    }
    return image;
}

// Direct O((HW)^2) DFT of one plane, raw (uncentered) bin order. Only for
// small planes.
inline std::vector<std::complex<double>> naive_dft(std::span<const double> plane,
                                                   int height, int width) {
    std::vector<std::complex<double>> out(plane.size());
    for (int m = 0; m < height; ++m) {
        for (int n = 0; n < width; ++n) {
            std::complex<double> sum = 0.0;
            for (int h = 0; h < height; ++h) {
                for (int w = 0; w < width; ++w) {
                    const double angle =
                        -2.0 * std::numbers::pi *
                        (static_cast<double>(h) * m / height +
                         static_cast<double>(w) * n / width);
                    sum += plane[static_cast<std::size_t>(h) * width + w] *
                           std::complex<double>(std::cos(angle), std::sin(angle));
                }
            }
            out[static_cast<std::size_t>(m) * width + n] = sum;
        }
    }
    return out;
}

// Direct-sum orthonormal type-II DCT coefficient (u, v) of one square plane.
inline double naive_dct_coefficient(std::span<const double> plane, int size,
                                    int u, int v) {
    const double au = u == 0 ? std::sqrt(1.0 / size) : std::sqrt(2.0 / size);
    const double av = v == 0 ? std::sqrt(1.0 / size) : std::sqrt(2.0 / size);
    double sum = 0.0;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            sum += plane[static_cast<std::size_t>(y) * size + x] *
                   std::cos((2 * y + 1) * u * std::numbers::pi / (2.0 * size)) *
                   std::cos((2 * x + 1) * v * std::numbers::pi / (2.0 * size));
        }
    }
    return au * av * sum;
}

struct BruteForceDI {
    int cross = 0;
    int same = 0;
    std::vector<int> neighbors;
    double di() const { return static_cast<double>(cross) / (cross + same); }
};

// Independent nearest-neighbor count on squared distances (no sqrt, no
// distance matrix), ties to the lowest index.
inline BruteForceDI brute_force_di(const std::vector<std::vector<double>>& a,
                                   const std::vector<std::vector<double>>& b) {
    std::vector<const std::vector<double>*> all;
    std::vector<bool> from_a;
    for (const auto& v : a) {
        all.push_back(&v);
        from_a.push_back(true);
    }
    for (const auto& v : b) {
        all.push_back(&v);
        from_a.push_back(false);
    }
    BruteForceDI result;
    for (std::size_t i = 0; i < all.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = i;
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (j == i) continue;
            double sq = 0.0;
            for (std::size_t k = 0; k < all[i]->size(); ++k) {
                const double d = (*all[i])[k] - (*all[j])[k];
                sq += d * d;
            }
            if (sq < best) {
                best = sq;
                best_j = j;
            }
        }
        if (from_a[i] != from_a[best_j]) {
            ++result.cross;
        } else {
            ++result.same;
        }
        result.neighbors.push_back(static_cast<int>(best_j));
    }
    return result;
}

inline std::vector<adsi::FeatureVector> wrap_vectors(
    const std::vector<std::vector<double>>& values, adsi::Dataset dataset) {
    std::vector<adsi::FeatureVector> vectors;
    for (const auto& v : values) {
        adsi::FeatureVector f;
        f.values = v;
        f.source_dataset = dataset;
        vectors.push_back(std::move(f));
    }
    return vectors;
}

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("adsi_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string str(const std::string& name = "") const {
        return name.empty() ? path_.string() : (path_ / name).string();
    }

private:
    std::filesystem::path path_;
};

// The synthetic two-domain pair: both corpora share smooth base content and
// per-image fine detail; corpus B additionally carries a strong smooth tint
// with a common direction. Low-frequency removal strips the tint and the
// shared base, leaving the per-image detail that pairs each B image with its
// A twin.
struct TintedPair {
    std::vector<adsi::Image> corpus_a;
    std::vector<adsi::Image> corpus_b;
};

inline TintedPair make_tinted_pair(std::uint64_t seed, int count, int size = 64) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) {
        return lo + ((rng() >> 11) * 0x1.0p-53) * (hi - lo);
    };
    TintedPair pair;
    for (int i = 0; i < count; ++i) {
        adsi::Image base(3, size, size);
        const double phase_y = uniform(0.0, 2.0 * std::numbers::pi);
        const double phase_x = uniform(0.0, 2.0 * std::numbers::pi);
        for (int c = 0; c < 3; ++c) {
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    const double smooth =
                        0.5 +
                        0.08 * std::sin(2.0 * std::numbers::pi * y / size + phase_y) +
                        0.08 * std::cos(2.0 * std::numbers::pi * x / size + phase_x);
                    const double detail = 0.05 * (uniform(0.0, 1.0) - 0.5);
                    base.at(c, y, x) = smooth + detail;
                }
            }
        }
        base.clamp01();
        pair.corpus_a.push_back(base);

        // Warm tint with per-image variation, confined to very low
        // frequencies (linear gradient plus constant).
        adsi::Image tinted = base;
        const double gradient = uniform(-0.05, 0.05);
        const double strength[3] = {0.18 + uniform(-0.03, 0.03),
                                    uniform(-0.03, 0.03),
                                    -0.18 + uniform(-0.03, 0.03)};
        for (int c = 0; c < 3; ++c) {
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    const double ramp =
                        gradient * (static_cast<double>(y) + x) / (2.0 * size);
                    tinted.at(c, y, x) += strength[c] + ramp;
                }
            }
        }
        tinted.clamp01();
        pair.corpus_b.push_back(tinted);
    }
    return pair;
}

} // namespace testsupport
