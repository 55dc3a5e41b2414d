#include "adsi/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace adsi {

namespace {

// The FFTW planner is not thread-safe; plan creation and destruction are
// serialized. Execution runs outside the lock.
std::mutex planner_mutex;

void dft_2d(std::complex<double>* data, int height, int width, int sign) {
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_plan plan;
    {
        std::scoped_lock lock(planner_mutex);
        plan = fftw_plan_dft_2d(height, width, raw, raw, sign, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw std::runtime_error("spectral: FFT planning failed");
    fftw_execute(plan);
    {
        std::scoped_lock lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
}

void validate_spectral(const SpectralImage& s) {
    if (s.channels <= 0 || s.height < 2 || s.width < 2) {
        throw std::invalid_argument("spectral: dimensions must be at least 2x2");
    }
    const std::size_t expected =
        static_cast<std::size_t>(s.channels) * s.height * s.width;
    if (s.amplitude.size() != expected || s.phase.size() != expected) {
        throw std::invalid_argument(
            "spectral: amplitude/phase plane sizes do not match dimensions");
    }
}

} // namespace

SpectralImage forward_spectrum(const Image& image) {
    require_valid(image);
    const int h = image.height();
    const int w = image.width();
    const int shift_y = h / 2;
    const int shift_x = w / 2;

    SpectralImage out;
    out.channels = image.channels();
    out.height = h;
    out.width = w;
    out.amplitude.resize(out.plane_size() * out.channels);
    out.phase.resize(out.plane_size() * out.channels);

    std::vector<std::complex<double>> buffer(out.plane_size());
    for (int c = 0; c < image.channels(); ++c) {
        const auto plane = image.plane(c);
        for (std::size_t i = 0; i < plane.size(); ++i) buffer[i] = plane[i];
        dft_2d(buffer.data(), h, w, FFTW_FORWARD);
        for (int y = 0; y < h; ++y) {
            const int cy = (y + shift_y) % h;
            for (int x = 0; x < w; ++x) {
                const int cx = (x + shift_x) % w;
                const std::complex<double> v =
                    buffer[static_cast<std::size_t>(y) * w + x];
                const std::size_t dst = out.index(c, cy, cx);
                out.amplitude[dst] = std::abs(v);
                double angle = std::arg(v);
                if (angle <= -std::numbers::pi) angle = std::numbers::pi;
                out.phase[dst] = angle;
            }
        }
    }
    return out;
}

Reconstruction inverse_spectrum(const SpectralImage& spectral, bool clamp) {
    validate_spectral(spectral);
    const int h = spectral.height;
    const int w = spectral.width;
    const int shift_y = h / 2;
    const int shift_x = w / 2;
    const double norm = 1.0 / (static_cast<double>(h) * w);

    Reconstruction result;
    result.image = Image(spectral.channels, h, w);

    std::vector<std::complex<double>> buffer(spectral.plane_size());
    for (int c = 0; c < spectral.channels; ++c) {
        for (int cy = 0; cy < h; ++cy) {
            const int y = (cy + h - shift_y) % h;
            for (int cx = 0; cx < w; ++cx) {
                const int x = (cx + w - shift_x) % w;
                const std::size_t src = spectral.index(c, cy, cx);
                buffer[static_cast<std::size_t>(y) * w + x] =
                    std::polar(spectral.amplitude[src], spectral.phase[src]);
            }
        }
        dft_2d(buffer.data(), h, w, FFTW_BACKWARD);
        auto plane = result.image.plane(c);
        for (std::size_t i = 0; i < plane.size(); ++i) {
            plane[i] = buffer[i].real() * norm;
            result.imag_residue =
                std::max(result.imag_residue, std::abs(buffer[i].imag()) * norm);
        }
    }
    if (clamp) result.image.clamp01();
    return result;
}

int mirror_index(int index, int size) {
    return ((2 * (size / 2) - index) % size + size) % size;
}

bool self_conjugate(int index, int size) {
    return mirror_index(index, size) == index;
}

double hermitian_residual(const SpectralImage& spectral) {
    validate_spectral(spectral);
    double residual = 0.0;
    for (int c = 0; c < spectral.channels; ++c) {
        for (int y = 0; y < spectral.height; ++y) {
            const int my = mirror_index(y, spectral.height);
            for (int x = 0; x < spectral.width; ++x) {
                const int mx = mirror_index(x, spectral.width);
                const std::complex<double> v = std::polar(
                    spectral.amplitude[spectral.index(c, y, x)],
                    spectral.phase[spectral.index(c, y, x)]);
                const std::complex<double> m = std::polar(
                    spectral.amplitude[spectral.index(c, my, mx)],
                    spectral.phase[spectral.index(c, my, mx)]);
                residual = std::max(residual, std::abs(v - std::conj(m)));
            }
        }
    }
    return residual;
}

} // namespace adsi
