#pragma once

#include <vector>

#include "adsi/image.hpp"

namespace adsi {

/// Per-channel amplitude and phase planes of a centered 2D spectrum.
/// The DC bin sits at (H/2, W/2) (integer division); amplitude is
/// nonnegative and phase lies in (-pi, pi]. Layout matches Image: plane c
/// occupies [c*H*W, (c+1)*H*W), row-major.
struct SpectralImage {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> amplitude;
    std::vector<double> phase;

    std::size_t plane_size() const {
        return static_cast<std::size_t>(height) * width;
    }
    std::size_t index(int c, int y, int x) const {
        return plane_size() * c + static_cast<std::size_t>(y) * width + x;
    }
};

/// Result of an inverse transform. imag_residue is the largest imaginary
/// magnitude discarded when the complex output was reduced to a real image.
struct Reconstruction {
    Image image;
    double imag_residue = 0.0;
};

/// Unnormalized forward DFT of each channel, decomposed into centered
/// amplitude/phase planes.
SpectralImage forward_spectrum(const Image& image);

/// Recombines amplitude*exp(i*phase), applies the 1/(H*W) inverse DFT, and
/// keeps the real part. Symmetry of the input spectrum is not required;
/// whatever imaginary component the inverse produces is discarded and
/// surfaced via imag_residue. With clamp set the output is clipped to [0,1].
Reconstruction inverse_spectrum(const SpectralImage& spectral, bool clamp = true);

/// Partner of a centered bin index under the frequency negation k -> -k.
int mirror_index(int index, int size);

/// True for bins that are their own mirror (the DC bin, and the Nyquist
/// row/column present at even sizes). Real inputs force real coefficients
/// there.
bool self_conjugate(int index, int size);

/// Max deviation |F(k) - conj(F(-k))| over all bins and channels; ~0 for
/// spectra of real images.
double hermitian_residual(const SpectralImage& spectral);

} // namespace adsi
