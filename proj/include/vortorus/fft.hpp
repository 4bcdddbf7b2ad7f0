#pragma once

#include <complex>
#include <vector>

namespace vortorus {

/// Thin wrapper over the 2D complex FFT used by the field solvers.
///
/// Data layout is row-major with the first index (size n1) varying
/// slowest: entry (i1, i2) lives at i1 * n2 + i2.  forward() computes the
/// unnormalized sum with e^{-2 pi i (...)} kernels; backward() applies the
/// e^{+2 pi i} kernels and divides by n1*n2, so backward(forward(x)) == x
/// up to rounding.
///
/// Plan creation is serialized internally; execution is thread-safe on
/// distinct buffers.
std::vector<std::complex<double>> fft2_forward(const std::vector<std::complex<double>>& in,
                                               int n1, int n2);

std::vector<std::complex<double>> fft2_backward(const std::vector<std::complex<double>>& in,
                                                int n1, int n2);

/// Frequency assigned to the FFT slot i of an axis of length n: the
/// signed integer i for 2i < n and i - n otherwise, so an even n maps
/// its Nyquist slot to -n/2.
int fft_freq(int i, int n);

} // namespace vortorus
