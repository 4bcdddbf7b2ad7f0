#include "vortorus/fft.hpp"

#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace vortorus {

namespace {

// FFTW planning mutates global state; executions on separate buffers are safe.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in,
                                      int n1, int n2, int sign) {
    if (n1 <= 0 || n2 <= 0 || in.size() != static_cast<std::size_t>(n1) * n2) {
        throw std::invalid_argument("fft2: buffer size does not match n1*n2");
    }
    std::vector<std::complex<double>> out(in.size());
    // FFTW guarantees it never writes through the input pointer of an
    // out-of-place c2c plan executed with FFTW_ESTIMATE.
    auto* src = reinterpret_cast<fftw_complex*>(
        const_cast<std::complex<double>*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_2d(n1, n2, src, dst, sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> fft2_forward(const std::vector<std::complex<double>>& in,
                                               int n1, int n2) {
    return run(in, n1, n2, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft2_backward(const std::vector<std::complex<double>>& in,
                                                int n1, int n2) {
    auto out = run(in, n1, n2, FFTW_BACKWARD);
    const double scale = 1.0 / (static_cast<double>(n1) * n2);
    for (auto& z : out) z *= scale;
    return out;
}

int fft_freq(int i, int n) {
    return (2 * i < n) ? i : i - n;
}

} // namespace vortorus
