#include "scwave/fft.hpp"

#include "scwave/errors.hpp"

#include <cmath>
#include <numbers>

namespace scwave {

namespace {

void transform(std::vector<Cplx>& x, double sign) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ValidationError("size", "transform length must be a power of two >= 1");
    }

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(x[i], x[j]);
        }
    }

    // Iterative radix-2 butterflies, twiddles from std::polar per stage.
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::size_t half = len >> 1;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Cplx w = std::polar(1.0, angle * static_cast<double>(j));
                const Cplx u = x[base + j];
                const Cplx v = x[base + j + half] * w;
                x[base + j] = u + v;
                x[base + j + half] = u - v;
            }
        }
    }
}

} // namespace

void fft_inplace(std::vector<Cplx>& x) {
    transform(x, -1.0);
}

void ifft_inplace(std::vector<Cplx>& x) {
    transform(x, 1.0);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (Cplx& v : x) {
        v *= scale;
    }
}

std::vector<Cplx> fft(std::vector<Cplx> x) {
    fft_inplace(x);
    return x;
}

std::vector<Cplx> ifft(std::vector<Cplx> x) {
    ifft_inplace(x);
    return x;
}

} // namespace scwave
