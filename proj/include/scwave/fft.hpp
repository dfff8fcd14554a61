#pragma once

#include <complex>
#include <vector>

namespace scwave {

using Cplx = std::complex<double>;

/// In-place iterative radix-2 forward DFT, X[k] = sum_n x[n] e^{-i 2 pi k n / N}.
/// No normalization. Size must be a power of two >= 1 (ValidationError "size").
void fft_inplace(std::vector<Cplx>& x);

/// In-place inverse DFT with 1/N normalization, so ifft(fft(x)) == x.
void ifft_inplace(std::vector<Cplx>& x);

std::vector<Cplx> fft(std::vector<Cplx> x);
std::vector<Cplx> ifft(std::vector<Cplx> x);

} // namespace scwave
