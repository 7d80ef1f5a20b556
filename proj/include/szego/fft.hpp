#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace szego::fft {

using cplx = std::complex<double>;

// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// In-place radix-2 Cooley-Tukey transform. Forward uses e^{-2pi i jk/N};
// the inverse conjugates and divides by N. data.size() must be a power of two.
void transform(std::vector<cplx>& data, bool inverse);

} // namespace szego::fft
