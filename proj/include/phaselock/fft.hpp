#pragma once

#include <complex>
#include <vector>

namespace phaselock::fft {

/// In-place iterative radix-2 transform. Size must be a power of two.
/// Forward: X_k = sum_n x_n exp(-2 pi i k n / N). Inverse includes the 1/N.
void transform(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace phaselock::fft
