#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wedge::fft {

/// Orthonormal DCT-II of a midpoint-sampled sequence (cosine coefficients,
/// modes k = 0..n-1). Self-consistent inverse dct3.
void dct2(std::span<const double> in, std::span<double> out);
void dct3(std::span<const double> in, std::span<double> out);

/// Orthonormal DST-II (sine coefficients, modes k = 1..n stored at 0..n-1).
void dst2(std::span<const double> in, std::span<double> out);
void dst3(std::span<const double> in, std::span<double> out);

/// Forward/backward complex FFT of a real sequence (layer x-direction).
/// forward: F_j = sum_i v_i exp(-i xi_j x_i-style discrete transform);
/// backward normalizes by 1/n.
void fft_forward(std::span<const double> in, std::span<std::complex<double>> out);
void fft_backward(std::span<const std::complex<double>> in, std::span<double> out);

/// FFT frequencies xi_j = 2 pi j / (n h) with wraparound ordering.
std::vector<double> frequencies(int n, double h);

}  // namespace wedge::fft
