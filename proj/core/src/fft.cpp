#include "wedge/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wedge::fft {

namespace {

// One cached plan per (kind, n), executed on persistent internal buffers.
// Serialized by a mutex; transforms are cheap and the library is
// single-threaded by design, so contention is not a concern.
struct R2RPlan {
    fftw_plan plan = nullptr;
    double* in = nullptr;
    double* out = nullptr;
    int n = 0;
};

std::mutex g_mutex;

R2RPlan& r2r_plan(fftw_r2r_kind kind, int n) {
    static std::map<std::pair<int, int>, R2RPlan> cache;
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        R2RPlan p;
        p.n = n;
        p.in = fftw_alloc_real(n);
        p.out = fftw_alloc_real(n);
        p.plan = fftw_plan_r2r_1d(n, p.in, p.out, kind, FFTW_ESTIMATE);
        if (!p.plan) throw std::runtime_error("fftw r2r plan failed");
        it = cache.emplace(key, p).first;
    }
    return it->second;
}

struct C2CPlan {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    int n = 0;
};

C2CPlan& c2c_plan(int sign, int n) {
    static std::map<std::pair<int, int>, C2CPlan> cache;
    auto key = std::make_pair(sign, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        C2CPlan p;
        p.n = n;
        p.in = fftw_alloc_complex(n);
        p.out = fftw_alloc_complex(n);
        p.plan = fftw_plan_dft_1d(n, p.in, p.out, sign, FFTW_ESTIMATE);
        if (!p.plan) throw std::runtime_error("fftw c2c plan failed");
        it = cache.emplace(key, p).first;
    }
    return it->second;
}

void run_r2r(fftw_r2r_kind kind, std::span<const double> in, std::span<double> out) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto& p = r2r_plan(kind, static_cast<int>(in.size()));
    std::memcpy(p.in, in.data(), in.size() * sizeof(double));
    fftw_execute(p.plan);
    std::memcpy(out.data(), p.out, in.size() * sizeof(double));
}

}  // namespace

void dct2(std::span<const double> in, std::span<double> out) {
    const int n = static_cast<int>(in.size());
    run_r2r(FFTW_REDFT10, in, out);
    const double s0 = 0.5 / std::sqrt(static_cast<double>(n));
    const double sk = 1.0 / std::sqrt(2.0 * n);
    out[0] *= s0;
    for (int k = 1; k < n; ++k) out[k] *= sk;
}

void dct3(std::span<const double> in, std::span<double> out) {
    const int n = static_cast<int>(in.size());
    std::vector<double> tmp(in.begin(), in.end());
    tmp[0] /= std::sqrt(static_cast<double>(n));
    const double sk = 1.0 / std::sqrt(2.0 * n);
    for (int k = 1; k < n; ++k) tmp[k] *= sk;
    run_r2r(FFTW_REDFT01, tmp, out);
}

void dst2(std::span<const double> in, std::span<double> out) {
    const int n = static_cast<int>(in.size());
    run_r2r(FFTW_RODFT10, in, out);
    const double sk = 1.0 / std::sqrt(2.0 * n);
    for (int k = 0; k + 1 < n; ++k) out[k] *= sk;
    out[n - 1] *= 0.5 / std::sqrt(static_cast<double>(n));
}

void dst3(std::span<const double> in, std::span<double> out) {
    const int n = static_cast<int>(in.size());
    std::vector<double> tmp(in.begin(), in.end());
    const double sk = 1.0 / std::sqrt(2.0 * n);
    for (int k = 0; k + 1 < n; ++k) tmp[k] *= sk;
    tmp[n - 1] /= std::sqrt(static_cast<double>(n));
    run_r2r(FFTW_RODFT01, tmp, out);
}

void fft_forward(std::span<const double> in, std::span<std::complex<double>> out) {
    std::lock_guard<std::mutex> lock(g_mutex);
    const int n = static_cast<int>(in.size());
    auto& p = c2c_plan(FFTW_FORWARD, n);
    for (int i = 0; i < n; ++i) {
        p.in[i][0] = in[i];
        p.in[i][1] = 0.0;
    }
    fftw_execute(p.plan);
    for (int i = 0; i < n; ++i) out[i] = {p.out[i][0], p.out[i][1]};
}

void fft_backward(std::span<const std::complex<double>> in, std::span<double> out) {
    std::lock_guard<std::mutex> lock(g_mutex);
    const int n = static_cast<int>(in.size());
    auto& p = c2c_plan(FFTW_BACKWARD, n);
    for (int i = 0; i < n; ++i) {
        p.in[i][0] = in[i].real();
        p.in[i][1] = in[i].imag();
    }
    fftw_execute(p.plan);
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) out[i] = p.out[i][0] * inv;
}

std::vector<double> frequencies(int n, double h) {
    std::vector<double> xi(n);
    const double base = 2.0 * M_PI / (n * h);
    for (int j = 0; j < n; ++j) {
        const int jj = (2 * j < n) ? j : j - n;
        xi[j] = base * jj;
    }
    return xi;
}

}  // namespace wedge::fft
