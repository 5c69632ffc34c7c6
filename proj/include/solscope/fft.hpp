#pragma once

#include <complex>
#include <vector>

#include "solscope/errors.hpp"
#include "solscope/linalg.hpp"

namespace solscope {

// In-place iterative radix-2 FFT; inverse divides by n.
inline void fft_radix2(CVec& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    if (n == 0 || (n & (n - 1)) != 0) throw invalid_parameter("fft size must be a power of two");
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.14159265358979323846;
    for (int len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / len * (inverse ? 1.0 : -1.0);
        cplx wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (int j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (int i = 0; i < n; ++i) a[i] /= double(n);
}

// Signed FFT frequency of bin j for period length L: 2*pi*j'/L with j' in
// [-n/2, n/2).
inline double fft_freq(int j, int n, double L) {
    const double pi = 3.14159265358979323846;
    int js = (j < n / 2) ? j : j - n;
    return 2.0 * pi * js / L;
}

} // namespace solscope
