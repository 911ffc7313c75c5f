#pragma once

// Radix-2 FFT over either std::complex<double> (for candidate numerics) or
// rectangular complex intervals (for certified convolutions).  The interval
// FFT is an exact linear reorganization of the DFT computed in interval
// arithmetic, so its output encloses the exact transform.

#include <complex>
#include <cstddef>
#include <vector>

#include "tcap/interval.hpp"
#include "tcap/sequence.hpp"

namespace tcap {

struct CInterval {
    Interval re, im;
    CInterval() : re(0.0), im(0.0) {}
    CInterval(Interval r, Interval i = Interval(0.0)) : re(r), im(i) {}
};

inline CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
inline CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }
inline CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CInterval conj(const CInterval& a) { return {a.re, -a.im}; }

inline Interval iv_complex_abs(const CInterval& a) { return iv_sqrt(iv_sqr(a.re) + iv_sqr(a.im)); }

// Principal square root of a rectangle, valid when 0 is not inside.
inline CInterval iv_complex_sqrt(const CInterval& z) {
    const Interval r = iv_complex_abs(z);
    const Interval re_w2 = (r + z.re) * Interval(0.5);
    if (re_w2.lo() <= 0) {
        // near the negative real axis: use the imaginary-part-first form
        const Interval im_w2 = (r - z.re) * Interval(0.5);
        Interval im_w = iv_sqrt(iv_max(im_w2, Interval(0.0)));
        if (z.im.hi() < 0) im_w = -im_w;
        else if (z.im.contains(0.0)) im_w = Interval::hull(im_w, -im_w);
        const Interval re_w = z.im / (Interval(2.0) * im_w);
        return {re_w, im_w};
    }
    const Interval re_w = iv_sqrt(re_w2);
    const Interval im_w = z.im / (Interval(2.0) * re_w);
    return {re_w, im_w};
}

namespace fftdet {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

template <class C>
struct Twiddles;

template <>
struct Twiddles<std::complex<double>> {
    static std::vector<std::complex<double>> make(std::size_t n, bool inverse) {
        std::vector<std::complex<double>> w(n / 2);
        const double sign = inverse ? 1.0 : -1.0;
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = sign * 2.0 * 3.141592653589793238462643383279502884 * double(k) / double(n);
            w[k] = {std::cos(ang), std::sin(ang)};
        }
        return w;
    }
};

template <>
struct Twiddles<std::complex<long double>> {
    static std::vector<std::complex<long double>> make(std::size_t n, bool inverse) {
        std::vector<std::complex<long double>> w(n / 2);
        const long double sign = inverse ? 1.0L : -1.0L;
        const long double pi = 3.14159265358979323846264338327950288L;
        for (std::size_t k = 0; k < n / 2; ++k) {
            const long double ang = sign * 2.0L * pi * (long double)k / (long double)n;
            w[k] = {cosl(ang), sinl(ang)};
        }
        return w;
    }
};

template <>
struct Twiddles<CInterval> {
    static std::vector<CInterval> make(std::size_t n, bool inverse) {
        std::vector<CInterval> w(n / 2);
        const long long sign = inverse ? 1 : -1;
        for (std::size_t k = 0; k < n / 2; ++k) {
            w[k] = CInterval(iv_cos_pi_ratio(2 * (long long)k, (long long)n),
                             iv_sin_pi_ratio(sign * 2 * (long long)k, (long long)n));
        }
        return w;
    }
};

template <class C>
void scale_by_inv_pow2(std::vector<C>& a, std::size_t n);

template <>
inline void scale_by_inv_pow2<std::complex<double>>(std::vector<std::complex<double>>& a, std::size_t n) {
    const double s = 1.0 / double(n);
    for (auto& x : a) x *= s;
}

template <>
inline void scale_by_inv_pow2<std::complex<long double>>(std::vector<std::complex<long double>>& a,
                                                         std::size_t n) {
    const long double s = 1.0L / (long double)n;
    for (auto& x : a) x *= s;
}

template <>
inline void scale_by_inv_pow2<CInterval>(std::vector<CInterval>& a, std::size_t n) {
    const Interval s(1.0 / double(n)); // n is a power of two, exact
    for (auto& x : a) x = CInterval(s * x.re, s * x.im);
}

} // namespace fftdet

// In-place iterative Cooley-Tukey; a.size() must be a power of two.
template <class C>
void fft_pow2(std::vector<C>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (n & (n - 1)) throw IntervalError("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto w = fftdet::Twiddles<C>::make(n, inverse);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const C u = a[i + k];
                const C v = a[i + k + len / 2] * w[k * step];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) fftdet::scale_by_inv_pow2<C>(a, n);
}

// Certified convolution of even-symmetric sequences via the interval FFT.
// Zero-padded to a cyclic length that prevents wraparound, hence exact up to
// interval widening.
inline CosineSeq conv_fft(const CosineSeq& a, const CosineSeq& b) {
    if (!same_domain(a, b)) throw MismatchedDomain();
    const std::size_t ms = a.support() + b.support();
    const std::size_t L = fftdet::next_pow2(2 * ms + 2);
    std::vector<CInterval> fa(L), fb(L);
    auto place = [L](const CosineSeq& s, std::vector<CInterval>& f) {
        f[0] = CInterval(s.c[0]);
        for (std::size_t m = 1; m <= s.support(); ++m) {
            f[m] = CInterval(s.c[m]);
            f[L - m] = CInterval(s.c[m]);
        }
    };
    place(a, fa);
    place(b, fb);
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < L; ++i) fa[i] = fa[i] * fb[i];
    fft_pow2(fa, true);
    CosineSeq r(a.d, a.tau, ms);
    for (std::size_t n = 0; n <= ms; ++n) r.c[n] = fa[n].re;
    return r;
}

// The interval FFT carries an absolute width of order L*eps*max|values|,
// which ruins cancellation-type results (defects near machine precision)
// even though it is fine for plain products.  The 1D certifier paths always
// take the exact direct convolution; the FFT route stays available for
// callers that know their operands are well-scaled.
inline CosineSeq conv_auto(const CosineSeq& a, const CosineSeq& b) { return conv(a, b); }

// ---- Chebyshev node transforms (DCT-I via the cyclic even extension) ----
//
// Coefficients (c_0..c_N in the convention p(x) = c_0 + 2 sum c_j T_j(x))
// exchange with values at the N+1 nodes x_k = cos(pi k / N), N a power of 2.
// Exact for polynomials of degree <= N, up to interval widening.

inline std::vector<Interval> cheb_coeffs_to_values(const std::vector<Interval>& coeff, std::size_t N) {
    std::vector<CInterval> e(2 * N);
    e[0] = CInterval(coeff[0]);
    for (std::size_t j = 1; j < N; ++j) {
        const Interval v = j < coeff.size() ? coeff[j] : Interval(0.0);
        e[j] = CInterval(v);
        e[2 * N - j] = CInterval(v);
    }
    {
        const Interval v = N < coeff.size() ? coeff[N] : Interval(0.0);
        e[N] = CInterval(v + v);
    }
    fft_pow2(e, false);
    std::vector<Interval> out(N + 1);
    for (std::size_t k = 0; k <= N; ++k) out[k] = e[k].re;
    return out;
}

inline std::vector<Interval> cheb_values_to_coeffs(const std::vector<Interval>& val, std::size_t N) {
    std::vector<CInterval> e(2 * N);
    e[0] = CInterval(val[0]);
    for (std::size_t k = 1; k < N; ++k) {
        e[k] = CInterval(val[k]);
        e[2 * N - k] = CInterval(val[k]);
    }
    e[N] = CInterval(val[N]);
    fft_pow2(e, true);
    std::vector<Interval> out(N + 1);
    for (std::size_t j = 0; j < N; ++j) out[j] = e[j].re;
    out[N] = e[N].re * Interval(0.5);
    return out;
}

inline std::vector<double> cheb_coeffs_to_values_d(const std::vector<double>& coeff, std::size_t N) {
    std::vector<std::complex<double>> e(2 * N, 0.0);
    e[0] = coeff[0];
    for (std::size_t j = 1; j < N; ++j) {
        const double v = j < coeff.size() ? coeff[j] : 0.0;
        e[j] = v;
        e[2 * N - j] = v;
    }
    e[N] = 2.0 * (N < coeff.size() ? coeff[N] : 0.0);
    fft_pow2(e, false);
    std::vector<double> out(N + 1);
    for (std::size_t k = 0; k <= N; ++k) out[k] = e[k].real();
    return out;
}

inline std::vector<double> cheb_values_to_coeffs_d(const std::vector<double>& val, std::size_t N) {
    std::vector<std::complex<double>> e(2 * N, 0.0);
    e[0] = val[0];
    for (std::size_t k = 1; k < N; ++k) {
        e[k] = val[k];
        e[2 * N - k] = val[k];
    }
    e[N] = val[N];
    fft_pow2(e, true);
    std::vector<double> out(N + 1);
    for (std::size_t j = 0; j < N; ++j) out[j] = e[j].real();
    out[N] = 0.5 * e[N].real();
    return out;
}

} // namespace tcap
