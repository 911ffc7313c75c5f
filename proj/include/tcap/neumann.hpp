#pragma once

// Certified control of the inverse element Phi^{-1} in the l1_tau
// convolution algebra: FFT-seeded approximate inverse and the Neumann-series
// bounds that every certifier relies on.

#include <complex>
#include <functional>

#include "tcap/fft.hpp"
#include "tcap/interval.hpp"
#include "tcap/sequence.hpp"

namespace tcap {

struct GridZero : IntervalError {
    GridZero() : IntervalError("grid value of phi too close to zero for FFT inversion") {}
};
struct DefectNotContractive : IntervalError {
    DefectNotContractive() : IntervalError("|1 - Phi*Phi_inv| >= 1: inverse not certified") {}
};
struct BallNotContractive : IntervalError {
    BallNotContractive() : IntervalError("defect + r |Phi_inv| >= 1: ball inverse not certified") {}
};

struct InverseData {
    CosineSeq phi;      // the element to invert
    CosineSeq phi_inv;  // float-seeded approximate inverse (point intervals)
    CosineSeq one_minus_pp; // 1 - phi * phi_inv, certified
    Interval defect;    // |1 - phi*phi_inv|_{1,tau}
    Interval inv_norm;  // |phi_inv|_{1,tau}
};

// FFT reciprocal seed on an oversampled grid; correctness is never claimed
// here, only the defect computed afterwards matters.  Extended precision in
// the seed keeps that defect near the coefficient roundoff floor.
inline CosineSeq approx_inverse(const CosineSeq& phi, std::size_t support, double zero_threshold = 1e-12) {
    const std::size_t grid = fftdet::next_pow2(4 * std::max(support, phi.support()) + 4);
    std::vector<std::complex<long double>> v(grid, 0.0L);
    v[0] = (long double)phi.at(0).mid();
    for (std::size_t m = 1; m <= phi.support(); ++m) {
        const long double x = (long double)phi.c[m].mid();
        v[m] += x;
        v[grid - m] += x;
    }
    fft_pow2(v, false); // grid values of phi
    for (auto& z : v) {
        if (fabsl(z.real()) < (long double)zero_threshold) throw GridZero();
        z = 1.0L / z.real();
    }
    fft_pow2(v, true);
    CosineSeq r(phi.d, phi.tau, support);
    r.c[0] = Interval((double)v[0].real());
    for (std::size_t m = 1; m <= support; ++m) r.c[m] = Interval((double)v[m].real());
    return r;
}

inline InverseData make_inverse_data(const CosineSeq& phi, const CosineSeq& phi_inv) {
    InverseData d;
    d.phi = phi;
    d.phi_inv = phi_inv;
    CosineSeq pp = conv(phi, phi_inv); // exact convolution keeps the cancellation sharp
    pp.c[0] = pp.c[0] - Interval(1.0);
    d.one_minus_pp = Interval(-1.0) * pp;
    d.defect = norm(d.one_minus_pp, SeqNorm::l1_tau);
    d.inv_norm = norm(phi_inv, SeqNorm::l1_tau);
    return d;
}

inline InverseData make_inverse_data(const CosineSeq& phi, std::size_t inv_support) {
    return make_inverse_data(phi, approx_inverse(phi, inv_support));
}

// Squared-element data (Phi^2, Phi_inv^2) built from the base pair.  The
// defect sequence uses 1 - E^2 = (1 - E)(1 + E) with E = Phi*Phi_inv, so its
// width stays proportional to the small factor.
inline InverseData make_inverse_data_squared(const InverseData& base) {
    InverseData d;
    d.phi = conv(base.phi, base.phi);
    d.phi_inv = conv(base.phi_inv, base.phi_inv);
    CosineSeq one_plus = Interval(-1.0) * base.one_minus_pp; // E - 1
    one_plus.c[0] += Interval(2.0);                          // E + 1
    d.one_minus_pp = conv(base.one_minus_pp, one_plus);
    d.defect = norm(d.one_minus_pp, SeqNorm::l1_tau);
    d.inv_norm = norm(d.phi_inv, SeqNorm::l1_tau);
    return d;
}

// |Phi_inv - Phi^{-1}|_{1,tau} <= |Phi_inv*(1 - Phi*Phi_inv)| / (1 - defect)
inline Interval inverse_error_bound(const InverseData& d) {
    if (!(d.defect.hi() < 1.0)) throw DefectNotContractive();
    const Interval num = norm(conv_auto(d.phi_inv, d.one_minus_pp), SeqNorm::l1_tau);
    return num / (Interval(1.0) - d.defect);
}

// sup over the ball B_r(Phi) of |Phi^{-1}|_{1,tau}
inline Interval ball_inverse_bound(const InverseData& d, const Interval& r) {
    const Interval denom = Interval(1.0) - d.defect - r * d.inv_norm;
    if (!(denom.lo() > 0.0)) throw BallNotContractive();
    return d.inv_norm / denom;
}

// |A [Xi*(Phi_inv - Phi^{-1}); 0]| <= |A [Xi*Phi_inv*(1-Phi*Phi_inv); 0]| / (1 - defect),
// with the action and norm of A supplied by the caller.
inline Interval weighted_inverse_residual(const InverseData& d, const CosineSeq& xi,
                                          const std::function<Interval(const CosineSeq&)>& a_norm) {
    if (!(d.defect.hi() < 1.0)) throw DefectNotContractive();
    const CosineSeq num = conv_auto(conv_auto(xi, d.phi_inv), d.one_minus_pp);
    return a_norm(num) / (Interval(1.0) - d.defect);
}

} // namespace tcap
