#pragma once

// Even-symmetry cosine coefficient sequences on N_0 with alpha_n counting
// weights (1 at n=0, 2 beyond), their l1_tau / l2 norms, projections, the
// boundary trace correction, and exact discrete convolution.

#include <cstddef>
#include <vector>

#include "tcap/interval.hpp"

namespace tcap {

inline double alpha_n(std::size_t n) { return n == 0 ? 1.0 : 2.0; }

struct CosineSeq {
    Interval d;   // domain half-width, Omega0 = (-d, d)
    Interval tau; // weight of the ambient l1_tau space
    std::vector<Interval> c;

    CosineSeq() : d(1.0), tau(1.0) {}
    CosineSeq(Interval d_, Interval tau_, std::size_t support)
        : d(d_), tau(tau_), c(support + 1, Interval(0.0)) {}

    std::size_t support() const { return c.empty() ? 0 : c.size() - 1; }
    const Interval& at(std::size_t n) const {
        static const Interval zero(0.0);
        return n < c.size() ? c[n] : zero;
    }
};

inline CosineSeq e0_seq(const Interval& d, const Interval& tau, const Interval& value = Interval(1.0)) {
    CosineSeq s(d, tau, 0);
    s.c[0] = value;
    return s;
}

inline bool same_domain(const CosineSeq& a, const CosineSeq& b) {
    return a.d.lo() == b.d.lo() && a.d.hi() == b.d.hi();
}

struct MismatchedDomain : IntervalError {
    MismatchedDomain() : IntervalError("cosine sequences live on different domains") {}
};

inline CosineSeq operator+(const CosineSeq& a, const CosineSeq& b) {
    if (!same_domain(a, b)) throw MismatchedDomain();
    CosineSeq r(a.d, a.tau, std::max(a.support(), b.support()));
    for (std::size_t n = 0; n < r.c.size(); ++n) r.c[n] = a.at(n) + b.at(n);
    return r;
}

inline CosineSeq operator-(const CosineSeq& a, const CosineSeq& b) {
    if (!same_domain(a, b)) throw MismatchedDomain();
    CosineSeq r(a.d, a.tau, std::max(a.support(), b.support()));
    for (std::size_t n = 0; n < r.c.size(); ++n) r.c[n] = a.at(n) - b.at(n);
    return r;
}

inline CosineSeq operator*(const Interval& s, const CosineSeq& a) {
    CosineSeq r = a;
    for (auto& x : r.c) x = s * x;
    return r;
}

// Exact even-symmetry discrete convolution,
//   (U*V)_n = V_0 U_n + sum_{k>=1} V_k (U_{|n-k|} + U_{n+k}),
// which is the Z-convolution of the even extensions restricted to n >= 0.
//
// Accumulation is midpoint-radius with a double-double center, so the
// enclosure width stays near one ulp of the result instead of drifting by
// one ulp of the running sum per term.  Cancellation-heavy quantities
// (Neumann defects, residuals) depend on this.
inline CosineSeq conv(const CosineSeq& a, const CosineSeq& b) {
    if (!same_domain(a, b)) throw MismatchedDomain();
    const CosineSeq& u = a.support() >= b.support() ? a : b;
    const CosineSeq& v = a.support() >= b.support() ? b : a;
    const std::size_t mu = u.support(), mv = v.support();

    // midpoint/radius split of both operands
    const std::size_t nu_ = mu + 1, nv_ = mv + 1;
    std::vector<double> um(nu_), ur(nu_), vm(nv_), vr(nv_);
    auto split = [](const Interval& x, double& m, double& r) {
        m = 0.5 * (x.lo() + x.hi());
        if (!std::isfinite(m)) m = x.lo();
        r = std::max(rnd::sub_up(x.hi(), m), rnd::sub_up(m, x.lo()));
    };
    for (std::size_t i = 0; i < nu_; ++i) split(u.c[i], um[i], ur[i]);
    for (std::size_t i = 0; i < nv_; ++i) split(v.c[i], vm[i], vr[i]);

    CosineSeq out(a.d, a.tau, mu + mv);
    for (std::size_t n = 0; n <= mu + mv; ++n) {
        dd::DD center{0.0, 0.0};
        double rad = 0.0, absmass = 0.0;
        std::size_t terms = 0;
        auto accumulate = [&](double am, double ar, double bm, double br) {
            center = dd::add(center, dd::two_prod(am, bm));
            const double cross = rnd::add_up(rnd::add_up(rnd::mul_up(std::fabs(am), br),
                                                         rnd::mul_up(ar, std::fabs(bm))),
                                             rnd::mul_up(ar, br));
            rad = rnd::add_up(rad, cross);
            absmass += std::fabs(am * bm);
            ++terms;
        };
        {
            const std::size_t i = n;
            if (i < nu_) accumulate(um[i], ur[i], vm[0], vr[0]);
        }
        for (std::size_t k = 1; k <= mv; ++k) {
            const std::size_t ia = n >= k ? n - k : k - n;
            if (ia < nu_) accumulate(um[ia], ur[ia], vm[k], vr[k]);
            if (n + k < nu_) accumulate(um[n + k], ur[n + k], vm[k], vr[k]);
        }
        // double-double roundoff majorant: ~2^-104 relative per operation;
        // a single exact product needs no widening at all
        const double dd_err = terms <= 1 ? std::fabs(center.lo)
                                         : 4.93038065763132e-32 * absmass * double(terms + 2) +
                                               std::fabs(center.lo);
        const double total = rnd::add_up(rad, dd_err);
        out.c[n] = total == 0.0 ? Interval(center.hi)
                                : Interval(rnd::sub_down(center.hi, total), rnd::add_up(center.hi, total));
    }
    return out;
}

enum class SeqNorm { l1_tau, l2 };

inline Interval norm(const CosineSeq& a, SeqNorm which) {
    Interval sum(0.0);
    if (which == SeqNorm::l1_tau) {
        Interval tp(1.0);
        for (std::size_t n = 0; n < a.c.size(); ++n) {
            sum += Interval(alpha_n(n)) * iv_abs(a.c[n]) * tp;
            tp = tp * a.tau;
        }
        return sum;
    }
    for (std::size_t n = 0; n < a.c.size(); ++n) sum += Interval(alpha_n(n)) * iv_sqr(a.c[n]);
    return iv_sqrt(sum);
}

// alpha-weighted l2 pairing sum alpha_n u_n v_n (tau plays no role).
inline Interval inner2(const CosineSeq& a, const CosineSeq& b) {
    Interval sum(0.0);
    const std::size_t m = std::min(a.c.size(), b.c.size());
    for (std::size_t n = 0; n < m; ++n) sum += Interval(alpha_n(n)) * a.c[n] * b.c[n];
    return sum;
}

enum class ProjSide { leq, gt };

inline CosineSeq project(const CosineSeq& a, std::size_t N, ProjSide side) {
    if (side == ProjSide::leq) {
        CosineSeq r(a.d, a.tau, std::min(N, a.support()));
        for (std::size_t n = 0; n < r.c.size(); ++n) r.c[n] = a.at(n);
        return r;
    }
    CosineSeq r(a.d, a.tau, a.support());
    for (std::size_t n = N + 1; n < a.c.size(); ++n) r.c[n] = a.c[n];
    return r;
}

// Interval enclosure of the function value at x = +-d:  u(+-d) = u_0 + sum 2 u_n (-1)^n.
inline Interval boundary_value(const CosineSeq& a) {
    Interval sum = a.at(0);
    for (std::size_t n = 1; n < a.c.size(); ++n) {
        const Interval t = Interval(2.0) * a.c[n];
        sum = (n % 2 == 0) ? sum + t : sum - t;
    }
    return sum;
}

// Pointwise evaluation of gamma^dagger(U)(x) = u_0 + sum 2 u_n cos(2 pi n x / (2d)).
inline Interval eval_at(const CosineSeq& a, const Interval& x) {
    Interval sum = a.at(0);
    const Interval base = iv_pi() * x / a.d;
    for (std::size_t n = 1; n < a.c.size(); ++n)
        sum += Interval(2.0) * a.c[n] * iv_cos(Interval(double(n)) * base);
    return sum;
}

struct SeqPair {
    CosineSeq u1, u2;

    SeqPair() = default;
    SeqPair(CosineSeq a, CosineSeq b) : u1(std::move(a)), u2(std::move(b)) {
        if (!same_domain(u1, u2)) throw MismatchedDomain();
    }
    std::size_t support() const { return std::max(u1.support(), u2.support()); }
};

inline Interval norm(const SeqPair& p, SeqNorm which) {
    if (which == SeqNorm::l1_tau) return norm(p.u1, which) + norm(p.u2, which);
    return iv_sqrt(iv_sqr(norm(p.u1, SeqNorm::l2)) + iv_sqr(norm(p.u2, SeqNorm::l2)));
}

inline Interval inner2(const SeqPair& a, const SeqPair& b) {
    return inner2(a.u1, b.u1) + inner2(a.u2, b.u2);
}

inline SeqPair project(const SeqPair& p, std::size_t N, ProjSide side) {
    return SeqPair(project(p.u1, N, side), project(p.u2, N, side));
}

inline SeqPair operator+(const SeqPair& a, const SeqPair& b) { return SeqPair(a.u1 + b.u1, a.u2 + b.u2); }
inline SeqPair operator-(const SeqPair& a, const SeqPair& b) { return SeqPair(a.u1 - b.u1, a.u2 - b.u2); }

// Boundary trace correction: replaces the zeroth mode so that the function
// representation vanishes at x = +-d.  For point coefficients the sum is
// accumulated in double-double so the replacement stays 1-ulp tight.
inline CosineSeq trace_fix(const CosineSeq& a, std::size_t N0) {
    CosineSeq r = a;
    if (r.c.empty()) return r;
    const std::size_t top = std::min(N0, a.support());
    bool points = true;
    for (std::size_t n = 1; n <= top; ++n)
        if (!a.c[n].is_point()) {
            points = false;
            break;
        }
    if (points) {
        dd::DD s{0.0, 0.0};
        double absmass = 0.0;
        for (std::size_t n = 1; n <= top; ++n) {
            const double t = (n % 2 == 1 ? 2.0 : -2.0) * a.c[n].lo();
            s = dd::add(s, dd::DD{t, 0.0});
            absmass += std::fabs(t);
        }
        const double err = 16.0 * 1.232595164407831e-32 * absmass * double(top + 1) +
                           std::fabs(s.lo) + 1e-300;
        r.c[0] = Interval(rnd::sub_down(s.hi, err), rnd::add_up(s.hi, err));
        return r;
    }
    Interval s(0.0);
    for (std::size_t n = 1; n <= top; ++n) {
        const Interval t = Interval(2.0) * a.c[n];
        s = (n % 2 == 1) ? s + t : s - t; // 2 V_n (-1)^{n+1}
    }
    r.c[0] = s;
    return r;
}

inline SeqPair trace_fix(const SeqPair& p, std::size_t N0) {
    return SeqPair(trace_fix(p.u1, N0), trace_fix(p.u2, N0));
}

} // namespace tcap
