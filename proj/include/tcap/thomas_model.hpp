#pragma once

// Thomas-model data: model parameters, the derived lambda/mu constants, the
// Fourier symbol of the linear part and its invertibility test, certified
// sup/L2 norms of the inverse symbol, and assembly of the nonlinearity
// sequences for the localized and periodic problems.

#include <deque>
#include <functional>

#include "tcap/imatrix.hpp"
#include "tcap/interval.hpp"
#include "tcap/sequence.hpp"

namespace tcap {

struct ThomasParams {
    Interval nu, nu1, nu2, nu3, nu4, nu5;

    void validate() const {
        for (const Interval* v : {&nu, &nu1, &nu2, &nu3, &nu4, &nu5})
            if (!(v->lo() > 0)) throw IntervalError("Thomas parameters must be positive");
        if (!(nu2.lo() > 0.25)) throw IntervalError("nu2 must exceed 1/4");
    }
};

struct DerivedParams {
    Interval lambda1, lambda2, lambda3, lambda4, lambda5, lambda6, lambda7;
    Interval mu1, mu2, mu3, mu4, mu5, mu6;
};

struct NoRealRoot : IntervalError {
    NoRealRoot() : IntervalError("steady-state cubic has no certified real root near the hint") {}
};
struct AmbiguousRoot : IntervalError {
    AmbiguousRoot() : IntervalError("root hint does not isolate a unique cubic root") {}
};
struct IndeterminateSign : IntervalError {
    IndeterminateSign() : IntervalError("interval sign is indeterminate; tighten parameters") {}
};

namespace model_detail {

struct Cubic {
    Interval c3, c2, c1, c0;
    Interval operator()(const Interval& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    Interval deriv(const Interval& x) const { return (Interval(3.0) * c3 * x + Interval(2.0) * c2) * x + c1; }
};

inline Cubic steady_state_cubic(const ThomasParams& p) {
    Cubic q;
    q.c3 = p.nu3 * p.nu2;
    q.c2 = -((p.nu4 * p.nu2 - Interval(1.0)) * p.nu3 - p.nu1);
    q.c1 = (p.nu5 * p.nu1 - (p.nu4 - Interval(1.0))) * p.nu3 - p.nu4 * p.nu1;
    q.c0 = -p.nu4 * p.nu3;
    return q;
}

// Sharp certified sign of the steady-state cubic at a point, for exactly
// representable parameters: all monomials are accumulated in double-double
// with an explicit roundoff majorant.
inline int cubic_sign_sharp(const ThomasParams& p, double x) {
    using dd::DD;
    const double nu1 = p.nu1.lo(), nu2 = p.nu2.lo(), nu3 = p.nu3.lo(), nu4 = p.nu4.lo(),
                 nu5 = p.nu5.lo();
    const DD x1{x, 0.0};
    const DD x2 = dd::mul(x1, x1);
    const DD x3 = dd::mul(x2, x1);
    DD sum{0.0, 0.0};
    double abssum = 0.0;
    auto acc = [&](DD term) {
        sum = dd::add(sum, term);
        abssum += std::fabs(term.hi);
    };
    acc(dd::mul(dd::mul(DD{nu3, 0}, nu2), x3));
    acc(dd::mul(dd::mul(dd::mul(DD{-nu4, 0}, nu2), nu3), x2));
    acc(dd::mul(dd::mul(DD{nu3, 0}, 1.0), x2));
    acc(dd::mul(DD{nu1, 0}, x2));
    acc(dd::mul(dd::mul(dd::mul(DD{nu5, 0}, nu1), nu3), x1));
    acc(dd::mul(dd::mul(DD{-nu4, 0}, nu3), x1));
    acc(dd::mul(DD{nu3, 0}, x1));
    acc(dd::mul(dd::mul(DD{-nu4, 0}, nu1), x1));
    acc(dd::mul(DD{-nu4, 0}, nu3));
    const double err = 512.0 * 1.232595164407831e-32 * abssum + 1e-300; // 2^-106 per dd op
    if (sum.hi > err) return 1;
    if (sum.hi < -err) return -1;
    return 0;
}

// Certified isolation of the cubic root nearest to `hint`: bracket by sign
// change, bisect, then contract with interval Newton steps.
inline Interval refine_root(const Cubic& f, double hint, double window_rel,
                            const std::function<int(double)>& sharp_sign = nullptr) {
    auto sign_at = [&f, &sharp_sign](double x) {
        const Interval v = f(Interval(x));
        if (v.lo() > 0) return 1;
        if (v.hi() < 0) return -1;
        return sharp_sign ? sharp_sign(x) : 0;
    };
    const double scale = std::max(1.0, std::fabs(hint));
    double w = scale * 1e-9;
    const double wmax = scale * window_rel;
    double lo = hint, hi = hint;
    int slo = 0, shi = 0;
    while (w <= wmax) {
        lo = hint - w;
        hi = hint + w;
        slo = sign_at(lo);
        shi = sign_at(hi);
        if (slo != 0 && shi != 0 && slo != shi) break;
        w *= 2.0;
    }
    if (!(slo != 0 && shi != 0 && slo != shi)) throw NoRealRoot();

    // more than one sign change across the bracket would mean the hint is ambiguous
    {
        int changes = 0, prev = slo;
        const int K = 64;
        for (int k = 1; k <= K; ++k) {
            const int s = k == K ? shi : sign_at(lo + (hi - lo) * double(k) / K);
            if (s != 0 && prev != 0 && s != prev) ++changes;
            if (s != 0) prev = s;
        }
        if (changes > 1) throw AmbiguousRoot();
    }

    for (int it = 0; it < 200 && hi - lo > 1e-300; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        const int sm = sign_at(m);
        if (sm == 0) break;
        if (sm == slo) lo = m;
        else hi = m;
    }
    Interval x(lo, hi);
    for (int it = 0; it < 8; ++it) {
        const Interval df = f.deriv(x);
        if (df.contains(0.0)) break;
        const Interval m(x.mid());
        const Interval nx = m - f(m) / df;
        const double nlo = std::max(x.lo(), nx.lo());
        const double nhi = std::min(x.hi(), nx.hi());
        if (nlo > nhi) break;
        if (nhi - nlo >= x.width()) break;
        x = Interval(nlo, nhi);
    }
    if (!f(x).contains(0.0)) {
        // inflate minimally until the residual encloses zero
        Interval y = x;
        for (int it = 0; it < 60 && !f(y).contains(0.0); ++it)
            y = Interval(rnd::down(y.lo()), rnd::up(y.hi()));
        if (!f(y).contains(0.0)) throw NoRealRoot();
        x = y;
    }
    return x;
}

} // namespace model_detail

inline DerivedParams derive_params(const ThomasParams& p, double lambda1_hint, double window_rel = 0.05) {
    p.validate();
    DerivedParams dp;
    const bool points = p.nu.is_point() && p.nu1.is_point() && p.nu2.is_point() && p.nu3.is_point() &&
                        p.nu4.is_point() && p.nu5.is_point();
    std::function<int(double)> sharp;
    if (points) sharp = [&p](double x) { return model_detail::cubic_sign_sharp(p, x); };
    dp.lambda1 =
        model_detail::refine_root(model_detail::steady_state_cubic(p), lambda1_hint, window_rel, sharp);

    const Interval one(1.0);
    const Interval h = one + dp.lambda1 + p.nu2 * iv_sqr(dp.lambda1);
    dp.lambda2 = h * (p.nu4 - dp.lambda1) / (p.nu1 * dp.lambda1);
    dp.lambda3 = p.nu1 * p.nu + (dp.lambda1 - p.nu4) * p.nu2;
    dp.lambda4 = p.nu1 * dp.lambda2 + (one + Interval(2.0) * p.nu2 * dp.lambda1) * (dp.lambda1 - p.nu4) +
                 p.nu1 * dp.lambda1 * p.nu;
    dp.lambda5 = p.nu3 * p.nu - one;
    dp.lambda6 = -(dp.lambda1 * dp.lambda4 + dp.lambda4 + iv_sqr(dp.lambda1) * dp.lambda4 * p.nu2) / iv_sqr(h);
    dp.lambda7 = p.nu1 * dp.lambda1 / h;

    dp.mu1 = p.nu1 * p.nu2;
    dp.mu2 = dp.lambda3 + Interval(2.0) * dp.lambda1 * dp.lambda3 * p.nu2 - dp.lambda4 * p.nu2;
    dp.mu3 = Interval(2.0) * dp.lambda1 * p.nu1 * p.nu2;
    dp.mu4 = Interval(2.0) * dp.lambda1 * dp.lambda3 + Interval(2.0) * dp.lambda3 +
             Interval(2.0) * iv_sqr(dp.lambda1) * dp.lambda3 * p.nu2;
    dp.mu5 = iv_sqr(dp.lambda1) * p.nu1 * p.nu2 - p.nu1;
    dp.mu6 = dp.lambda1 * dp.lambda4 + dp.lambda4 + iv_sqr(dp.lambda1) * dp.lambda4 * p.nu2;
    return dp;
}

// Fourier symbol of the localized linear part, parameterized by s = |2 pi xi|^2.
struct SymbolMatrix {
    Interval nu, nu3, lambda5, lambda6, lambda7;
    Interval b, c; // l_den(s) = nu s^2 + b s + c

    SymbolMatrix(const DerivedParams& dp, const ThomasParams& p)
        : nu(p.nu), nu3(p.nu3), lambda5(dp.lambda5), lambda6(dp.lambda6), lambda7(dp.lambda7) {
        b = nu * nu3 - lambda6 + Interval(1.0);
        c = (Interval(1.0) - lambda6) * nu3 - lambda5 * lambda7;
    }

    Interval l11(const Interval& s) const { return -nu * s + lambda6 - Interval(1.0); }
    Interval l12(const Interval&) const { return lambda7; }
    Interval l21(const Interval&) const { return lambda5; }
    Interval l22(const Interval& s) const { return -s - nu3; }
    Interval lden(const Interval& s) const { return (nu * s + b) * s + c; }

    // s at the discrete frequency n~ = n / (2d)
    static Interval s_of_mode(std::size_t n, const Interval& d) {
        return iv_sqr(iv_pi() * Interval(double(n)) / d);
    }
};

enum class InvertCase { CaseComplex, CaseReal, NotInvertible };

inline InvertCase check_invertibility(const DerivedParams& dp, const ThomasParams& p) {
    const SymbolMatrix sym(dp, p);
    const Interval disc = iv_sqr(sym.b) - Interval(4.0) * p.nu * sym.c;
    if (disc.hi() < 0) return InvertCase::CaseComplex;
    if (disc.lo() >= 0) {
        const Interval r = iv_sqrt(disc);
        if (sym.b.lo() > r.hi()) return InvertCase::CaseReal;
        if (sym.b.hi() < r.lo()) return InvertCase::NotInvertible;
        throw IndeterminateSign();
    }
    throw IndeterminateSign();
}

// Certified norms of the inverse symbol:
//   m1 = sup_xi |l(xi)^{-1}|_2          (the M1 norm; also |L^{-1}|_{B(L^2)})
//   m2 = max_i sqrt(sum_j |l^{-1}_{ij}|_{L^2(R)}^2)   (the M2 norm)
struct MNorms {
    Interval m1, m2;
    Interval sigma0; // certified lower bound of |det l| over the line
};

namespace model_detail {

// branch-and-bound supremum of f over [0, send]
inline Interval certified_sup(const std::function<Interval(const Interval&)>& f, double send, double rel_tol,
                              int max_boxes) {
    struct Box {
        double lo, hi;
        double up;
    };
    std::deque<Box> queue;
    auto push = [&](double lo, double hi) {
        const Interval v = f(Interval(lo, hi));
        queue.push_back({lo, hi, v.hi()});
    };
    double best_lo = f(Interval(0.0)).lo();
    push(0.0, send);
    double global_up = queue.front().up;
    int boxes = 1;
    while (boxes < max_boxes) {
        // find the box with largest upper bound
        std::size_t arg = 0;
        global_up = -1e308;
        for (std::size_t i = 0; i < queue.size(); ++i)
            if (queue[i].up > global_up) {
                global_up = queue[i].up;
                arg = i;
            }
        if (global_up <= best_lo * (1.0 + rel_tol) + 1e-300) break;
        const Box b = queue[arg];
        queue.erase(queue.begin() + (long)arg);
        const double m = 0.5 * (b.lo + b.hi);
        best_lo = std::max(best_lo, f(Interval(m)).lo());
        push(b.lo, m);
        push(m, b.hi);
        boxes += 1;
        if (b.hi - b.lo < 1e-14 * std::max(1.0, std::fabs(b.hi))) break;
    }
    global_up = best_lo;
    for (const auto& b : queue) global_up = std::max(global_up, b.up);
    return Interval(std::min(best_lo, global_up), global_up);
}

inline Interval certified_inf(const std::function<Interval(const Interval&)>& f, double send, double rel_tol,
                              int max_boxes) {
    auto neg = [&f](const Interval& s) { return -f(s); };
    const Interval r = certified_sup(neg, send, rel_tol, max_boxes);
    return -r;
}

} // namespace model_detail

inline Interval inv_symbol_specnorm(const SymbolMatrix& sym, const Interval& s) {
    const Interval den = sym.lden(s);
    if (den.contains(0.0)) return Interval(0.0, 1e308);
    // l^{-1} = adj(l) / det(l)
    const Interval a = sym.l22(s) / den;
    const Interval b = -sym.l12(s) / den;
    const Interval c = -sym.l21(s) / den;
    const Interval d = sym.l11(s) / den;
    return spectral_norm_2x2(a, b, c, d);
}

struct TailBoundFailure : IntervalError {
    TailBoundFailure() : IntervalError("asymptotic symbol tail does not dominate at the chosen cutoff") {}
};

inline MNorms m_norms_of_l_inverse(const DerivedParams& dp, const ThomasParams& p, double rel_tol = 1e-4,
                                   int max_boxes = 4000) {
    if (check_invertibility(dp, p) == InvertCase::NotInvertible)
        throw IntervalError("symbol is not invertible");
    const SymbolMatrix sym(dp, p);

    // cutoff s* with certified p(s) >= nu s^2 / 2 beyond it
    double sstar = 4.0;
    for (int it = 0; it < 200; ++it) {
        const Interval ss(sstar);
        const Interval margin = p.nu * iv_sqr(ss) - Interval(2.0) * iv_abs(sym.b) * ss - Interval(2.0) * iv_abs(sym.c);
        if (margin.lo() >= 0) break;
        sstar *= 2.0;
        if (it == 199) throw TailBoundFailure();
    }

    auto spec = [&sym](const Interval& s) { return inv_symbol_specnorm(sym, s); };

    MNorms out;
    Interval grid_sup = model_detail::certified_sup(spec, sstar, rel_tol, max_boxes);
    // tail majorant: |l^{-1}|_2 <= |l^{-1}|_F <= K / s for s >= s*
    const Interval sst(sstar);
    auto entryK = [&](const Interval& A, const Interval& B) {
        return Interval(2.0) / p.nu * (A / sst + B);
    };
    const Interval K11 = entryK(p.nu3, Interval(1.0));
    const Interval K12 = entryK(iv_abs(dp.lambda7), Interval(0.0));
    const Interval K21 = entryK(iv_abs(dp.lambda5), Interval(0.0));
    const Interval K22 = entryK(iv_abs(dp.lambda6 - Interval(1.0)), p.nu);
    const Interval Kf = iv_sqrt(iv_sqr(K11) + iv_sqr(K12) + iv_sqr(K21) + iv_sqr(K22));
    const Interval tail_m1 = Kf / sst;
    out.m1 = Interval(grid_sup.lo(), std::max(grid_sup.hi(), tail_m1.hi()));

    // sigma0: certified infimum of |det l|
    auto denf = [&sym](const Interval& s) { return iv_abs(sym.lden(s)); };
    const Interval grid_inf = model_detail::certified_inf(denf, sstar, rel_tol, max_boxes);
    const Interval tail_den = p.nu * iv_sqr(sst) * Interval(0.5);
    out.sigma0 = Interval(std::max(0.0, std::min(grid_inf.lo(), tail_den.lo())),
                          std::max(0.0, grid_inf.hi()));

    // M2 norm: certified Riemann enclosures of the entrywise L^2 integrals in xi
    const Interval two_pi_sq = iv_sqr(iv_two_pi());
    auto s_of_xi = [&two_pi_sq](const Interval& xi) { return two_pi_sq * iv_sqr(xi); };
    const double xi_star = std::sqrt(sstar) / (2.0 * 3.14159265358979);
    auto entry = [&](int i, int j, const Interval& s) -> Interval {
        const Interval den = sym.lden(s);
        if (den.contains(0.0)) return Interval(-1e154, 1e154);
        if (i == 0 && j == 0) return sym.l22(s) / den;
        if (i == 0 && j == 1) return -sym.l12(s) / den;
        if (i == 1 && j == 0) return -sym.l21(s) / den;
        return sym.l11(s) / den;
    };

    auto l2sq_integral = [&](int i, int j, const Interval& Kent) -> Interval {
        // finite part on [0, xi*] by adaptive interval Riemann sums
        struct Box {
            double lo, hi;
            Interval val;
        };
        auto boxval = [&](double lo, double hi) {
            const Interval xs(lo, hi);
            return iv_sqr(entry(i, j, s_of_xi(xs)));
        };
        std::deque<Box> boxes;
        const int initial = 64;
        for (int k = 0; k < initial; ++k) {
            const double lo = xi_star * k / initial, hi = xi_star * (k + 1) / initial;
            boxes.push_back({lo, hi, boxval(lo, hi)});
        }
        const int refine_budget = max_boxes;
        for (int it = 0; it < refine_budget; ++it) {
            double worst = 0.0;
            std::size_t arg = 0;
            for (std::size_t q = 0; q < boxes.size(); ++q) {
                const double contribution = boxes[q].val.width() * (boxes[q].hi - boxes[q].lo);
                if (contribution > worst) {
                    worst = contribution;
                    arg = q;
                }
            }
            Interval total(0.0);
            for (const auto& bx : boxes) total += bx.val * Interval(bx.hi - bx.lo);
            if (worst <= rel_tol * std::max(1e-300, std::fabs(total.hi())) / double(boxes.size() ? boxes.size() : 1))
                break;
            const Box bx = boxes[arg];
            boxes.erase(boxes.begin() + (long)arg);
            const double m = 0.5 * (bx.lo + bx.hi);
            boxes.push_back({bx.lo, m, boxval(bx.lo, m)});
            boxes.push_back({m, bx.hi, boxval(m, bx.hi)});
        }
        Interval total(0.0);
        for (const auto& bx : boxes) total += bx.val * Interval(bx.hi - bx.lo);
        // tail: |entry| <= K/(4 pi^2 xi^2) for xi >= xi*, integral of square = K^2/(16 pi^4 * 3 xi*^3)
        const Interval xs(xi_star);
        const Interval tail =
            iv_sqr(Kent) / (iv_sqr(two_pi_sq) * Interval(3.0) * iv_pow(xs, 3));
        Interval half = total + Interval(0.0, tail.hi());
        return Interval(2.0) * half; // symmetric in xi
    };

    const Interval i11 = l2sq_integral(0, 0, K11);
    const Interval i12 = l2sq_integral(0, 1, K12);
    const Interval i21 = l2sq_integral(1, 0, K21);
    const Interval i22 = l2sq_integral(1, 1, K22);
    const Interval row1 = iv_sqrt(i11 + i12), row2 = iv_sqrt(i21 + i22);
    out.m2 = iv_max(row1, row2);
    return out;
}

inline Interval kappa0(const ThomasParams& p) {
    return Interval(4.0) * p.nu2 / (Interval(4.0) * p.nu2 - Interval(1.0));
}

struct KappaConstants {
    Interval k0, k1, k2, k3, k4;
};

inline KappaConstants kappa_constants(const DerivedParams& dp, const ThomasParams& p, const Interval& m1,
                                      const Interval& m2) {
    KappaConstants k;
    k.k0 = kappa0(p);
    k.k1 = m1 * m2;
    k.k2 = m2 * (iv_abs(dp.lambda3) + p.nu1);
    k.k3 = iv_abs(dp.lambda4) + p.nu1 * iv_abs(dp.lambda1);
    k.k4 = iv_abs(dp.lambda6) + iv_abs(dp.lambda7);
    return k;
}

// ---- nonlinearity assembly ----

struct LocalizedNonlinearity {
    CosineSeq Psi, Phi, Psi1, Psi2, Psi3;
};

// Psi  = lambda3 U1^2 + lambda4 U1 - nu1 U1*U2 - nu1 lambda1 U2
// Phi  = 1 + U1 + lambda1 + nu2 (U1 + lambda1)^2
// Psi1 = d(Phi)/dU1,  Psi2 = d(Psi)/dU2,  Psi3 = d(Psi)/dU1
inline LocalizedNonlinearity assemble_localized(const SeqPair& ub, const DerivedParams& dp,
                                                const ThomasParams& p) {
    const CosineSeq one = e0_seq(ub.u1.d, ub.u1.tau);
    const CosineSeq u1l = ub.u1 + dp.lambda1 * one;
    LocalizedNonlinearity n;
    n.Psi = dp.lambda3 * conv(ub.u1, ub.u1) + dp.lambda4 * ub.u1 - p.nu1 * conv(ub.u1, ub.u2) -
            (p.nu1 * dp.lambda1) * ub.u2;
    n.Phi = one + ub.u1 + dp.lambda1 * one + p.nu2 * conv(u1l, u1l);
    n.Psi1 = one + (Interval(2.0) * p.nu2) * u1l;
    n.Psi2 = -p.nu1 * u1l;
    n.Psi3 = (Interval(2.0) * dp.lambda3) * ub.u1 + dp.lambda4 * one - p.nu1 * ub.u2;
    return n;
}

struct PeriodicNonlinearity {
    CosineSeq Psi_p, Phi_p, Psi_p1, Psi_p2;
};

// Psi_p  = -(nu1 nu U1^2 - nu1 U1*U2),   Phi_p  = 1 + U1 + nu2 U1^2
// Psi_p1 = d g_p / d U1 numerator: -nu1(-U2 + 2 nu U1 + nu U1^2 + nu2 U1^2*U2)
// Psi_p2 = d g_p / d U2 numerator: nu1 U1
inline PeriodicNonlinearity assemble_periodic(const SeqPair& ub, const ThomasParams& p) {
    const CosineSeq one = e0_seq(ub.u1.d, ub.u1.tau);
    const CosineSeq u1sq = conv(ub.u1, ub.u1);
    PeriodicNonlinearity n;
    n.Psi_p = p.nu1 * conv(ub.u1, ub.u2) - (p.nu1 * p.nu) * u1sq;
    n.Phi_p = one + ub.u1 + p.nu2 * u1sq;
    n.Psi_p1 = p.nu1 * ub.u2 - (Interval(2.0) * p.nu1 * p.nu) * ub.u1 - (p.nu1 * p.nu) * u1sq -
               (p.nu1 * p.nu2) * conv(u1sq, ub.u2);
    n.Psi_p2 = p.nu1 * ub.u1;
    return n;
}

// D1 g identity data used by property tests:
// w1 D1w2 - w2 D1w1 = mu1 u1^2 u2 + mu2 u1^2 + mu3 u1 u2 + mu4 u1 + mu5 u2 + mu6.
inline Interval mu_poly_value(const DerivedParams& dp, const Interval& u1, const Interval& u2) {
    return dp.mu1 * iv_sqr(u1) * u2 + dp.mu2 * iv_sqr(u1) + dp.mu3 * u1 * u2 + dp.mu4 * u1 + dp.mu5 * u2 +
           dp.mu6;
}

} // namespace tcap
