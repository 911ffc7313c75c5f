#pragma once

// Certifier for branches of periodic solutions parameterized by
// pseudo-arclength Chebyshev series: interval Chebyshev families over the
// sequence space, the augmented system F_c, the family approximate inverse
// A_c(s), the uniform Y0/Z1/Z2 bounds, and the segment gluing condition.
//
// Families of order p and q multiply exactly through evaluation at the
// Chebyshev nodes of a power-of-two grid M >= p + q (the interval DCT pair
// is exact for polynomials of degree <= M) with one certified convolution
// per node.

#include <Eigen/Dense>

#include "tcap/io.hpp"
#include "tcap/periodic.hpp"

namespace tcap {

struct OrderOverflow : IntervalError {
    OrderOverflow() : IntervalError("chebyshev product order too small for exactness") {}
};
struct GluingFailed : IntervalError {
    GluingFailed() : IntervalError("segment gluing condition failed") {}
};

// ---- scalar Chebyshev families (coefficients c_0 + 2 sum c_k T_k) ----

using ScalarFamily = std::vector<Interval>;

inline Interval con_norm(const ScalarFamily& f) {
    Interval s(0.0);
    for (std::size_t k = 0; k < f.size(); ++k) s += Interval(alpha_n(k)) * iv_abs(f[k]);
    return s;
}

inline Interval eval_at_pm1(const ScalarFamily& f, bool plus_one) {
    Interval s = f.empty() ? Interval(0.0) : f[0];
    for (std::size_t k = 1; k < f.size(); ++k) {
        const Interval t = Interval(2.0) * f[k];
        s = (plus_one || k % 2 == 0) ? s + t : s - t;
    }
    return s;
}

// exact product via the T_m T_n = (T_{m+n} + T_{|m-n|})/2 linearization
inline ScalarFamily cheb_mul(const ScalarFamily& a, const ScalarFamily& b, std::size_t out_order,
                             bool exact_required = true) {
    if (a.empty() || b.empty()) return {};
    const std::size_t deg = a.size() + b.size() - 2;
    if (exact_required && out_order < deg) throw OrderOverflow();
    ScalarFamily r(std::min(out_order, deg) + 1, Interval(0.0));
    for (std::size_t m = 0; m < a.size(); ++m)
        for (std::size_t n = 0; n < b.size(); ++n) {
            // alpha-weighted coefficients: contribution of a_m b_n to slots m+n and |m-n|
            const Interval w = Interval(0.5 * alpha_n(m) * alpha_n(n)) * a[m] * b[n];
            const std::size_t ip = m + n, im = m >= n ? m - n : n - m;
            if (ip < r.size()) r[ip] += w / Interval(alpha_n(ip));
            if (im < r.size()) r[im] += w / Interval(alpha_n(im));
        }
    return r;
}

// ---- sequence-valued Chebyshev families ----

struct SeqFamily {
    std::vector<CosineSeq> c; // Chebyshev coefficients

    std::size_t order() const { return c.empty() ? 0 : c.size() - 1; }
    std::size_t max_support() const {
        std::size_t m = 0;
        for (const auto& s : c) m = std::max(m, s.support());
        return m;
    }
};

inline Interval con_norm(const SeqFamily& f) {
    Interval s(0.0);
    for (std::size_t k = 0; k < f.c.size(); ++k)
        s += Interval(alpha_n(k)) * norm(f.c[k], SeqNorm::l1_tau);
    return s;
}

inline CosineSeq eval_at_pm1(const SeqFamily& f, bool plus_one) {
    CosineSeq s = f.c.at(0);
    for (std::size_t k = 1; k < f.c.size(); ++k) {
        const CosineSeq t = Interval(2.0) * f.c[k];
        s = (plus_one || k % 2 == 0) ? s + t : s - t;
    }
    return s;
}

inline SeqFamily project(const SeqFamily& f, std::size_t N, ProjSide side) {
    SeqFamily r = f;
    for (auto& s : r.c) s = project(s, N, side);
    return r;
}

inline SeqFamily fam_add(const SeqFamily& a, const SeqFamily& b) {
    SeqFamily r;
    const std::size_t n = std::max(a.c.size(), b.c.size());
    const CosineSeq zero(a.c.empty() ? b.c[0].d : a.c[0].d, a.c.empty() ? b.c[0].tau : a.c[0].tau, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const CosineSeq& x = k < a.c.size() ? a.c[k] : zero;
        const CosineSeq& y = k < b.c.size() ? b.c[k] : zero;
        r.c.push_back(x + y);
    }
    return r;
}

inline SeqFamily fam_scale(const Interval& s, const SeqFamily& a) {
    SeqFamily r = a;
    for (auto& x : r.c) x = s * x;
    return r;
}

// node values of a sequence family at the M+1 Chebyshev nodes (M power of 2)
inline std::vector<CosineSeq> fam_to_values(const SeqFamily& f, std::size_t M) {
    if (f.order() > M) throw OrderOverflow();
    const std::size_t supp = f.max_support();
    const Interval d = f.c.at(0).d, tau = f.c.at(0).tau;
    std::vector<CosineSeq> vals(M + 1, CosineSeq(d, tau, supp));
    std::vector<Interval> slice(f.c.size());
    for (std::size_t n = 0; n <= supp; ++n) {
        for (std::size_t k = 0; k < f.c.size(); ++k) slice[k] = f.c[k].at(n);
        const std::vector<Interval> v = cheb_coeffs_to_values(slice, M);
        for (std::size_t k = 0; k <= M; ++k) vals[k].c[n] = v[k];
    }
    return vals;
}

inline SeqFamily fam_from_values(const std::vector<CosineSeq>& vals, std::size_t M, std::size_t out_order) {
    const std::size_t supp = [&] {
        std::size_t m = 0;
        for (const auto& s : vals) m = std::max(m, s.support());
        return m;
    }();
    const Interval d = vals.at(0).d, tau = vals.at(0).tau;
    SeqFamily out;
    out.c.assign(out_order + 1, CosineSeq(d, tau, supp));
    std::vector<Interval> slice(M + 1);
    for (std::size_t n = 0; n <= supp; ++n) {
        for (std::size_t k = 0; k <= M; ++k) slice[k] = vals[k].at(n);
        const std::vector<Interval> c = cheb_values_to_coeffs(slice, M);
        for (std::size_t k = 0; k <= out_order; ++k) out.c[k].c[n] = c[k];
    }
    return out;
}

inline SeqFamily fam_mid(const SeqFamily& f) {
    SeqFamily r = f;
    for (auto& s : r.c)
        for (auto& c : s.c) c = Interval(c.mid());
    return r;
}

// con-norm of the radius part f - mid(f); certified upper bound
inline Interval fam_rad_con(const SeqFamily& f) {
    Interval total(0.0);
    for (std::size_t k = 0; k < f.c.size(); ++k) {
        Interval tp(1.0);
        Interval s(0.0);
        for (std::size_t n = 0; n < f.c[k].c.size(); ++n) {
            const Interval& x = f.c[k].c[n];
            const double m = x.mid();
            const double r = std::max(rnd::sub_up(x.hi(), m), rnd::sub_up(m, x.lo()));
            s += Interval(alpha_n(n)) * Interval(r) * tp;
            tp = tp * f.c[k].tau;
        }
        total += Interval(alpha_n(k)) * s;
    }
    return total;
}

// exact family product: order = sum of orders, one convolution per node
inline SeqFamily fam_mul(const SeqFamily& a, const SeqFamily& b) {
    const std::size_t deg = a.order() + b.order();
    if (deg == 0) {
        SeqFamily r;
        r.c.push_back(conv(a.c.at(0), b.c.at(0)));
        return r;
    }
    const std::size_t M = fftdet::next_pow2(deg);
    const auto va = fam_to_values(a, M);
    const auto vb = fam_to_values(b, M);
    std::vector<CosineSeq> vc(M + 1);
    for (std::size_t k = 0; k <= M; ++k) vc[k] = conv(va[k], vb[k]);
    return fam_from_values(vc, M, deg);
}

inline SeqFamily fam_mul_scalar_family(const ScalarFamily& a, const SeqFamily& b) {
    SeqFamily af;
    const Interval d = b.c.at(0).d, tau = b.c.at(0).tau;
    for (const Interval& x : a) af.c.push_back(e0_seq(d, tau, x));
    return fam_mul(af, b);
}

// ---- branch segment certification ----

struct BranchSegmentOptions {
    std::size_t N = 0;
    Interval tau{1.0};
    Interval R{0.0};
};

struct BranchSegmentCertificate {
    bool pass = false;
    Interval Y0s, Z1s, Z2s, R;
    Interval r_min, r_max;
    Interval AcN_norm, L_inf, defect, defect_sq;
    Interval Z11, Z12, Zinfs;
    Interval Y01, Y02, Y03, Y04;
    std::size_t N0 = 0, N = 0, Nc = 0;
    Interval d{1.0}, tau{1.0};
    Interval nu5_start, nu5_end;
};

namespace brdet {

struct Workspace {
    ThomasParams p; // nu5 ignored; the family carries it
    std::size_t N0 = 0, N = 0, Nc = 0;
    Interval d{1.0}, tau{1.0};
    ScalarFamily nu5, dnu5;
    SeqFamily U1, U2, dU1, dU2;
    SeqFamily Phi, Psi, Psi1, Psi2; // periodic nonlinearity families
    SeqFamily Phi_inv, Dfam, Dmid, Phi_inv_sq;
    Interval defect, defect_sq, inv_norm_con, inv_sq_norm_con, rad_D;
    SeqFamily scrV1, scrV2, V1N, V2N;
    std::vector<IMatrix> Ac; // point coefficient matrices, size 1+2(N+1)
    Interval AcN_norm, L_inf;
    std::vector<Interval> lp11, lp21, lp22;
};

inline std::size_t border_dim(std::size_t N) { return 1 + 2 * (N + 1); }

// Weights of the X_tau norm on bordered vectors
// [nu5 slot | u1 modes 0..mc-1 | u2 modes 0..mc-1].
inline std::vector<Interval> xtau_weights(std::size_t mode_count, const Interval& tau) {
    std::vector<Interval> w(1 + 2 * mode_count, Interval(1.0));
    Interval tp(1.0);
    for (std::size_t m = 0; m < mode_count; ++m) {
        w[1 + m] = Interval(alpha_n(m)) * tp;
        w[1 + mode_count + m] = w[1 + m];
        tp = tp * tau;
    }
    return w;
}

// X_tau operator norm (max weighted column sum) of a bordered matrix
inline Interval bordered_norm_xtau(const IMatrix& m, std::size_t row_modes, std::size_t col_modes,
                                   const Interval& tau) {
    const std::vector<Interval> wr = xtau_weights(row_modes, tau);
    const std::vector<Interval> wc = xtau_weights(col_modes, tau);
    if (wr.size() != m.rows() || wc.size() != m.cols())
        throw DimensionMismatch();
    Interval best(0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Interval s(0.0);
        for (std::size_t i = 0; i < m.rows(); ++i) s += wr[i] * iv_abs(m(i, j));
        best = iv_max(best, s / wc[j]);
    }
    return best;
}

// bordered vector X_tau norm
inline Interval bordered_vec_norm(const std::vector<Interval>& v, std::size_t mode_count,
                                  const Interval& tau) {
    const std::vector<Interval> w = xtau_weights(mode_count, tau);
    Interval s(0.0);
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * iv_abs(v[i]);
    return s;
}

// float truncated bordered Jacobian [phase row; D_{nu5} F_p | D_U F_p] at window N
inline Eigen::MatrixXd bordered_jacobian_window(const ParamsD& p, const ModelD& m, const FloatSeqPair& u,
                                                const FloatSeqPair& du, std::size_t N) {
    const std::size_t n0 = u.support();
    const std::size_t L = fftdet::next_pow2(8 * (n0 + 1));
    const std::vector<double> u1g = coeffs_to_grid(u.u1, L), u2g = coeffs_to_grid(u.u2, L);
    const auto ev = canddet::eval_nonlinearity(SystemKind::periodic, p, m, u1g, u2g);
    const Eigen::MatrixXd c1 = canddet::conv_matrix(grid_to_coeffs(ev.v1, 2 * n0), N);
    const Eigen::MatrixXd c2 = canddet::conv_matrix(grid_to_coeffs(ev.v2, 2 * n0), N);
    const long nn = (long)N + 1;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(1 + 2 * nn, 1 + 2 * nn);
    for (long q = 0; q < nn; ++q) {
        const double w = q == 0 ? 1.0 : 2.0;
        j(0, 1 + q) = w * du.u1[(std::size_t)q];
        j(0, 1 + nn + q) = w * du.u2[(std::size_t)q];
    }
    j.block(1, 1, nn, nn) = c1;
    j.block(1, 1 + nn, nn, nn) = c2;
    for (long q = 0; q < nn; ++q) {
        double lr[4];
        canddet::symbol_rows(SystemKind::periodic, p, m, double(q) / (2.0 * u.d), lr);
        j(1 + q, 1 + q) += lr[0];
        j(1 + nn + q, 1 + q) = lr[2];
        j(1 + nn + q, 1 + nn + q) = lr[3];
    }
    j(1 + nn, 0) = -p.nu3;
    return j;
}

struct Workspace2; // forward

} // namespace brdet

// ---- workspace construction ----

namespace brdet {

inline SeqFamily transpose_family(const std::vector<std::vector<double>>& data, std::size_t nc,
                                  const Interval& d, const Interval& tau) {
    // data layout: [fourier mode][cheb coefficient]
    const std::size_t n0 = data.size() - 1;
    SeqFamily f;
    f.c.assign(nc + 1, CosineSeq(d, tau, n0));
    for (std::size_t n = 0; n <= n0; ++n)
        for (std::size_t k = 0; k <= nc && k < data[n].size(); ++k) f.c[k].c[n] = Interval(data[n][k]);
    return f;
}

inline SeqFamily e0_family(const Interval& d, const Interval& tau, const Interval& v = Interval(1.0)) {
    SeqFamily f;
    f.c.push_back(e0_seq(d, tau, v));
    return f;
}

inline void build_families(Workspace& w, const FloatChebBranch& fb) {
    const Interval d = w.d, tau = w.tau;
    w.U1 = transpose_family(fb.u1, fb.nc, d, tau);
    w.U2 = transpose_family(fb.u2, fb.nc, d, tau);
    w.dU1 = transpose_family(fb.du1, fb.nc, d, tau);
    w.dU2 = transpose_family(fb.du2, fb.nc, d, tau);
    w.nu5.assign(fb.nc + 1, Interval(0.0));
    w.dnu5.assign(fb.nc + 1, Interval(0.0));
    for (std::size_t k = 0; k <= fb.nc; ++k) {
        w.nu5[k] = Interval(fb.nu5[k]);
        w.dnu5[k] = Interval(fb.dnu5[k]);
    }

    const Interval nu = w.p.nu, nu1 = w.p.nu1, nu2 = w.p.nu2;
    const SeqFamily u1sq = fam_mul(w.U1, w.U1);
    w.Phi = fam_add(e0_family(d, tau), fam_add(w.U1, fam_scale(nu2, u1sq)));
    w.Psi = fam_add(fam_scale(nu1, fam_mul(w.U1, w.U2)), fam_scale(-(nu1 * nu), u1sq));
    w.Psi1 = fam_add(fam_add(fam_scale(nu1, w.U2), fam_scale(Interval(-2.0) * nu1 * nu, w.U1)),
                     fam_add(fam_scale(-(nu1 * nu), u1sq), fam_scale(-(nu1 * nu2), fam_mul(u1sq, w.U2))));
    w.Psi2 = fam_scale(nu1, w.U1);

    // float reciprocal family of order 2 Nc
    {
        const std::size_t order = 2 * fb.nc;
        const std::size_t M = fftdet::next_pow2(std::max<std::size_t>(1, order));
        // float Phi at nodes
        std::vector<std::vector<double>> u1vals(fb.n0 + 1);
        for (std::size_t n = 0; n <= fb.n0; ++n) u1vals[n] = cheb_coeffs_to_values_d(fb.u1[n], M);
        std::vector<std::vector<double>> invvals(M + 1);
        for (std::size_t k = 0; k <= M; ++k) {
            CosineSeq phik(d, tau, fb.n0);
            for (std::size_t n = 0; n <= fb.n0; ++n) phik.c[n] = Interval(u1vals[n][k]);
            CosineSeq phif = e0_seq(d, tau) + phik + nu2 * conv(phik, phik);
            for (auto& cc : phif.c) cc = Interval(cc.mid());
            const CosineSeq inv = approx_inverse(phif, 2 * fb.n0);
            invvals[k].resize(2 * fb.n0 + 1);
            for (std::size_t n = 0; n <= 2 * fb.n0; ++n) invvals[k][n] = inv.c[n].mid();
        }
        w.Phi_inv.c.assign(order + 1, CosineSeq(d, tau, 2 * fb.n0));
        std::vector<double> slice(M + 1);
        for (std::size_t n = 0; n <= 2 * fb.n0; ++n) {
            for (std::size_t k = 0; k <= M; ++k) slice[k] = invvals[k][n];
            const std::vector<double> coef = cheb_values_to_coeffs_d(slice, M);
            for (std::size_t k = 0; k <= order && k < coef.size(); ++k)
                w.Phi_inv.c[k].c[n] = Interval(coef[k]);
        }
    }

    // defect families: D = 1 - Phi*Phi_inv and 1 - E^2 = D (2 - D).  The
    // node transforms smear interval widths across all nodes, so the wide
    // factor D enters products only through its midpoint family plus a
    // scalar radius carried separately (w.rad_D).
    SeqFamily E = fam_mul(w.Phi, w.Phi_inv);
    w.Dfam = fam_scale(Interval(-1.0), E);
    w.Dfam.c[0].c[0] += Interval(1.0);
    w.defect = con_norm(w.Dfam);
    w.Dmid = fam_mid(w.Dfam);
    w.rad_D = fam_rad_con(w.Dfam);
    SeqFamily two_minus = fam_scale(Interval(-1.0), w.Dmid);
    two_minus.c[0].c[0] += Interval(2.0);
    const SeqFamily d2mid = fam_mul(w.Dmid, two_minus);
    // |D(2-D) - Dmid(2-Dmid)| <= rad (2 + 2 |Dmid| + rad)
    w.defect_sq = con_norm(d2mid) +
                  w.rad_D * (Interval(2.0) + Interval(2.0) * con_norm(w.Dmid) + w.rad_D);
    w.Phi_inv_sq = fam_mul(w.Phi_inv, w.Phi_inv);
    w.inv_norm_con = con_norm(w.Phi_inv);
    w.inv_sq_norm_con = con_norm(w.Phi_inv_sq);

    w.scrV1 = fam_mul(w.Psi1, w.Phi_inv_sq);
    w.scrV2 = fam_mul(w.Psi2, w.Phi_inv);
    w.V1N = project(w.scrV1, w.N, ProjSide::leq);
    w.V2N = project(w.scrV2, w.N, ProjSide::leq);
}

inline void build_symbols(Workspace& w, std::size_t upto) {
    w.lp11.resize(upto + 1);
    w.lp21.resize(upto + 1);
    w.lp22.resize(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
        const Interval s = SymbolMatrix::s_of_mode(n, w.d);
        w.lp11[n] = -w.p.nu * s - Interval(1.0);
        w.lp21[n] = w.p.nu3 * w.p.nu - Interval(1.0);
        w.lp22[n] = -s - w.p.nu3;
    }
}

inline void build_Ac(Workspace& w, const FloatChebBranch& fb, const ParamsD& pd, double hint) {
    const std::size_t M = fftdet::next_pow2(std::max<std::size_t>(1, fb.nc));
    std::vector<std::vector<double>> u1v(fb.n0 + 1), u2v(fb.n0 + 1), du1v(fb.n0 + 1), du2v(fb.n0 + 1);
    for (std::size_t n = 0; n <= fb.n0; ++n) {
        u1v[n] = cheb_coeffs_to_values_d(fb.u1[n], M);
        u2v[n] = cheb_coeffs_to_values_d(fb.u2[n], M);
        du1v[n] = cheb_coeffs_to_values_d(fb.du1[n], M);
        du2v[n] = cheb_coeffs_to_values_d(fb.du2[n], M);
    }
    const std::vector<double> nu5v = cheb_coeffs_to_values_d(fb.nu5, M);
    const std::size_t bd = border_dim(w.N);
    std::vector<Eigen::MatrixXd> inv_nodes(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
        FloatSeqPair u, du;
        u.d = du.d = fb.d;
        u.resize(fb.n0);
        du.resize(fb.n0);
        for (std::size_t n = 0; n <= fb.n0; ++n) {
            u.u1[n] = u1v[n][k];
            u.u2[n] = u2v[n][k];
            du.u1[n] = du1v[n][k];
            du.u2[n] = du2v[n][k];
        }
        ParamsD pk = pd;
        pk.nu5 = nu5v[k];
        const ModelD mk = derive_params_d(pk, hint);
        const Eigen::MatrixXd j = bordered_jacobian_window(pk, mk, u, du, w.N);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
        inv_nodes[k] = lu.inverse();
        if (!inv_nodes[k].allFinite()) throw SingularTruncation();
    }
    w.Ac.assign(fb.nc + 1, IMatrix(bd, bd));
    std::vector<double> slice(M + 1);
    for (std::size_t i = 0; i < bd; ++i)
        for (std::size_t j = 0; j < bd; ++j) {
            for (std::size_t k = 0; k <= M; ++k) slice[k] = inv_nodes[k]((long)i, (long)j);
            const std::vector<double> coef = cheb_values_to_coeffs_d(slice, M);
            for (std::size_t k = 0; k <= fb.nc && k < coef.size(); ++k) w.Ac[k](i, j) = Interval(coef[k]);
        }
    Interval s(0.0);
    for (std::size_t k = 0; k < w.Ac.size(); ++k)
        s += Interval(alpha_n(k)) * bordered_norm_xtau(w.Ac[k], w.N + 1, w.N + 1, w.tau);
    w.AcN_norm = s;

    const Interval sN = SymbolMatrix::s_of_mode(w.N + 1, w.d);
    const Interval m11 = w.p.nu * sN + Interval(1.0);
    const Interval m22 = sN + w.p.nu3;
    const Interval m21 = iv_abs(w.p.nu3 * w.p.nu - Interval(1.0));
    w.L_inf = Interval(1.0) / m11 + m21 / (m11 * m22) + Interval(1.0) / m22;
}

// (matrix family) x (bordered vector family) by direct Chebyshev
// linearization; vec[k] holds the windowed bordered vector coefficients.
inline std::vector<std::vector<Interval>> ac_apply_family(const Workspace& w,
                                                          const std::vector<std::vector<Interval>>& vec) {
    const std::size_t pa = w.Ac.size() - 1, pb = vec.size() - 1;
    const std::size_t bd = border_dim(w.N);
    std::vector<std::vector<Interval>> out(pa + pb + 1, std::vector<Interval>(bd, Interval(0.0)));
    for (std::size_t m = 0; m <= pa; ++m) {
        for (std::size_t n = 0; n <= pb; ++n) {
            const Interval wmn(0.5 * alpha_n(m) * alpha_n(n));
            const std::vector<Interval> prod = w.Ac[m] * vec[n];
            const std::size_t ip = m + n, im = m >= n ? m - n : n - m;
            for (std::size_t i = 0; i < bd; ++i) {
                const Interval t = wmn * prod[i];
                out[ip][i] += t / Interval(alpha_n(ip));
                out[im][i] += t / Interval(alpha_n(im));
            }
        }
    }
    return out;
}

inline Interval con_norm_bordered(const Workspace& w, const std::vector<std::vector<Interval>>& fam) {
    Interval s(0.0);
    for (std::size_t k = 0; k < fam.size(); ++k)
        s += Interval(alpha_n(k)) * bordered_vec_norm(fam[k], w.N + 1, w.tau);
    return s;
}

// windowed bordered coefficients of [scalar fam; r1 fam; r2 fam]
inline std::vector<std::vector<Interval>> bordered_window(const Workspace& w, const ScalarFamily* s0,
                                                          const SeqFamily* r1, const SeqFamily* r2) {
    std::size_t order = 0;
    if (s0) order = std::max(order, s0->size() ? s0->size() - 1 : 0);
    if (r1) order = std::max(order, r1->order());
    if (r2) order = std::max(order, r2->order());
    const std::size_t nn = w.N + 1, bd = border_dim(w.N);
    std::vector<std::vector<Interval>> out(order + 1, std::vector<Interval>(bd, Interval(0.0)));
    for (std::size_t k = 0; k <= order; ++k) {
        if (s0 && k < s0->size()) out[k][0] = (*s0)[k];
        if (r1 && k < r1->c.size())
            for (std::size_t n = 0; n < nn; ++n) out[k][1 + n] = r1->c[k].at(n);
        if (r2 && k < r2->c.size())
            for (std::size_t n = 0; n < nn; ++n) out[k][1 + nn + n] = r2->c[k].at(n);
    }
    return out;
}

struct Y0sParts {
    Interval y01, y02, y03, y04;
};

inline Interval bound_Y0_s(Workspace& w, Y0sParts* parts = nullptr) {
    // residual families: the phase component vanishes identically at the candidate
    const Interval d = w.d, tau = w.tau;
    SeqFamily g = fam_mul(w.Psi, w.Phi_inv);
    g.c[0].c[0] += w.p.nu4;
    SeqFamily r1 = g;
    for (std::size_t k = 0; k < w.U1.c.size(); ++k) {
        CosineSeq add(d, tau, w.U1.c[k].support());
        for (std::size_t n = 0; n <= w.U1.c[k].support(); ++n) add.c[n] = w.lp11[n] * w.U1.c[k].at(n);
        if (k < r1.c.size()) r1.c[k] = r1.c[k] + add;
    }
    SeqFamily r2;
    r2.c.assign(w.U1.c.size(), CosineSeq(d, tau, w.N0));
    for (std::size_t k = 0; k < w.U1.c.size(); ++k) {
        for (std::size_t n = 0; n <= w.N0; ++n)
            r2.c[k].c[n] = w.lp21[n] * w.U1.c[k].at(n) + w.lp22[n] * w.U2.c[k].at(n);
        r2.c[k].c[0] += -w.p.nu3 * w.nu5[k];
        if (k == 0) r2.c[k].c[0] += w.p.nu4;
    }

    const auto resid_win = bordered_window(w, nullptr, &r1, &r2);
    const Interval y01 = con_norm_bordered(w, ac_apply_family(w, resid_win));
    const Interval y02 =
        con_norm(project(r1, w.N, ProjSide::gt)) + con_norm(project(r2, w.N, ProjSide::gt));

    // q = Psi * Phi_inv * D through the midpoint of each wide factor, with
    // the radius cross-terms bounded in the con norm
    const SeqFamily pf = fam_mul(w.Psi, w.Phi_inv);
    const SeqFamily pf_mid = fam_mid(pf);
    const Interval rad_pf = fam_rad_con(pf);
    const SeqFamily q_mid = fam_mul(pf_mid, w.Dmid);
    const Interval q_err =
        rad_pf * (con_norm(w.Dmid) + w.rad_D) + con_norm(pf_mid) * w.rad_D;
    const Interval denom = Interval(1.0) - w.defect;
    if (!(denom.lo() > 0)) throw DefectNotContractive();
    const auto q_win = bordered_window(w, nullptr, &q_mid, nullptr);
    const Interval y03 =
        (con_norm_bordered(w, ac_apply_family(w, q_win)) + w.AcN_norm * q_err) / denom;
    const Interval y04 = (con_norm(project(q_mid, w.N, ProjSide::gt)) + q_err) / denom;
    if (parts) *parts = {y01, y02, y03, y04};
    return y01 + w.L_inf * y02 + y03 + w.L_inf * y04;
}

inline Interval bound_Z2_s(Workspace& w, const Interval& R) {
    const Interval nu = w.p.nu, nu1 = w.p.nu1, nu2 = w.p.nu2;
    const Interval d2 = Interval(2.0), d3 = Interval(3.0);
    const SeqFamily one = e0_family(w.d, w.tau);
    const SeqFamily u1sq = fam_mul(w.U1, w.U1);
    const SeqFamily u1cu = fam_mul(u1sq, w.U1);
    auto cn = [](const SeqFamily& f) { return con_norm(f); };
    const Interval z21 =
        cn(fam_add(fam_add(fam_scale(iv_sqr(nu2), fam_mul(u1cu, w.U2)), fam_scale(nu * nu2, u1cu)),
                   fam_add(fam_scale(d3 * nu * nu2, u1sq),
                           fam_add(fam_scale(-d3 * nu2, fam_mul(w.U1, w.U2)),
                                   fam_add(fam_scale(-nu, one), fam_scale(Interval(-1.0), w.U2)))))) +
        (cn(fam_add(fam_scale(Interval(-1.0), one),
                    fam_add(fam_scale(-d3 * nu2, w.U1), fam_scale(iv_sqr(nu2), u1cu)))) +
         cn(fam_add(fam_add(fam_scale(Interval(6.0) * nu * nu2, w.U1), fam_scale(d3 * nu * nu2, u1sq)),
                    fam_add(fam_scale(-d3 * nu2, w.U2),
                            fam_scale(d3 * iv_sqr(nu2), fam_mul(u1sq, w.U2)))))) *
            R +
        (cn(fam_add(fam_scale(-d3 * nu2, one), fam_scale(d3 * iv_sqr(nu2), u1sq))) +
         cn(fam_add(fam_add(fam_scale(d3 * nu * nu2, one), fam_scale(d3 * nu * nu2, w.U1)),
                    fam_scale(d3 * iv_sqr(nu2), fam_mul(w.U1, w.U2))))) *
            iv_sqr(R) +
        (cn(fam_scale(d3 * iv_sqr(nu2), w.U1)) +
         cn(fam_add(fam_scale(nu * nu2, one), fam_scale(iv_sqr(nu2), w.U2)))) *
            iv_pow(R, 3) +
        iv_sqr(nu2) * iv_pow(R, 4);

    const Interval ball_den = Interval(1.0) - w.defect - R * w.inv_norm_con;
    if (!(ball_den.lo() > 0)) throw BallNotContractive();
    const Interval ball = w.inv_norm_con / ball_den;
    const Interval z22 = iv_pow(ball, 3);
    const Interval z23 =
        (cn(fam_add(one, fam_scale(-nu2, u1sq))) + d2 * nu2 * cn(w.U1) * R + nu2 * iv_sqr(R)) *
        iv_sqr(ball);
    return d2 * nu1 * (w.AcN_norm + w.L_inf) * (z21 * z22 + z23);
}

struct Z1sParts {
    Interval z11, z12, zinf;
};

inline Interval bound_Z1_s(Workspace& w, Z1sParts* parts = nullptr) {
    const std::size_t N = w.N, nn = N + 1, bd = border_dim(N);
    const std::size_t col_modes = 2 * N + 1, ncl = 1 + 2 * col_modes;
    const std::size_t nc = w.Ac.size() - 1;
    const std::size_t deg = 8 * std::max<std::size_t>(1, nc);
    const std::size_t M = fftdet::next_pow2(deg);

    // A_c node values: interval transform once per entry, stored as midpoint
    // doubles with a single global radius bound
    std::vector<double> ac_mid((M + 1) * bd * bd);
    double ac_rad = 0.0;
    {
        std::vector<Interval> slice(nc + 1);
        for (std::size_t i = 0; i < bd; ++i)
            for (std::size_t j = 0; j < bd; ++j) {
                for (std::size_t k = 0; k <= nc; ++k) slice[k] = w.Ac[k](i, j);
                const std::vector<Interval> vals = cheb_coeffs_to_values(slice, M);
                for (std::size_t k = 0; k <= M; ++k) {
                    const Interval& v = vals[k];
                    ac_mid[k * bd * bd + i * bd + j] = v.mid();
                    ac_rad = std::max(ac_rad, 0.5 * v.width() + 1e-300);
                }
            }
    }

    // V node values and tangent node values
    const auto v1vals = fam_to_values(w.V1N, M);
    const auto v2vals = fam_to_values(w.V2N, M);
    const auto du1win = project(w.dU1, N, ProjSide::leq);
    const auto du2win = project(w.dU2, N, ProjSide::leq);
    const auto du1vals = fam_to_values(du1win, M);
    const auto du2vals = fam_to_values(du2win, M);

    // accumulate per-(coefficient, column) weighted column sums
    const std::vector<Interval> wr = xtau_weights(nn, w.tau);
    const std::vector<Interval> wc = xtau_weights(col_modes, w.tau);
    std::vector<Interval> colsum((M + 1) * ncl, Interval(0.0));

    std::vector<Interval> mcol(bd), kvals(M + 1);
    std::vector<Interval> yv(bd);
    std::vector<std::vector<Interval>> kcol(M + 1, std::vector<Interval>(bd, Interval(0.0)));
    for (std::size_t col = 0; col < ncl; ++col) {
        // column `col` of M(s_k) restricted to the <=N row window
        for (std::size_t k = 0; k <= M; ++k) {
            std::fill(mcol.begin(), mcol.end(), Interval(0.0));
            if (col == 0) {
                mcol[1 + nn] = -w.p.nu3; // d(second component)/d nu5 at mode 0
            } else {
                const std::size_t comp = (col - 1) / col_modes;
                const std::size_t j = (col - 1) % col_modes;
                if (comp == 0) {
                    mcol[0] = Interval(j <= N ? alpha_n(j) : 0.0) * du1vals[k].at(j);
                    const CosineSeq& v1 = v1vals[k];
                    for (std::size_t i = 0; i < nn; ++i)
                        mcol[1 + i] = (j == 0) ? v1.at(i) : v1.at(i >= j ? i - j : j - i) + v1.at(i + j);
                    if (j < nn) {
                        mcol[1 + j] += w.lp11[j];
                        mcol[1 + nn + j] = w.lp21[j];
                    }
                } else {
                    mcol[0] = Interval(j <= N ? alpha_n(j) : 0.0) * du2vals[k].at(j);
                    const CosineSeq& v2 = v2vals[k];
                    for (std::size_t i = 0; i < nn; ++i)
                        mcol[1 + i] = (j == 0) ? v2.at(i) : v2.at(i >= j ? i - j : j - i) + v2.at(i + j);
                    if (j < nn) mcol[1 + nn + j] = w.lp22[j];
                }
            }
            // y = A(s_k) mcol with midpoint/uniform-radius splitting
            const double* am = &ac_mid[k * bd * bd];
            for (std::size_t i = 0; i < bd; ++i) {
                dd::DD center{0.0, 0.0};
                double rad = 0.0, absmass = 0.0;
                const double* arow = am + i * bd;
                for (std::size_t t = 0; t < bd; ++t) {
                    const Interval& x = mcol[t];
                    if (x.lo() == 0.0 && x.hi() == 0.0 && ac_rad == 0.0) continue;
                    const double xm = 0.5 * (x.lo() + x.hi());
                    const double xr = std::max(rnd::sub_up(x.hi(), xm), rnd::sub_up(xm, x.lo()));
                    center = dd::add(center, dd::two_prod(arow[t], xm));
                    rad = rnd::add_up(
                        rad, rnd::add_up(rnd::mul_up(std::fabs(arow[t]), xr),
                                         rnd::mul_up(ac_rad, rnd::add_up(std::fabs(xm), xr))));
                    absmass += std::fabs(arow[t] * xm);
                }
                const double dd_err = 4.93038065763132e-32 * absmass * double(bd + 2) + std::fabs(center.lo);
                const double total = rnd::add_up(rad, dd_err);
                yv[i] = Interval(rnd::sub_down(center.hi, total), rnd::add_up(center.hi, total));
            }
            // K column value: rectI - y
            for (std::size_t i = 0; i < bd; ++i) kcol[k][i] = -yv[i];
            if (col == 0) {
                kcol[k][0] += Interval(1.0);
            } else {
                const std::size_t comp = (col - 1) / col_modes, j = (col - 1) % col_modes;
                if (j < nn) kcol[k][1 + comp * nn + j] += Interval(1.0);
            }
        }
        // back-transform each entry over the node index and accumulate norms
        for (std::size_t i = 0; i < bd; ++i) {
            for (std::size_t k = 0; k <= M; ++k) kvals[k] = kcol[k][i];
            const std::vector<Interval> coeff = cheb_values_to_coeffs(kvals, M);
            for (std::size_t k = 0; k <= M; ++k)
                colsum[k * ncl + col] += wr[i] * iv_abs(coeff[k]);
        }
    }
    Interval z11(0.0);
    for (std::size_t k = 0; k <= M; ++k) {
        Interval best(0.0);
        for (std::size_t col = 0; col < ncl; ++col)
            best = iv_max(best, colsum[k * ncl + col] / wc[col]);
        z11 += Interval(alpha_n(k)) * best;
    }

    const Interval z12 = Interval(2.0) * w.L_inf * (con_norm(w.V1N) + con_norm(w.V2N));

    const Interval zinf1 = con_norm(project(w.dU1, N, ProjSide::gt)) +
                           con_norm(project(w.dU2, N, ProjSide::gt));
    const Interval zinf2 = con_norm(project(w.scrV1, N, ProjSide::gt));
    const Interval den2 = Interval(1.0) - w.defect_sq;
    const Interval den1 = Interval(1.0) - w.defect;
    if (!(den1.lo() > 0 && den2.lo() > 0)) throw DefectNotContractive();
    const Interval zinf3 = con_norm(w.Psi1) * iv_sqr(w.inv_norm_con) * w.defect_sq / den2;
    const Interval zinf4 = con_norm(project(w.scrV2, N, ProjSide::gt)) +
                           con_norm(w.Psi2) * w.inv_norm_con * w.defect / den1;
    const Interval zinf = (w.AcN_norm + w.L_inf) * (zinf1 + zinf2 + zinf3 + zinf4);

    if (parts) *parts = {z11, z12, zinf};
    return z11 + z12 + zinf;
}

} // namespace brdet

inline BranchSegmentCertificate certify_branch_segment(const ThomasParams& p, const FloatChebBranch& fb,
                                                       const BranchSegmentOptions& opt,
                                                       const ParamsD& pd, double hint) {
    brdet::Workspace w;
    w.p = p;
    w.N0 = fb.n0;
    w.N = opt.N;
    w.Nc = fb.nc;
    w.d = Interval(fb.d);
    w.tau = opt.tau;
    brdet::build_symbols(w, std::max(2 * w.N, w.N0));
    brdet::build_families(w, fb);
    brdet::build_Ac(w, fb, pd, hint);

    brdet::Y0sParts yparts;
    brdet::Z1sParts zparts;
    const Interval Y0 = brdet::bound_Y0_s(w, &yparts);
    const Interval Z2 = brdet::bound_Z2_s(w, opt.R);
    const Interval Z1 = brdet::bound_Z1_s(w, &zparts);

    const PeriodicCertificate rc = radii_check_p(Y0, Z1, Z2, opt.R);
    BranchSegmentCertificate c;
    c.pass = rc.pass;
    c.Y0s = Y0;
    c.Z1s = Z1;
    c.Z2s = Z2;
    c.R = opt.R;
    c.r_min = rc.r_min;
    c.r_max = rc.r_max;
    c.AcN_norm = w.AcN_norm;
    c.L_inf = w.L_inf;
    c.defect = w.defect;
    c.defect_sq = w.defect_sq;
    c.Z11 = zparts.z11;
    c.Z12 = zparts.z12;
    c.Zinfs = zparts.zinf;
    c.Y01 = yparts.y01;
    c.Y02 = yparts.y02;
    c.Y03 = yparts.y03;
    c.Y04 = yparts.y04;
    c.N0 = w.N0;
    c.N = w.N;
    c.Nc = w.Nc;
    c.d = w.d;
    c.tau = w.tau;
    c.nu5_start = eval_at_pm1(w.nu5, true);
    c.nu5_end = eval_at_pm1(w.nu5, false);
    return c;
}

// endpoint data of a segment for the gluing condition
struct SegmentEndpoint {
    Interval nu5;
    CosineSeq u1, u2;
};

inline SegmentEndpoint segment_endpoint(const FloatChebBranch& fb, const Interval& tau, bool plus_one) {
    const Interval d(fb.d);
    SegmentEndpoint e;
    const SeqFamily u1 = brdet::transpose_family(fb.u1, fb.nc, d, tau);
    const SeqFamily u2 = brdet::transpose_family(fb.u2, fb.nc, d, tau);
    ScalarFamily nu5(fb.nc + 1, Interval(0.0));
    for (std::size_t k = 0; k <= fb.nc; ++k) nu5[k] = Interval(fb.nu5[k]);
    e.nu5 = eval_at_pm1(nu5, plus_one);
    e.u1 = eval_at_pm1(u1, plus_one);
    e.u2 = eval_at_pm1(u2, plus_one);
    return e;
}

struct GluingRecord {
    bool pass = false;
    Interval gap;       // |W_i(-1) - W_{i+1}(+1)|_{X_tau}
    Interval lhs, rhs;  // gap + r_min_i vs r_max_{i+1}
};

// |W_i(-1) - W_{i+1}(1)|_{X_tau} + r_min^{[i]} <= r_max^{[i+1]}
inline GluingRecord glue_segments(const BranchSegmentCertificate& ci, const BranchSegmentCertificate& cj,
                                  const SegmentEndpoint& wi_end, const SegmentEndpoint& wj_start) {
    GluingRecord g;
    g.gap = iv_abs(wi_end.nu5 - wj_start.nu5) + norm(wi_end.u1 - wj_start.u1, SeqNorm::l1_tau) +
            norm(wi_end.u2 - wj_start.u2, SeqNorm::l1_tau);
    g.lhs = g.gap + ci.r_min;
    g.rhs = cj.r_max;
    g.pass = ci.pass && cj.pass && g.lhs.hi() <= g.rhs.lo();
    return g;
}

} // namespace tcap
