#pragma once

// Certifier for spatially periodic solutions on (-d, d): assembles F_p, the
// approximate inverse A_p with its explicit high-mode tail, and the Y0 / Z1 /
// Z2 bounds on l1_{e,tau}, then checks the periodic radii-polynomial
// conditions.

#include <Eigen/Dense>

#include "tcap/block_operator.hpp"
#include "tcap/candidate.hpp"
#include "tcap/localized.hpp"
#include "tcap/neumann.hpp"
#include "tcap/thomas_model.hpp"

namespace tcap {

struct PeriodicTail {
    Interval L_inf{0.0};
    std::size_t N = 0;
};

struct PeriodicOptions {
    std::size_t N0 = 0;
    std::size_t N = 0;
    Interval tau{1.0};
    Interval R{0.0};
};

struct PeriodicCertificate {
    bool pass = false;
    Interval Y0, Z1, Z2, R;
    Interval r_min, r_max;
    Interval ApN_norm, L_inf, defect, defect_sq;
    Interval Z11, Z12, Zinf, Y01, Y02;
    Interval Y0_resid_tail, Y0_q_tail;
    std::size_t N0 = 0, N = 0;
    Interval d{1.0}, tau{1.0};
};

namespace perdet {

struct Workspace {
    ThomasParams p;
    SeqPair ub;
    std::size_t N0 = 0, N = 0;
    Interval d{1.0}, tau{1.0};
    PeriodicNonlinearity non;
    InverseData inv, inv_sq;
    CosineSeq scrg, scrV1, scrV2, V1N, V2N;
    BlockOperator ApN;
    Interval ApN_norm, L_inf;
    std::vector<Interval> lp11, lp21, lp22;
};

// raw-coordinate convolution window matrix (rows x cols)
inline IMatrix conv_window_raw(const CosineSeq& q, std::size_t rows, std::size_t cols) {
    IMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = j == 0 ? q.at(i) : q.at(i >= j ? i - j : j - i) + q.at(i + j);
    return m;
}

// l1_tau operator norm of a rectangular 2x2 block matrix
inline Interval block_norm_l1tau(const IMatrix& m11, const IMatrix& m12, const IMatrix& m21,
                                 const IMatrix& m22, const Interval& tau) {
    const std::size_t rows = m11.rows(), cols = m11.cols();
    std::vector<Interval> taup(std::max(rows, cols), Interval(1.0));
    for (std::size_t i = 1; i < taup.size(); ++i) taup[i] = taup[i - 1] * tau;
    Interval best(0.0);
    for (int bc = 0; bc < 2; ++bc) {
        const IMatrix& top = bc == 0 ? m11 : m12;
        const IMatrix& bot = bc == 0 ? m21 : m22;
        for (std::size_t j = 0; j < cols; ++j) {
            Interval s(0.0);
            for (std::size_t i = 0; i < rows; ++i)
                s += Interval(alpha_n(i)) * (iv_abs(top(i, j)) + iv_abs(bot(i, j))) * taup[i];
            best = iv_max(best, s / (Interval(alpha_n(j)) * taup[j]));
        }
    }
    return best;
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

// A_p^N: float inverse of the truncated Jacobian, plus the tail bound L_inf.
inline void build_Ap(Workspace& w) {
    const std::size_t n = w.N + 1;
    const IMatrix c1 = conv_window_raw(w.V1N, n, n);
    const IMatrix c2 = conv_window_raw(w.V2N, n, n);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            j((long)i, (long)k) = c1(i, k).mid();
            j((long)i, (long)(n + k)) = c2(i, k).mid();
        }
        j((long)i, (long)i) += w.lp11[i].mid();
        j((long)(n + i), (long)i) = w.lp21[i].mid();
        j((long)(n + i), (long)(n + i)) = w.lp22[i].mid();
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
    const Eigen::MatrixXd a = lu.inverse();
    if (!a.allFinite()) throw SingularTruncation();
    w.ApN = BlockOperator(w.N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            w.ApN.b11(i, k) = Interval(a((long)i, (long)k));
            w.ApN.b12(i, k) = Interval(a((long)i, (long)(n + k)));
            w.ApN.b21(i, k) = Interval(a((long)(n + i), (long)k));
            w.ApN.b22(i, k) = Interval(a((long)(n + i), (long)(n + k)));
        }
    w.ApN_norm = op_norm_l1tau(w.ApN, w.tau);

    // tail of A_p: the inverse of the lower-triangular symbol at mode n > N;
    // each of the three magnitudes decreases in n, so the sup sits at N+1
    const Interval s = SymbolMatrix::s_of_mode(w.N + 1, w.d);
    const Interval m11 = w.p.nu * s + Interval(1.0);
    const Interval m22 = s + w.p.nu3;
    const Interval m21 = iv_abs(w.p.nu3 * w.p.nu - Interval(1.0));
    w.L_inf = Interval(1.0) / m11 + m21 / (m11 * m22) + Interval(1.0) / m22;
}

// pair residual L_p U + [scr g_p ; -nu3 nu5 + nu4]
inline SeqPair residual_sequence(const Workspace& w) {
    const std::size_t m1 = std::max(w.scrg.support(), w.ub.support());
    CosineSeq r1(w.d, w.tau, m1), r2(w.d, w.tau, w.ub.support());
    for (std::size_t nn = 0; nn <= m1; ++nn) {
        Interval v = w.scrg.at(nn);
        if (nn <= w.ub.support()) v += w.lp11[nn] * w.ub.u1.at(nn);
        r1.c[nn] = v;
    }
    for (std::size_t nn = 0; nn <= w.ub.support(); ++nn)
        r2.c[nn] = w.lp21[nn] * w.ub.u1.at(nn) + w.lp22[nn] * w.ub.u2.at(nn);
    r2.c[0] += -w.p.nu3 * w.p.nu5 + w.p.nu4;
    return SeqPair(r1, r2);
}

inline SeqPair apply_ApN(const Workspace& w, const SeqPair& x) {
    return apply_block(w.ApN, project(x, w.N, ProjSide::leq));
}

struct Y0pParts {
    Interval y01, y02;
    Interval resid_tail; // |Pi^{>N} (L_p U + G_p)|_{1,tau}
    Interval q_tail;     // |Pi^{>N} (Psi_p * Phi_inv * (1 - Phi Phi_inv))|_{1,tau}
};

inline Interval bound_Y0_p(const Workspace& w, Y0pParts* parts = nullptr) {
    const SeqPair res = residual_sequence(w);
    const Interval resid_tail = norm(project(res, w.N, ProjSide::gt), SeqNorm::l1_tau);
    const Interval y01 = norm(apply_ApN(w, res), SeqNorm::l1_tau) + w.L_inf * resid_tail;
    const CosineSeq q = conv_auto(conv_auto(w.non.Psi_p, w.inv.phi_inv), w.inv.one_minus_pp);
    const CosineSeq zero(w.d, w.tau, 0);
    const Interval q_tail = norm(project(q, w.N, ProjSide::gt), SeqNorm::l1_tau);
    const Interval y02 =
        (norm(apply_ApN(w, SeqPair(q, zero)), SeqNorm::l1_tau) + w.L_inf * q_tail) /
        (Interval(1.0) - w.inv.defect);
    if (parts) *parts = {y01, y02, resid_tail, q_tail};
    return y01 + y02;
}

inline Interval bound_Z2_p(const Workspace& w, const Interval& R) {
    const Interval nu = w.p.nu, nu2 = w.p.nu2;
    const CosineSeq one = e0_seq(w.d, w.tau);
    const CosineSeq u1 = w.ub.u1, u2 = w.ub.u2;
    const CosineSeq u1sq = conv_auto(u1, u1);
    const CosineSeq u1cu = conv_auto(u1sq, u1);
    auto n1t = [](const CosineSeq& s) { return norm(s, SeqNorm::l1_tau); };

    // second derivative numerator, expanded around the candidate in powers of
    // the increment; the quadratic-in-increment coefficient is
    // 3 nu nu2 + 3 nu nu2 U1 + 3 nu2^2 U1*U2
    const Interval z21 =
        n1t(iv_sqr(nu2) * conv_auto(u1cu, u2) + (nu * nu2) * u1cu + (Interval(3.0) * nu * nu2) * u1sq -
            (Interval(3.0) * nu2) * conv_auto(u1, u2) - nu * one - u2) +
        (n1t(Interval(-1.0) * one - (Interval(3.0) * nu2) * u1 + iv_sqr(nu2) * u1cu) +
         n1t((Interval(6.0) * nu * nu2) * u1 + (Interval(3.0) * nu * nu2) * u1sq -
             (Interval(3.0) * nu2) * u2 + (Interval(3.0) * iv_sqr(nu2)) * conv_auto(u1sq, u2))) *
            R +
        (n1t((Interval(-3.0) * nu2) * one + (Interval(3.0) * iv_sqr(nu2)) * u1sq) +
         n1t((Interval(3.0) * nu * nu2) * one + (Interval(3.0) * nu * nu2) * u1 +
             (Interval(3.0) * iv_sqr(nu2)) * conv_auto(u1, u2))) *
            iv_sqr(R) +
        (n1t((Interval(3.0) * iv_sqr(nu2)) * u1) + n1t((nu * nu2) * one + iv_sqr(nu2) * u2)) *
            iv_pow(R, 3) +
        iv_sqr(nu2) * iv_pow(R, 4);

    const Interval ball = ball_inverse_bound(w.inv, R);
    const Interval z22 = iv_pow(ball, 3);
    const Interval z23 = (n1t(one - nu2 * u1sq) + Interval(2.0) * nu2 * n1t(u1) * R + nu2 * iv_sqr(R)) *
                         iv_sqr(ball);
    return Interval(2.0) * w.p.nu1 * (w.ApN_norm + w.L_inf) * (z21 * z22 + z23);
}

inline Interval bound_Z1_p(const Workspace& w, Interval* z11_out = nullptr, Interval* z12_out = nullptr,
                           Interval* zinf_out = nullptr) {
    const std::size_t n = w.N + 1, cols = 2 * w.N + 1;
    // finite window: rectI - A_p^N (L_p + DG_p^N) on Pi^{<=2N}
    const IMatrix c1 = conv_window_raw(w.V1N, n, cols);
    const IMatrix c2 = conv_window_raw(w.V2N, n, cols);
    IMatrix m11(n, cols), m12(n, cols), m21(n, cols), m22(n, cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m11(i, j) = c1(i, j) + (i == j ? w.lp11[i] : Interval(0.0));
            m12(i, j) = c2(i, j);
            m21(i, j) = i == j ? w.lp21[i] : Interval(0.0);
            m22(i, j) = i == j ? w.lp22[i] : Interval(0.0);
        }
    IMatrix k11 = w.ApN.b11 * m11 + w.ApN.b12 * m21;
    IMatrix k12 = w.ApN.b11 * m12 + w.ApN.b12 * m22;
    IMatrix k21 = w.ApN.b21 * m11 + w.ApN.b22 * m21;
    IMatrix k22 = w.ApN.b21 * m12 + w.ApN.b22 * m22;
    for (std::size_t i = 0; i < n; ++i) {
        k11(i, i) -= Interval(1.0);
        k22(i, i) -= Interval(1.0);
    }
    const Interval z11 = block_norm_l1tau(k11, k12, k21, k22, w.tau);

    const Interval z12 = Interval(2.0) * w.L_inf *
                         (norm(w.V1N, SeqNorm::l1_tau) + norm(w.V2N, SeqNorm::l1_tau));

    const CosineSeq num1 =
        conv_auto(conv_auto(w.non.Psi_p1, w.inv_sq.phi_inv), w.inv_sq.one_minus_pp);
    const Interval zinf1 = norm(project(w.scrV1, w.N, ProjSide::gt), SeqNorm::l1_tau) +
                           norm(num1, SeqNorm::l1_tau) / (Interval(1.0) - w.inv_sq.defect);
    const CosineSeq num2 = conv_auto(conv_auto(w.non.Psi_p2, w.inv.phi_inv), w.inv.one_minus_pp);
    const Interval zinf2 = norm(project(w.scrV2, w.N, ProjSide::gt), SeqNorm::l1_tau) +
                           norm(num2, SeqNorm::l1_tau) / (Interval(1.0) - w.inv.defect);
    const Interval zinf = (w.ApN_norm + w.L_inf) * (zinf1 + zinf2);

    if (z11_out) *z11_out = z11;
    if (z12_out) *z12_out = z12;
    if (zinf_out) *zinf_out = zinf;
    return z11 + z12 + zinf;
}

} // namespace perdet

inline PeriodicCertificate radii_check_p(const Interval& Y0, const Interval& Z1, const Interval& Z2,
                                         const Interval& R) {
    PeriodicCertificate c;
    c.Y0 = Y0;
    c.Z1 = Z1;
    c.Z2 = Z2;
    c.R = R;
    const Interval one_minus = Interval(1.0) - Z1;
    const Interval disc = iv_sqr(one_minus) - Interval(2.0) * Y0 * Z2;
    bool ok = Z1.hi() < 1.0 && disc.lo() >= 0.0;
    if (ok) {
        if (Z2.lo() > 0.0) {
            c.r_min = (one_minus - iv_sqrt(iv_max(disc, Interval(0.0)))) / Z2;
            c.r_max = iv_min(one_minus / Z2, R);
        } else {
            c.r_min = Y0 / one_minus; // limit Z2 -> 0 of the root
            c.r_max = R;
        }
        ok = c.r_min.hi() < c.r_max.lo();
    }
    c.pass = ok;
    return c;
}

inline PeriodicCertificate certify_periodic(const ThomasParams& p, const FloatSeqPair& cand,
                                            const PeriodicOptions& opt) {
    perdet::Workspace w;
    w.p = p;
    w.N0 = opt.N0 ? opt.N0 : cand.support();
    w.N = opt.N;
    w.d = Interval(cand.d);
    w.tau = opt.tau;

    CosineSeq u1(w.d, w.tau, w.N0), u2(w.d, w.tau, w.N0);
    for (std::size_t n = 0; n <= std::min(w.N0, cand.support()); ++n) {
        u1.c[n] = Interval(cand.u1[n]);
        u2.c[n] = Interval(cand.u2[n]);
    }
    w.ub = SeqPair(u1, u2);

    w.non = assemble_periodic(w.ub, p);
    w.inv = make_inverse_data(w.non.Phi_p, 2 * w.N0);
    w.inv_sq = make_inverse_data_squared(w.inv);
    if (!(w.inv.defect.hi() < 1.0) || !(w.inv_sq.defect.hi() < 1.0)) throw DefectNotContractive();

    const CosineSeq one = e0_seq(w.d, w.tau);
    w.scrg = p.nu4 * one + conv_auto(w.non.Psi_p, w.inv.phi_inv);
    w.scrV1 = conv_auto(w.non.Psi_p1, w.inv_sq.phi_inv);
    w.scrV2 = conv_auto(w.non.Psi_p2, w.inv.phi_inv);
    w.V1N = project(w.scrV1, w.N, ProjSide::leq);
    w.V2N = project(w.scrV2, w.N, ProjSide::leq);

    perdet::build_symbols(w, std::max(2 * w.N, std::max(w.N0, w.scrg.support())));
    perdet::build_Ap(w);

    Interval z11, z12, zinf;
    perdet::Y0pParts yp;
    const Interval Y0 = perdet::bound_Y0_p(w, &yp);
    const Interval Z2 = perdet::bound_Z2_p(w, opt.R);
    const Interval Z1 = perdet::bound_Z1_p(w, &z11, &z12, &zinf);

    PeriodicCertificate cert = radii_check_p(Y0, Z1, Z2, opt.R);
    cert.ApN_norm = w.ApN_norm;
    cert.L_inf = w.L_inf;
    cert.defect = w.inv.defect;
    cert.defect_sq = w.inv_sq.defect;
    cert.Z11 = z11;
    cert.Z12 = z12;
    cert.Zinf = zinf;
    cert.Y01 = yp.y01;
    cert.Y02 = yp.y02;
    cert.Y0_resid_tail = yp.resid_tail;
    cert.Y0_q_tail = yp.q_tail;
    cert.N0 = w.N0;
    cert.N = w.N;
    cert.d = w.d;
    cert.tau = w.tau;
    return cert;
}

} // namespace tcap
