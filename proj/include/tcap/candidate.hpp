#pragma once

// Non-certified numerics producing candidate solutions: sech ansatz, float
// Newton on the truncated Fourier systems, pseudo-arclength continuation in
// nu5, and Chebyshev fitting of branches.  Everything here is plain double;
// promotion to intervals happens at the certifier boundary.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "tcap/fft.hpp"

namespace tcap {

struct NewtonDiverged : std::runtime_error {
    NewtonDiverged() : std::runtime_error("Newton iteration failed to reach tolerance") {}
};
struct SingularJacobian : std::runtime_error {
    SingularJacobian() : std::runtime_error("Jacobian is numerically singular") {}
};
struct StepFailure : std::runtime_error {
    StepFailure() : std::runtime_error("continuation step failed after maximal halving") {}
};

struct FloatSeqPair {
    double d = 1.0;
    std::vector<double> u1, u2;

    std::size_t support() const { return u1.empty() ? 0 : u1.size() - 1; }
    void resize(std::size_t n0) {
        u1.resize(n0 + 1, 0.0);
        u2.resize(n0 + 1, 0.0);
    }
};

struct ParamsD {
    double nu, nu1, nu2, nu3, nu4, nu5;
};

inline double cubic_root_near(const ParamsD& p, double hint) {
    const double c3 = p.nu3 * p.nu2;
    const double c2 = -((p.nu4 * p.nu2 - 1.0) * p.nu3 - p.nu1);
    const double c1 = (p.nu5 * p.nu1 - (p.nu4 - 1.0)) * p.nu3 - p.nu4 * p.nu1;
    const double c0 = -p.nu4 * p.nu3;
    double x = hint;
    for (int it = 0; it < 200; ++it) {
        const double f = ((c3 * x + c2) * x + c1) * x + c0;
        const double df = (3 * c3 * x + 2 * c2) * x + c1;
        const double step = f / df;
        x -= step;
        if (std::fabs(step) < 1e-15 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

// Smallest positive real root of the steady-state cubic; the default hint.
inline double default_lambda1_hint(const ParamsD& p) {
    const double c3 = p.nu3 * p.nu2;
    const double c2 = -((p.nu4 * p.nu2 - 1.0) * p.nu3 - p.nu1);
    const double c1 = (p.nu5 * p.nu1 - (p.nu4 - 1.0)) * p.nu3 - p.nu4 * p.nu1;
    const double c0 = -p.nu4 * p.nu3;
    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(0, 2) = -c0 / c3;
    companion(1, 0) = 1.0;
    companion(1, 2) = -c1 / c3;
    companion(2, 1) = 1.0;
    companion(2, 2) = -c2 / c3;
    const auto ev = companion.eigenvalues();
    double best = -1.0;
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(ev[i].imag()) < 1e-9 * std::max(1.0, std::fabs(ev[i].real())) && ev[i].real() > 0) {
            if (best < 0 || ev[i].real() < best) best = ev[i].real();
        }
    }
    if (best < 0) throw std::runtime_error("steady-state cubic has no positive real root");
    return cubic_root_near(p, best);
}

struct ModelD {
    double lambda1, lambda2, lambda3, lambda4, lambda5, lambda6, lambda7;
};

inline ModelD derive_params_d(const ParamsD& p, double hint) {
    ModelD m;
    m.lambda1 = cubic_root_near(p, hint);
    const double h = 1.0 + m.lambda1 + p.nu2 * m.lambda1 * m.lambda1;
    m.lambda2 = h * (p.nu4 - m.lambda1) / (p.nu1 * m.lambda1);
    m.lambda3 = p.nu1 * p.nu + (m.lambda1 - p.nu4) * p.nu2;
    m.lambda4 = p.nu1 * m.lambda2 + (1.0 + 2.0 * p.nu2 * m.lambda1) * (m.lambda1 - p.nu4) + p.nu1 * m.lambda1 * p.nu;
    m.lambda5 = p.nu3 * p.nu - 1.0;
    m.lambda6 = -(m.lambda1 * m.lambda4 + m.lambda4 + m.lambda1 * m.lambda1 * m.lambda4 * p.nu2) / (h * h);
    m.lambda7 = p.nu1 * m.lambda1 / h;
    return m;
}

// ---- float cosine grid transforms ----

inline std::vector<double> coeffs_to_grid(const std::vector<double>& c, std::size_t L) {
    std::vector<std::complex<double>> e(L, 0.0);
    e[0] = c[0];
    for (std::size_t m = 1; m < c.size(); ++m) {
        e[m] += c[m];
        e[L - m] += c[m];
    }
    fft_pow2(e, false);
    std::vector<double> v(L);
    for (std::size_t k = 0; k < L; ++k) v[k] = e[k].real();
    return v;
}

inline std::vector<double> grid_to_coeffs(const std::vector<double>& v, std::size_t out_support) {
    std::vector<std::complex<double>> e(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) e[k] = v[k];
    fft_pow2(e, true);
    std::vector<double> c(out_support + 1);
    for (std::size_t m = 0; m <= out_support; ++m) c[m] = e[m].real();
    return c;
}

// ---- sech ansatz ----

enum class SystemKind { localized, periodic };

struct AnsatzSpec {
    double beta1 = 0.0, zeta1 = 1.0, beta2 = 0.0, zeta2 = 1.0;
};

inline FloatSeqPair sech_ansatz(const AnsatzSpec& a, const ParamsD& p, const ModelD& m, SystemKind kind,
                                double d, std::size_t n0) {
    const std::size_t L = fftdet::next_pow2(8 * (n0 + 1));
    std::vector<double> g1(L), g2(L);
    for (std::size_t k = 0; k < L; ++k) {
        // uniform grid over the period (-d, d); x measured from 0 with wrap
        double x = 2.0 * d * double(k) / double(L);
        if (x > d) x -= 2.0 * d;
        const double s1 = 1.0 / std::cosh(a.zeta1 * x), s2 = 1.0 / std::cosh(a.zeta2 * x);
        const double bump1 = a.beta1 * s1 * s1, bump2 = a.beta2 * s2 * s2;
        if (kind == SystemKind::localized) {
            // (u, v) = (lambda1 + bump1, lambda2 + bump2), shifted variables decay to 0
            const double u1 = bump1;
            const double u2 = p.nu * u1 - bump2;
            g1[k] = u1;
            g2[k] = u2;
        } else {
            // periodic variables U1 = u, U2 = nu u - v around the steady state
            const double vstar = (p.nu3 * p.nu5 - p.nu4 + m.lambda1) / p.nu3;
            const double u = m.lambda1 + bump1;
            const double v = vstar + bump2;
            g1[k] = u;
            g2[k] = p.nu * u - v;
        }
    }
    FloatSeqPair out;
    out.d = d;
    out.u1 = grid_to_coeffs(g1, n0);
    out.u2 = grid_to_coeffs(g2, n0);
    return out;
}

// ---- residuals and Jacobians ----

namespace canddet {

inline void symbol_rows(SystemKind kind, const ParamsD& p, const ModelD& m, double ntilde, double out[4]) {
    const double s = 4.0 * 3.141592653589793238462643383279502884 * 3.141592653589793238462643383279502884 *
                     ntilde * ntilde;
    if (kind == SystemKind::localized) {
        out[0] = -p.nu * s + m.lambda6 - 1.0; // l11
        out[1] = m.lambda7;                   // l12
        out[2] = m.lambda5;                   // l21
        out[3] = -s - p.nu3;                  // l22
    } else {
        out[0] = -p.nu * s - 1.0;    // Lp11
        out[1] = 0.0;                // Lp12
        out[2] = p.nu3 * p.nu - 1.0; // Lp21
        out[3] = -s - p.nu3;         // Lp22
    }
}

struct GridEval {
    std::vector<double> g;  // nonlinearity values
    std::vector<double> v1; // d g / d u1 values
    std::vector<double> v2; // d g / d u2 values
};

inline GridEval eval_nonlinearity(SystemKind kind, const ParamsD& p, const ModelD& m,
                                  const std::vector<double>& u1g, const std::vector<double>& u2g) {
    const std::size_t L = u1g.size();
    GridEval e;
    e.g.resize(L);
    e.v1.resize(L);
    e.v2.resize(L);
    for (std::size_t k = 0; k < L; ++k) {
        const double x = u1g[k], y = u2g[k];
        if (kind == SystemKind::localized) {
            const double w1 = 1.0 + x + m.lambda1 + p.nu2 * (x + m.lambda1) * (x + m.lambda1);
            const double w2 = m.lambda3 * x * x + m.lambda4 * x - p.nu1 * x * y - p.nu1 * m.lambda1 * y;
            e.g[k] = -w2 / w1 - m.lambda6 * x - m.lambda7 * y;
            const double d1w1 = 1.0 + 2.0 * p.nu2 * (x + m.lambda1);
            const double d1w2 = 2.0 * m.lambda3 * x + m.lambda4 - p.nu1 * y;
            const double d2w2 = -p.nu1 * x - p.nu1 * m.lambda1;
            e.v1[k] = -(w1 * d1w2 - w2 * d1w1) / (w1 * w1) - m.lambda6;
            e.v2[k] = -d2w2 / w1 - m.lambda7;
        } else {
            const double phi = 1.0 + x + p.nu2 * x * x;
            const double num = p.nu1 * p.nu * x * x - p.nu1 * x * y;
            e.g[k] = p.nu4 - num / phi;
            e.v1[k] = -p.nu1 * (-y + 2.0 * p.nu * x + p.nu * x * x + p.nu2 * x * x * y) / (phi * phi);
            e.v2[k] = p.nu1 * x / phi;
        }
    }
    return e;
}

// dense cosine convolution matrix in raw coefficient coordinates
inline Eigen::MatrixXd conv_matrix(const std::vector<double>& v, std::size_t n) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n + 1, n + 1);
    auto at = [&v](std::size_t i) { return i < v.size() ? v[i] : 0.0; };
    for (std::size_t i = 0; i <= n; ++i) {
        c(i, 0) = at(i);
        for (std::size_t j = 1; j <= n; ++j) c(i, j) = at(i >= j ? i - j : j - i) + at(i + j);
    }
    return c;
}

} // namespace canddet

// F^{N0}(U) for the localized or periodic truncated system.
inline Eigen::VectorXd residual(SystemKind kind, const ParamsD& p, const ModelD& m, const FloatSeqPair& u) {
    const std::size_t n0 = u.support();
    const std::size_t L = fftdet::next_pow2(8 * (n0 + 1));
    const std::vector<double> u1g = coeffs_to_grid(u.u1, L), u2g = coeffs_to_grid(u.u2, L);
    const auto ev = canddet::eval_nonlinearity(kind, p, m, u1g, u2g);
    const std::vector<double> gcoef = grid_to_coeffs(ev.g, n0);
    Eigen::VectorXd f(2 * (n0 + 1));
    for (std::size_t n = 0; n <= n0; ++n) {
        double lr[4];
        canddet::symbol_rows(kind, p, m, double(n) / (2.0 * u.d), lr);
        f[(long)n] = lr[0] * u.u1[n] + lr[1] * u.u2[n] + gcoef[n];
        f[(long)(n0 + 1 + n)] = lr[2] * u.u1[n] + lr[3] * u.u2[n];
    }
    if (kind == SystemKind::periodic) f[(long)(n0 + 1)] += -p.nu3 * p.nu5 + p.nu4;
    return f;
}

inline Eigen::MatrixXd jacobian(SystemKind kind, const ParamsD& p, const ModelD& m, const FloatSeqPair& u) {
    const std::size_t n0 = u.support();
    const std::size_t L = fftdet::next_pow2(8 * (n0 + 1));
    const std::vector<double> u1g = coeffs_to_grid(u.u1, L), u2g = coeffs_to_grid(u.u2, L);
    const auto ev = canddet::eval_nonlinearity(kind, p, m, u1g, u2g);
    const Eigen::MatrixXd c1 = canddet::conv_matrix(grid_to_coeffs(ev.v1, 2 * n0), n0);
    const Eigen::MatrixXd c2 = canddet::conv_matrix(grid_to_coeffs(ev.v2, 2 * n0), n0);
    const long nn = (long)n0 + 1;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * nn, 2 * nn);
    j.block(0, 0, nn, nn) = c1;
    j.block(0, nn, nn, nn) = c2;
    for (long n = 0; n < nn; ++n) {
        double lr[4];
        canddet::symbol_rows(kind, p, m, double(n) / (2.0 * u.d), lr);
        j(n, n) += lr[0];
        j(n, nn + n) += lr[1];
        j(nn + n, n) += lr[2];
        j(nn + n, nn + n) += lr[3];
    }
    return j;
}

// Damped Newton: a step is accepted only once (possibly halved) it lowers
// the residual, so the accepted residual sequence is strictly decreasing.
inline FloatSeqPair newton_refine(SystemKind kind, const ParamsD& p, const ModelD& m, FloatSeqPair u,
                                  double tol, int max_iter, double* out_residual = nullptr,
                                  std::vector<double>* trace = nullptr) {
    double rn = residual(kind, p, m, u).norm();
    if (trace) trace->push_back(rn);
    for (int it = 0; it < max_iter; ++it) {
        if (out_residual) *out_residual = rn;
        if (!std::isfinite(rn)) throw NewtonDiverged();
        if (rn <= tol) return u;
        const Eigen::MatrixXd j = jacobian(kind, p, m, u);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
        const Eigen::VectorXd step = lu.solve(residual(kind, p, m, u));
        if (!step.allFinite()) throw SingularJacobian();
        const std::size_t nn = u.support() + 1;
        double damp = 1.0;
        bool accepted = false;
        for (int half = 0; half < 8; ++half) {
            FloatSeqPair trial = u;
            for (std::size_t n = 0; n < nn; ++n) {
                trial.u1[n] -= damp * step[(long)n];
                trial.u2[n] -= damp * step[(long)(nn + n)];
            }
            const double rt = residual(kind, p, m, trial).norm();
            if (std::isfinite(rt) && rt < rn) {
                u = std::move(trial);
                rn = rt;
                accepted = true;
                break;
            }
            damp *= 0.5;
        }
        if (!accepted) throw NewtonDiverged();
        if (trace) trace->push_back(rn);
    }
    if (out_residual) *out_residual = rn;
    if (rn > tol) throw NewtonDiverged();
    return u;
}

// ---- pseudo-arclength continuation in nu5 (periodic system) ----

struct BranchState {
    double nu5;
    FloatSeqPair u;
    double dnu5; // tangent, normalized
    FloatSeqPair du;
    double arclen = 0.0;
};

namespace canddet {

inline Eigen::VectorXd pack(const FloatSeqPair& u, double lead) {
    const long nn = (long)u.support() + 1;
    Eigen::VectorXd x(2 * nn + 1);
    x[0] = lead;
    for (long n = 0; n < nn; ++n) {
        x[1 + n] = u.u1[(std::size_t)n];
        x[1 + nn + n] = u.u2[(std::size_t)n];
    }
    return x;
}

inline void unpack(const Eigen::VectorXd& x, FloatSeqPair& u, double& lead) {
    const long nn = (long)u.support() + 1;
    lead = x[0];
    for (long n = 0; n < nn; ++n) {
        u.u1[(std::size_t)n] = x[1 + n];
        u.u2[(std::size_t)n] = x[1 + nn + n];
    }
}

// alpha-weighted inner product on packed vectors (the nu5 slot has weight 1)
inline double alpha_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b, long nn) {
    double s = a[0] * b[0];
    for (long n = 0; n < nn; ++n) {
        const double w = n == 0 ? 1.0 : 2.0;
        s += w * (a[1 + n] * b[1 + n] + a[1 + nn + n] * b[1 + nn + n]);
    }
    return s;
}

// bordered Jacobian [phase row; D_{nu5} F_p | D_U F_p]
inline Eigen::MatrixXd bordered_jacobian(const ParamsD& p, const ModelD& m, const FloatSeqPair& u,
                                         const Eigen::VectorXd& tangent) {
    const long nn = (long)u.support() + 1;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * nn + 1, 2 * nn + 1);
    j(0, 0) = tangent[0];
    for (long n = 0; n < nn; ++n) {
        const double w = n == 0 ? 1.0 : 2.0;
        j(0, 1 + n) = w * tangent[1 + n];
        j(0, 1 + nn + n) = w * tangent[1 + nn + n];
    }
    const Eigen::MatrixXd jf = jacobian(SystemKind::periodic, p, m, u);
    j.block(1, 1, 2 * nn, 2 * nn) = jf;
    j(1 + nn, 0) = -p.nu3; // d(second component)/d nu5
    return j;
}

} // namespace canddet

// Tangent of the branch at (nu5, u), oriented along `orient` when given.
inline void branch_tangent(const ParamsD& p0, const ModelD& m, const FloatSeqPair& u,
                           const Eigen::VectorXd* orient, double& dnu5, FloatSeqPair& du) {
    ParamsD p = p0;
    const long nn = (long)u.support() + 1;
    Eigen::VectorXd ref = orient ? *orient : Eigen::VectorXd::Unit(2 * nn + 1, 0);
    const Eigen::MatrixXd j = canddet::bordered_jacobian(p, m, u, ref);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * nn + 1);
    rhs[0] = 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
    Eigen::VectorXd t = lu.solve(rhs);
    if (!t.allFinite()) throw SingularJacobian();
    t /= std::sqrt(canddet::alpha_dot(t, t, nn));
    du = u;
    canddet::unpack(t, du, dnu5);
}

// One corrector solve of the augmented system anchored at `pred` along `tan`.
inline BranchState arclength_correct(const ParamsD& p0, double hint, const Eigen::VectorXd& pred,
                                     const Eigen::VectorXd& tan, std::size_t n0, double d, double tol,
                                     int max_iter) {
    ParamsD p = p0;
    FloatSeqPair u;
    u.d = d;
    u.resize(n0);
    double nu5;
    canddet::unpack(pred, u, nu5);
    const long nn = (long)n0 + 1;
    Eigen::VectorXd x = pred;
    for (int it = 0; it < max_iter; ++it) {
        canddet::unpack(x, u, nu5);
        p.nu5 = nu5;
        const ModelD m = derive_params_d(p, hint);
        Eigen::VectorXd f(2 * nn + 1);
        f[0] = canddet::alpha_dot(x - pred, tan, nn);
        f.tail(2 * nn) = residual(SystemKind::periodic, p, m, u);
        if (f.norm() <= tol) {
            BranchState st;
            st.nu5 = nu5;
            st.u = u;
            branch_tangent(p, m, u, &tan, st.dnu5, st.du);
            return st;
        }
        const Eigen::MatrixXd j = canddet::bordered_jacobian(p, m, u, tan);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
        const Eigen::VectorXd step = lu.solve(f);
        if (!step.allFinite()) throw SingularJacobian();
        x -= step;
    }
    throw NewtonDiverged();
}

struct BranchSample {
    std::vector<BranchState> states;
};

// March the branch with fixed pseudo-arclength steps (halving on failure),
// starting from an already-converged branch state with its tangent.
inline BranchSample arclength_continue_from(const ParamsD& p0, double hint, const BranchState& start,
                                            double step, int n_steps, double tol = 1e-11,
                                            int max_halvings = 8) {
    BranchSample out;
    BranchState st = start;
    st.arclen = 0.0;
    out.states.push_back(st);
    const long nn = (long)start.u.support() + 1;
    for (int k = 0; k < n_steps; ++k) {
        const BranchState& cur = out.states.back();
        const Eigen::VectorXd xc = canddet::pack(cur.u, cur.nu5);
        const Eigen::VectorXd tc = canddet::pack(cur.du, cur.dnu5);
        double h = step;
        for (int hv = 0;; ++hv) {
            try {
                const Eigen::VectorXd pred = xc + h * tc;
                BranchState nxt =
                    arclength_correct(p0, hint, pred, tc, start.u.support(), start.u.d, tol, 30);
                // keep the orientation: no direction flips across steps
                const Eigen::VectorXd tn = canddet::pack(nxt.du, nxt.dnu5);
                if (canddet::alpha_dot(tn, tc, nn) < 0) {
                    BranchState flipped = nxt;
                    flipped.dnu5 = -nxt.dnu5;
                    for (auto& v : flipped.du.u1) v = -v;
                    for (auto& v : flipped.du.u2) v = -v;
                    nxt = flipped;
                }
                nxt.arclen = cur.arclen + std::fabs(h);
                out.states.push_back(nxt);
                break;
            } catch (const std::runtime_error&) {
                if (hv >= max_halvings) throw StepFailure();
                h *= 0.5;
            }
        }
    }
    return out;
}

// Entry point from a raw candidate: Newton-refine, compute the tangent, march.
inline BranchSample arclength_continue(const ParamsD& p0, double hint, const FloatSeqPair& start,
                                       double step, int n_steps, double tol = 1e-11,
                                       int max_halvings = 8) {
    ParamsD p = p0;
    const ModelD m = derive_params_d(p, hint);
    BranchState st;
    st.nu5 = p.nu5;
    st.u = newton_refine(SystemKind::periodic, p, m, start, tol, 50);
    branch_tangent(p, m, st.u, nullptr, st.dnu5, st.du);
    return arclength_continue_from(p0, hint, st, step, n_steps, tol, max_halvings);
}

// Re-express a branch state at a different truncation size (pad or drop).
inline BranchState resize_state(const BranchState& st, std::size_t n0) {
    BranchState out = st;
    out.u.u1.resize(n0 + 1, 0.0);
    out.u.u2.resize(n0 + 1, 0.0);
    out.du.u1.resize(n0 + 1, 0.0);
    out.du.u2.resize(n0 + 1, 0.0);
    return out;
}

// ---- Chebyshev fit of a branch segment ----

struct FloatChebBranch {
    double d = 1.0;
    std::size_t n0 = 0, nc = 0;
    std::vector<double> nu5, dnu5;              // Chebyshev coefficients, size nc+1
    std::vector<std::vector<double>> u1, u2;    // [fourier mode][cheb coefficient]
    std::vector<std::vector<double>> du1, du2;  // tangent family, same layout
};

// Sample the branch at DCT-I nodes of its arclength span and transform.
// Node k of M+1 corresponds to s = cos(pi k / M): s=+1 is the segment start.
inline FloatChebBranch chebyshev_fit(const ParamsD& p0, double hint, const BranchSample& samples,
                                     std::size_t nc, double tol = 1e-11) {
    if (samples.states.size() < 2) throw std::invalid_argument("need at least two branch samples");
    const std::size_t n0 = samples.states.front().u.support();
    const double d = samples.states.front().u.d;
    const double S = samples.states.back().arclen;
    const std::size_t M = fftdet::next_pow2(std::max<std::size_t>(2, 2 * nc));
    std::vector<Eigen::VectorXd> xs(M + 1), ts(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
        const double s = std::cos(3.141592653589793 * double(k) / double(M));
        const double target = 0.5 * (1.0 - s) * S; // s=+1 -> arclen 0
        // bracketing samples
        std::size_t hi = 1;
        while (hi + 1 < samples.states.size() && samples.states[hi].arclen < target) ++hi;
        const BranchState& a = samples.states[hi - 1];
        const BranchState& b = samples.states[hi];
        const double w = (target - a.arclen) / std::max(1e-300, b.arclen - a.arclen);
        const Eigen::VectorXd xa = canddet::pack(a.u, a.nu5), xb = canddet::pack(b.u, b.nu5);
        const Eigen::VectorXd ta = canddet::pack(a.du, a.dnu5), tb = canddet::pack(b.du, b.dnu5);
        Eigen::VectorXd pred = (1.0 - w) * xa + w * xb;
        Eigen::VectorXd tan = ((1.0 - w) * ta + w * tb);
        tan /= std::sqrt(canddet::alpha_dot(tan, tan, (long)n0 + 1));
        const BranchState st = arclength_correct(p0, hint, pred, tan, n0, d, tol, 30);
        xs[k] = canddet::pack(st.u, st.nu5);
        ts[k] = canddet::pack(st.du, st.dnu5);
    }
    FloatChebBranch out;
    out.d = d;
    out.n0 = n0;
    out.nc = nc;
    auto fit_component = [&](const std::vector<Eigen::VectorXd>& data, long idx) {
        std::vector<double> vals(M + 1);
        for (std::size_t k = 0; k <= M; ++k) vals[k] = data[k][idx];
        std::vector<double> coef = cheb_values_to_coeffs_d(vals, M);
        coef.resize(nc + 1);
        return coef;
    };
    out.nu5 = fit_component(xs, 0);
    out.dnu5 = fit_component(ts, 0);
    out.u1.resize(n0 + 1);
    out.u2.resize(n0 + 1);
    out.du1.resize(n0 + 1);
    out.du2.resize(n0 + 1);
    const long nn = (long)n0 + 1;
    for (long n = 0; n < nn; ++n) {
        out.u1[(std::size_t)n] = fit_component(xs, 1 + n);
        out.u2[(std::size_t)n] = fit_component(xs, 1 + nn + n);
        out.du1[(std::size_t)n] = fit_component(ts, 1 + n);
        out.du2[(std::size_t)n] = fit_component(ts, 1 + nn + n);
    }
    return out;
}

} // namespace tcap
