#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcap/candidate.hpp"
#include "tcap/neumann.hpp"
#include "tcap/thomas_model.hpp"

using namespace tcap;

namespace {

ThomasParams theorem1_params() {
    ThomasParams p;
    p.nu = Interval(1.1664);
    p.nu1 = Interval(8.0);
    p.nu2 = Interval(1.0);
    p.nu3 = Interval(0.28);
    p.nu4 = Interval(39.1);
    p.nu5 = Interval(150.0);
    return p;
}

ParamsD theorem1_params_d() { return ParamsD{1.1664, 8.0, 1.0, 0.28, 39.1, 150.0}; }

} // namespace

TEST_CASE("steady state cubic root is certified and tight", "[model]") {
    const ThomasParams p = theorem1_params();
    const double hint = default_lambda1_hint(theorem1_params_d());
    const DerivedParams dp = derive_params(p, hint);
    CHECK(dp.lambda1.width() < 1e-10);
    const auto cubic = model_detail::steady_state_cubic(p);
    CHECK(cubic(dp.lambda1).contains(0.0));

    // lambda2 defining identity: nu1 l1 l2 - (1 + l1 + nu2 l1^2)(nu4 - l1) contains 0
    const Interval res = p.nu1 * dp.lambda1 * dp.lambda2 -
                         (Interval(1.0) + dp.lambda1 + p.nu2 * iv_sqr(dp.lambda1)) * (p.nu4 - dp.lambda1);
    CHECK(res.contains(0.0));
}

TEST_CASE("cubic with an exact unit root", "[model]") {
    // nu chosen so that the cubic coefficients are exact dyadics summing to zero at 1
    ThomasParams p;
    p.nu = Interval(1.0);
    p.nu1 = Interval(8.0);
    p.nu2 = Interval(1.0);
    p.nu3 = Interval(0.25);
    p.nu4 = Interval(2.0);
    p.nu5 = Interval(4.375);
    const DerivedParams dp = derive_params(p, 1.0);
    CHECK(dp.lambda1.contains(1.0));
    CHECK(dp.lambda1.width() < 1e-12);
}

TEST_CASE("root errors", "[model]") {
    ThomasParams p = theorem1_params();
    CHECK_THROWS_AS(derive_params(p, 1e6, 1e-8), NoRealRoot);
}

TEST_CASE("invertibility cases", "[model]") {
    const ThomasParams p = theorem1_params();
    const DerivedParams dp = derive_params(p, default_lambda1_hint(theorem1_params_d()));
    CHECK(check_invertibility(dp, p) != InvertCase::NotInvertible);

    // decoupled: lambda5 lambda7 = 0, lambda6 < 1 gives the real case
    ThomasParams q = p;
    q.nu = Interval(1.0);
    DerivedParams dq = dp;
    dq.lambda5 = Interval(0.0);
    dq.lambda6 = Interval(0.5);
    dq.lambda7 = Interval(0.3);
    CHECK(check_invertibility(dq, q) == InvertCase::CaseReal);

    // force a vanishing determinant on the positive axis
    dq.lambda6 = Interval(3.0);
    CHECK(check_invertibility(dq, q) == InvertCase::NotInvertible);
}

TEST_CASE("kappa0 formulas", "[model]") {
    ThomasParams p = theorem1_params();
    CHECK(kappa0(p).contains(4.0 / 3.0));
    CHECK(kappa0(p).hi() <= 1.34);
    p.nu2 = Interval(0.5);
    CHECK(kappa0(p).contains(2.0));
}

TEST_CASE("decoupled diagonal symbol M1 norm", "[model][mnorm]") {
    // lambda5 = lambda7 = 0: |l^{-1}|_M1 = max(1/(1-lambda6), 1/nu3) at s = 0
    ThomasParams p;
    p.nu = Interval(1.0);
    p.nu1 = Interval(8.0);
    p.nu2 = Interval(1.0);
    p.nu3 = Interval(0.28);
    p.nu4 = Interval(2.0);
    p.nu5 = Interval(4.0);
    DerivedParams dp;
    dp.lambda1 = Interval(1.0);
    dp.lambda2 = dp.lambda3 = dp.lambda4 = Interval(0.0);
    dp.lambda5 = Interval(0.0);
    dp.lambda6 = Interval(0.5);
    dp.lambda7 = Interval(0.0);
    const MNorms mn = m_norms_of_l_inverse(dp, p);
    const double expected = 1.0 / 0.28;
    CHECK(mn.m1.hi() >= expected);
    CHECK(mn.m1.hi() <= expected * 1.002);
    CHECK(mn.sigma0.lo() > 0.0);
}

TEST_CASE("theorem-1 kappa constants against reported values", "[model][mnorm]") {
    const ThomasParams p = theorem1_params();
    const DerivedParams dp = derive_params(p, default_lambda1_hint(theorem1_params_d()));
    const MNorms mn = m_norms_of_l_inverse(dp, p);
    const KappaConstants k = kappa_constants(dp, p, mn.m1, mn.m2);
    CHECK(k.k0.hi() <= 1.34);
    CHECK(k.k1.hi() <= 1.0234 * 1.01);
    CHECK(k.k1.hi() >= 0.5);
    CHECK(mn.sigma0.lo() > 0.0);
}

TEST_CASE("mu polynomial identity", "[model][property]") {
    const ThomasParams p = theorem1_params();
    const DerivedParams dp = derive_params(p, default_lambda1_hint(theorem1_params_d()));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Interval u1(u(rng)), u2(u(rng));
        const Interval w1 = Interval(1.0) + u1 + dp.lambda1 + p.nu2 * iv_sqr(u1 + dp.lambda1);
        const Interval w2 = dp.lambda3 * iv_sqr(u1) + dp.lambda4 * u1 - p.nu1 * u1 * u2 -
                            p.nu1 * dp.lambda1 * u2;
        const Interval d1w1 = Interval(1.0) + Interval(2.0) * p.nu2 * (u1 + dp.lambda1);
        const Interval d1w2 = Interval(2.0) * dp.lambda3 * u1 + dp.lambda4 - p.nu1 * u2;
        const Interval lhs = w1 * d1w2 - w2 * d1w1;
        const Interval rhs = mu_poly_value(dp, u1, u2);
        CHECK((lhs - rhs).contains(0.0));
    }
}

TEST_CASE("assembled nonlinearities at the trivial state", "[model]") {
    const ThomasParams p = theorem1_params();
    const DerivedParams dp = derive_params(p, default_lambda1_hint(theorem1_params_d()));
    SeqPair zero(CosineSeq(Interval(30.0), Interval(1.0), 0), CosineSeq(Interval(30.0), Interval(1.0), 0));

    const LocalizedNonlinearity loc = assemble_localized(zero, dp, p);
    CHECK(norm(loc.Psi, SeqNorm::l1_tau).hi() == 0.0);
    const Interval phi0 = Interval(1.0) + dp.lambda1 + p.nu2 * iv_sqr(dp.lambda1);
    CHECK(loc.Phi.at(0).contains(phi0.mid()));
    CHECK(norm(loc.Phi - e0_seq(zero.u1.d, zero.u1.tau, phi0), SeqNorm::l1_tau).contains(0.0));

    const PeriodicNonlinearity per = assemble_periodic(zero, p);
    CHECK(norm(per.Psi_p, SeqNorm::l1_tau).hi() == 0.0);
    CHECK(per.Phi_p.at(0).contains(1.0));

    // g(0) = 0 and Dg(0) = 0: the e0 components of V1, V2 cancel lambda6, lambda7
    const Interval v1_0 = -(loc.Phi.at(0) * loc.Psi3.at(0)) / iv_sqr(phi0) - dp.lambda6;
    const Interval v2_0 = -loc.Psi2.at(0) / phi0 - dp.lambda7;
    CHECK(v1_0.contains(0.0));
    CHECK(v2_0.contains(0.0));
}

TEST_CASE("algebraic cancellation in the periodic nonlinearity", "[model]") {
    // U2 = nu U1 makes Psi_p vanish identically
    const ThomasParams p = theorem1_params();
    const Interval d(5.0), tau(1.0);
    CosineSeq u1(d, tau, 4);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> un(-0.5, 0.5);
    for (auto& c : u1.c) c = Interval(un(rng));
    const CosineSeq u2 = p.nu * u1;
    const PeriodicNonlinearity per = assemble_periodic(SeqPair(u1, u2), p);
    CHECK(norm(per.Psi_p, SeqNorm::l1_tau).contains(0.0));
}

TEST_CASE("assembled sequences match the pointwise oracle", "[model][property]") {
    const ThomasParams p = theorem1_params();
    const double hint = default_lambda1_hint(theorem1_params_d());
    const DerivedParams dp = derive_params(p, hint);
    const Interval d(10.0), tau(1.0);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> un(-0.1, 0.1);
    CosineSeq u1(d, tau, 6), u2(d, tau, 6);
    for (auto& c : u1.c) c = Interval(un(rng));
    for (auto& c : u2.c) c = Interval(un(rng));
    const SeqPair ub(u1, u2);
    const LocalizedNonlinearity loc = assemble_localized(ub, dp, p);
    const PeriodicNonlinearity per = assemble_periodic(ub, p);

    const ModelD md = derive_params_d(theorem1_params_d(), hint);
    for (double x : {0.0, 0.7, 2.31, 9.4}) {
        const Interval X(x);
        const double a = eval_at(u1, X).mid(), b = eval_at(u2, X).mid();
        const double psi = md.lambda3 * a * a + md.lambda4 * a - 8.0 * a * b - 8.0 * md.lambda1 * b;
        const double phi = 1.0 + a + md.lambda1 + 1.0 * (a + md.lambda1) * (a + md.lambda1);
        const double psi3 = 2 * md.lambda3 * a + md.lambda4 - 8.0 * b;
        CHECK(std::fabs(eval_at(loc.Psi, X).mid() - psi) < 1e-8 * (1 + std::fabs(psi)));
        CHECK(std::fabs(eval_at(loc.Phi, X).mid() - phi) < 1e-8 * (1 + std::fabs(phi)));
        CHECK(std::fabs(eval_at(loc.Psi3, X).mid() - psi3) < 1e-8 * (1 + std::fabs(psi3)));

        const double psip = -(8.0 * 1.1664 * a * a - 8.0 * a * b);
        const double phip = 1.0 + a + a * a;
        const double psip1 = -8.0 * (-b + 2 * 1.1664 * a + 1.1664 * a * a + a * a * b);
        CHECK(std::fabs(eval_at(per.Psi_p, X).mid() - psip) < 1e-8 * (1 + std::fabs(psip)));
        CHECK(std::fabs(eval_at(per.Phi_p, X).mid() - phip) < 1e-8 * (1 + std::fabs(phip)));
        CHECK(std::fabs(eval_at(per.Psi_p1, X).mid() - psip1) < 1e-8 * (1 + std::fabs(psip1)));
    }
}
