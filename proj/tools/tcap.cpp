// Command-line driver: candidate construction, certified proofs of
// localized / periodic / branch solutions, plot-data export, and batch runs.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>

#include "tcap/branch.hpp"
#include "tcap/io.hpp"
#include "tcap/localized.hpp"
#include "tcap/periodic.hpp"

namespace tcap {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

json job_echo(const json& extra) {
    json j = extra;
    j["schema"] = "tcap-certificate-v1";
    return j;
}

json cert_to_json(const LocalizedCertificate& c) {
    json b;
    b["Y0"] = interval_to_json(c.Y0);
    b["Z1"] = interval_to_json(c.Z1);
    b["Z2_at_r0"] = interval_to_json(c.Z2_at_r0);
    b["Z2_coeff0"] = interval_to_json(c.Z2.coef[0]);
    b["Z2_coeff1"] = interval_to_json(c.Z2.coef[1]);
    b["Z2_coeff2"] = interval_to_json(c.Z2.coef[2]);
    b["Z2_coeff3"] = interval_to_json(c.Z2.coef[3]);
    b["r0"] = interval_to_json(c.r0);
    b["radii_polynomial"] = interval_to_json(c.poly_value);
    b["contraction_sum"] = interval_to_json(c.second_value);
    b["B11_norm2"] = interval_to_json(c.B11_norm2);
    b["BN_norm2"] = interval_to_json(c.BN_norm2);
    b["defect"] = interval_to_json(c.defect);
    b["defect_sq"] = interval_to_json(c.defect_sq);
    b["Zb"] = interval_to_json(c.Zb);
    b["Zu"] = interval_to_json(c.Zu);
    b["Zinf"] = interval_to_json(c.Zinf);
    b["kappa0"] = interval_to_json(c.kappa0);
    b["kappa1"] = interval_to_json(c.kappa1);
    b["m1"] = interval_to_json(c.m1);
    b["m2"] = interval_to_json(c.m2);
    b["sigma0"] = interval_to_json(c.sigma0);
    b["lambda1"] = interval_to_json(c.lambda1);
    b["decay_rate"] = interval_to_json(c.a_decay);
    json j;
    j["kind"] = "localized";
    j["pass"] = c.pass;
    j["N0"] = c.N0;
    j["N"] = c.N;
    j["d"] = dec_up(c.d.hi());
    j["bounds"] = std::move(b);
    return j;
}

json cert_to_json(const PeriodicCertificate& c) {
    json b;
    b["Y0"] = interval_to_json(c.Y0);
    b["Z1"] = interval_to_json(c.Z1);
    b["Z2"] = interval_to_json(c.Z2);
    b["R"] = interval_to_json(c.R);
    b["r_min"] = interval_to_json(c.r_min);
    b["r_max"] = interval_to_json(c.r_max);
    b["ApN_norm"] = interval_to_json(c.ApN_norm);
    b["L_inf"] = interval_to_json(c.L_inf);
    b["defect"] = interval_to_json(c.defect);
    b["defect_sq"] = interval_to_json(c.defect_sq);
    b["Z11"] = interval_to_json(c.Z11);
    b["Z12"] = interval_to_json(c.Z12);
    b["Zinf"] = interval_to_json(c.Zinf);
    b["Y01"] = interval_to_json(c.Y01);
    b["Y02"] = interval_to_json(c.Y02);
    json j;
    j["kind"] = "periodic";
    j["pass"] = c.pass;
    j["N0"] = c.N0;
    j["N"] = c.N;
    j["d"] = dec_up(c.d.hi());
    j["tau"] = dec_up(c.tau.hi());
    j["bounds"] = std::move(b);
    return j;
}

json cert_to_json(const BranchSegmentCertificate& c) {
    json b;
    b["Y0s"] = interval_to_json(c.Y0s);
    b["Z1s"] = interval_to_json(c.Z1s);
    b["Z2s"] = interval_to_json(c.Z2s);
    b["R"] = interval_to_json(c.R);
    b["r_min"] = interval_to_json(c.r_min);
    b["r_max"] = interval_to_json(c.r_max);
    b["AcN_norm"] = interval_to_json(c.AcN_norm);
    b["L_inf"] = interval_to_json(c.L_inf);
    b["defect"] = interval_to_json(c.defect);
    b["defect_sq"] = interval_to_json(c.defect_sq);
    b["Z11"] = interval_to_json(c.Z11);
    b["Z12"] = interval_to_json(c.Z12);
    b["Zinf"] = interval_to_json(c.Zinfs);
    b["Y01"] = interval_to_json(c.Y01);
    b["Y02"] = interval_to_json(c.Y02);
    b["Y03"] = interval_to_json(c.Y03);
    b["Y04"] = interval_to_json(c.Y04);
    b["nu5_start"] = interval_to_json(c.nu5_start);
    b["nu5_end"] = interval_to_json(c.nu5_end);
    json j;
    j["kind"] = "branch-segment";
    j["pass"] = c.pass;
    j["N0"] = c.N0;
    j["N"] = c.N;
    j["Nc"] = c.Nc;
    j["d"] = dec_up(c.d.hi());
    j["tau"] = dec_up(c.tau.hi());
    j["bounds"] = std::move(b);
    return j;
}

AnsatzSpec parse_ansatz(const std::string& text) {
    AnsatzSpec a;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &a.beta1, &a.zeta1, &a.beta2, &a.zeta2) != 4)
        throw ConfigError("ansatz must be 'beta1,zeta1,beta2,zeta2'");
    return a;
}

FloatSeqPair make_candidate(const ParamsFile& pf, SystemKind kind, const AnsatzSpec& a, std::size_t n0,
                            double d, double tol) {
    const double hint = resolve_hint(pf);
    const ModelD md = derive_params_d(pf.pd, hint);
    FloatSeqPair u0 = sech_ansatz(a, pf.pd, md, kind, d, n0);
    return newton_refine(kind, pf.pd, md, u0, tol, 60);
}

int cmd_build_candidate(const std::string& params_path, const std::string& kind_name,
                        const std::string& ansatz, std::size_t n0, double d, double tol,
                        const std::string& out) {
    const ParamsFile pf = load_params(params_path);
    const SystemKind kind = kind_name == "localized" ? SystemKind::localized : SystemKind::periodic;
    const FloatSeqPair u = make_candidate(pf, kind, parse_ansatz(ansatz), n0, d, tol);
    save_candidate(out, u);
    const double res = residual(kind, pf.pd, derive_params_d(pf.pd, resolve_hint(pf)), u).norm();
    std::printf("candidate written to %s (newton residual %.3e)\n", out.c_str(), res);
    return 0;
}

int cmd_prove_localized(const std::string& params_path, const std::string& cand_path, std::size_t n0,
                        std::size_t n, double r0, const std::string& out) {
    const double t0 = now_seconds();
    const ParamsFile pf = load_params(params_path);
    const FloatSeqPair cand = load_candidate(cand_path);
    LocalizedOptions opt;
    opt.N0 = n0 ? n0 : cand.support();
    opt.N = n;
    opt.lambda1_hint = resolve_hint(pf);
    opt.r0 = Interval(r0);
    const LocalizedCertificate c = certify_localized(pf.iv, cand, opt);
    json j = cert_to_json(c);
    j["params_file"] = params_path;
    j["candidate_file"] = cand_path;
    j["wall_time_s"] = now_seconds() - t0;
    j["schema"] = "tcap-certificate-v1";
    if (!out.empty()) save_json(out, j);
    std::printf("localized proof: %s  (Y0 <= %s, Z1 <= %s, Z2(r0) <= %s)\n", c.pass ? "PASS" : "FAIL",
                dec_up(c.Y0.hi()).c_str(), dec_up(c.Z1.hi()).c_str(), dec_up(c.Z2_at_r0.hi()).c_str());
    return c.pass ? 0 : 1;
}

int cmd_prove_periodic(const std::string& params_path, const std::string& cand_path, std::size_t n0,
                       std::size_t n, double tau, double big_r, const std::string& out) {
    const double t0 = now_seconds();
    const ParamsFile pf = load_params(params_path);
    const FloatSeqPair cand = load_candidate(cand_path);
    PeriodicOptions opt;
    opt.N0 = n0 ? n0 : cand.support();
    opt.N = n;
    opt.tau = Interval(tau);
    opt.R = Interval(big_r);
    const PeriodicCertificate c = certify_periodic(pf.iv, cand, opt);
    json j = cert_to_json(c);
    j["params_file"] = params_path;
    j["candidate_file"] = cand_path;
    j["wall_time_s"] = now_seconds() - t0;
    j["schema"] = "tcap-certificate-v1";
    if (!out.empty()) save_json(out, j);
    std::printf("periodic proof: %s  (Y0 <= %s, Z1 <= %s, Z2 <= %s)\n", c.pass ? "PASS" : "FAIL",
                dec_up(c.Y0.hi()).c_str(), dec_up(c.Z1.hi()).c_str(), dec_up(c.Z2.hi()).c_str());
    return c.pass ? 0 : 1;
}

int cmd_build_branch(const std::string& params_path, const std::string& from_candidate,
                     const std::string& ansatz, std::size_t n0, double d, double step, int steps,
                     std::size_t nc, int direction, const std::string& out) {
    const ParamsFile pf = load_params(params_path);
    const double hint = resolve_hint(pf);
    FloatSeqPair start;
    if (!from_candidate.empty()) {
        start = load_candidate(from_candidate);
    } else {
        start = make_candidate(pf, SystemKind::periodic, parse_ansatz(ansatz), n0, d, 1e-11);
    }
    BranchSample sample = arclength_continue(pf.pd, hint, start, direction < 0 ? -step : step, steps);
    const FloatChebBranch fb = chebyshev_fit(pf.pd, hint, sample, nc);
    save_json(out, branch_to_json(fb));
    std::printf("branch segment written to %s (nu5 %.6f -> %.6f)\n", out.c_str(),
                sample.states.front().nu5, sample.states.back().nu5);
    return 0;
}

int cmd_prove_branch(const std::string& params_path, const std::vector<std::string>& segment_paths,
                     const std::vector<std::size_t>& ns, double tau, const std::vector<double>& rs,
                     const std::string& out_prefix) {
    const double t0 = now_seconds();
    const ParamsFile pf = load_params(params_path);
    const double hint = resolve_hint(pf);
    if (segment_paths.empty()) throw ConfigError("no segments given");
    if (ns.size() != segment_paths.size() || rs.size() != segment_paths.size())
        throw ConfigError("--N and --R must list one value per segment");

    std::vector<FloatChebBranch> branches;
    std::vector<BranchSegmentCertificate> certs;
    bool all_pass = true;
    json segs = json::array();
    for (std::size_t i = 0; i < segment_paths.size(); ++i) {
        branches.push_back(branch_from_json(load_json(segment_paths[i])));
        BranchSegmentOptions opt;
        opt.N = ns[i];
        opt.tau = Interval(tau);
        opt.R = Interval(rs[i]);
        const BranchSegmentCertificate c = certify_branch_segment(pf.iv, branches.back(), opt, pf.pd, hint);
        std::printf("segment %zu: %s  (Y0 <= %s, Z1 <= %s, Z2 <= %s)\n", i + 1, c.pass ? "PASS" : "FAIL",
                    dec_up(c.Y0s.hi()).c_str(), dec_up(c.Z1s.hi()).c_str(), dec_up(c.Z2s.hi()).c_str());
        all_pass = all_pass && c.pass;
        json cj = cert_to_json(c);
        cj["segment_file"] = segment_paths[i];
        segs.push_back(cj);
        certs.push_back(c);
    }
    json glue = json::array();
    for (std::size_t i = 0; i + 1 < certs.size(); ++i) {
        const SegmentEndpoint we = segment_endpoint(branches[i], Interval(tau), false);
        const SegmentEndpoint ws = segment_endpoint(branches[i + 1], Interval(tau), true);
        const GluingRecord g = glue_segments(certs[i], certs[i + 1], we, ws);
        std::printf("gluing %zu->%zu: %s (gap + r_min <= %s vs r_max >= %s)\n", i + 1, i + 2,
                    g.pass ? "PASS" : "FAIL", dec_up(g.lhs.hi()).c_str(), dec_up(g.rhs.lo()).c_str());
        all_pass = all_pass && g.pass;
        json gj;
        gj["pass"] = g.pass;
        gj["gap"] = interval_to_json(g.gap);
        gj["lhs"] = interval_to_json(g.lhs);
        gj["rhs"] = interval_to_json(g.rhs);
        glue.push_back(gj);
    }
    json j;
    j["schema"] = "tcap-certificate-v1";
    j["kind"] = "branch";
    j["pass"] = all_pass;
    j["segments"] = segs;
    j["gluing"] = glue;
    j["wall_time_s"] = now_seconds() - t0;
    if (!out_prefix.empty()) save_json(out_prefix, j);
    std::printf("branch proof: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}

int cmd_export_plot(const std::string& cand_path, const std::string& seg_path, int points,
                    const std::string& out) {
    std::ofstream os(out);
    if (!os) throw ConfigError("cannot write " + out);
    if (!seg_path.empty()) {
        const FloatChebBranch fb = branch_from_json(load_json(seg_path));
        os << "s,nu5,u1_amplitude\n";
        for (int k = 0; k <= points; ++k) {
            const double s = -1.0 + 2.0 * k / points;
            auto evalc = [&](const std::vector<double>& c) {
                double acc = c.empty() ? 0.0 : c[0];
                // Clenshaw on the 2x convention
                double b1 = 0, b2 = 0;
                for (std::size_t j = c.size(); j-- > 1;) {
                    const double b0 = 2 * s * b1 - b2 + 2 * c[j];
                    b2 = b1;
                    b1 = b0;
                }
                return acc + s * b1 - b2;
            };
            double amp = 0.0;
            FloatSeqPair u;
            u.d = fb.d;
            u.resize(fb.n0);
            for (std::size_t n = 0; n <= fb.n0; ++n) u.u1[n] = evalc(fb.u1[n]);
            for (std::size_t n = 1; n <= fb.n0; ++n) amp += 2.0 * std::fabs(u.u1[n]);
            os << s << "," << evalc(fb.nu5) << "," << amp << "\n";
        }
        return 0;
    }
    const FloatSeqPair u = load_candidate(cand_path);
    os << "x,u1,u2\n";
    for (int k = 0; k <= points; ++k) {
        const double x = -u.d + 2.0 * u.d * k / points;
        double s1 = u.u1[0], s2 = u.u2[0];
        for (std::size_t n = 1; n <= u.support(); ++n) {
            const double c = std::cos(3.141592653589793 * double(n) * x / u.d);
            s1 += 2.0 * u.u1[n] * c;
            s2 += 2.0 * u.u2[n] * c;
        }
        os << x << "," << s1 << "," << s2 << "\n";
    }
    return 0;
}

int run_job(const std::string& job_path) {
    const json j = load_json(job_path);
    const std::string kind = j.at("kind").get<std::string>();
    const std::string dir = job_path.find('/') != std::string::npos
                                ? job_path.substr(0, job_path.rfind('/') + 1)
                                : std::string();
    auto path_of = [&dir](const std::string& p) {
        return (!p.empty() && p[0] != '/') ? dir + p : p;
    };
    const std::string params = path_of(j.at("params").get<std::string>());
    const std::string out = j.contains("out") ? j.at("out").get<std::string>() : std::string();

    auto candidate_path = [&]() -> std::string {
        if (j.contains("candidate")) return path_of(j.at("candidate").get<std::string>());
        // build from the ansatz spec
        const ParamsFile pf = load_params(params);
        const json& a = j.at("ansatz");
        AnsatzSpec spec{a.at("beta1").get<double>(), a.at("zeta1").get<double>(),
                        a.at("beta2").get<double>(), a.at("zeta2").get<double>()};
        const SystemKind k = kind == "localized" ? SystemKind::localized : SystemKind::periodic;
        const FloatSeqPair u =
            make_candidate(pf, k, spec, j.at("N0").get<std::size_t>(), j.at("d").get<double>(),
                           j.contains("newton_tol") ? j.at("newton_tol").get<double>() : 1e-11);
        const std::string tmp = job_path + ".candidate.json";
        save_candidate(tmp, u);
        return tmp;
    };

    if (kind == "localized")
        return cmd_prove_localized(params, candidate_path(), j.value("N0", std::size_t(0)),
                                   j.at("N").get<std::size_t>(), j.at("r0").get<double>(), out);
    if (kind == "periodic")
        return cmd_prove_periodic(params, candidate_path(), j.value("N0", std::size_t(0)),
                                  j.at("N").get<std::size_t>(), j.at("tau").get<double>(),
                                  j.at("R").get<double>(), out);
    if (kind == "branch") {
        std::vector<std::string> segs;
        std::vector<std::size_t> ns;
        std::vector<double> rs;
        for (const auto& s : j.at("segments")) {
            segs.push_back(path_of(s.at("file").get<std::string>()));
            ns.push_back(s.at("N").get<std::size_t>());
            rs.push_back(s.at("R").get<double>());
        }
        return cmd_prove_branch(params, segs, ns, j.at("tau").get<double>(), rs, out);
    }
    throw ConfigError("unknown job kind: " + kind);
}

} // namespace
} // namespace tcap

int main(int argc, char** argv) {
    using namespace tcap;
    CLI::App app{"certified existence proofs for patterns in the 1D Thomas reaction-diffusion model"};
    app.require_subcommand(1);

    std::string params, candidate, ansatz = "1,1,0,1", out, kind = "periodic", segment;
    std::vector<std::string> segments, jobs;
    std::vector<std::size_t> n_list;
    std::vector<double> r_list;
    std::size_t n0 = 0, nn = 0, nc = 16;
    double d = 5.0, tol = 1e-11, r0 = 0.0, tau = 1.0, big_r = 0.0, step = 0.05;
    int steps = 10, direction = 1, points = 400;

    auto* bc = app.add_subcommand("build-candidate", "sech ansatz + float Newton refinement");
    bc->add_option("--params", params)->required();
    bc->add_option("--kind", kind)->check(CLI::IsMember({"localized", "periodic"}));
    bc->add_option("--ansatz", ansatz, "beta1,zeta1,beta2,zeta2");
    bc->add_option("--N0", n0)->required();
    bc->add_option("--d", d)->required();
    bc->add_option("--newton-tol", tol);
    bc->add_option("--out", out)->required();

    auto* pl = app.add_subcommand("prove-localized", "certify a localized pattern");
    pl->add_option("--params", params)->required();
    pl->add_option("--candidate", candidate)->required();
    pl->add_option("--N0", n0);
    pl->add_option("--N", nn)->required();
    pl->add_option("--r0", r0)->required();
    pl->add_option("--out", out);

    auto* pp = app.add_subcommand("prove-periodic", "certify a periodic solution");
    pp->add_option("--params", params)->required();
    pp->add_option("--candidate", candidate)->required();
    pp->add_option("--N0", n0);
    pp->add_option("--N", nn)->required();
    pp->add_option("--tau", tau)->required();
    pp->add_option("--R", big_r)->required();
    pp->add_option("--out", out);

    auto* bb = app.add_subcommand("build-branch", "pseudo-arclength continuation + Chebyshev fit");
    bb->add_option("--params", params)->required();
    bb->add_option("--from-candidate", candidate);
    bb->add_option("--ansatz", ansatz);
    bb->add_option("--N0", n0)->required();
    bb->add_option("--d", d)->required();
    bb->add_option("--step-size", step);
    bb->add_option("--steps", steps);
    bb->add_option("--Nc", nc)->required();
    bb->add_option("--direction", direction);
    bb->add_option("--out", out)->required();

    auto* pb = app.add_subcommand("prove-branch", "certify branch segments and glue them");
    pb->add_option("--params", params)->required();
    pb->add_option("--segments", segments)->required();
    pb->add_option("--N", n_list)->required();
    pb->add_option("--tau", tau)->required();
    pb->add_option("--R", r_list)->required();
    pb->add_option("--out", out);

    auto* ep = app.add_subcommand("export-plot", "grid samples of a candidate or branch");
    ep->add_option("--candidate", candidate);
    ep->add_option("--segment", segment);
    ep->add_option("--points", points);
    ep->add_option("--out", out)->required();

    auto* ba = app.add_subcommand("batch", "run job files; exit 0 iff all pass");
    ba->add_option("jobs", jobs)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bc->parsed()) return cmd_build_candidate(params, kind, ansatz, n0, d, tol, out);
        if (pl->parsed()) return cmd_prove_localized(params, candidate, n0, nn, r0, out);
        if (pp->parsed()) return cmd_prove_periodic(params, candidate, n0, nn, tau, big_r, out);
        if (bb->parsed())
            return cmd_build_branch(params, candidate, ansatz, n0, d, step, steps, nc, direction, out);
        if (pb->parsed()) return cmd_prove_branch(params, segments, n_list, tau, r_list, out);
        if (ep->parsed()) return cmd_export_plot(candidate, segment, points, out);
        if (ba->parsed()) {
            int rc = 0;
            for (const auto& jpath : jobs) {
                std::printf("== job %s\n", jpath.c_str());
                rc |= run_job(jpath);
            }
            return rc;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
