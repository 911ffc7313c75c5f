#pragma once

// File formats: parameter files, candidate files, branch segment files,
// interval sequence files, and certificate emission.  Numbers serialize as
// decimal strings (17 significant digits) plus hexadecimal endpoints for
// bit-exact round-trips.

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "tcap/candidate.hpp"
#include "tcap/interval.hpp"
#include "tcap/sequence.hpp"
#include "tcap/thomas_model.hpp"

namespace tcap {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse a decimal (or hexfloat) literal.  `outward` widens by one ulp on
// each side unless the literal is exactly representable; the default treats
// the nearest double as the intended (point) parameter value.
inline Interval parse_number(const std::string& text, bool outward) {
    const char* s = text.c_str();
    char* end = nullptr;
    const double x = std::strtod(s, &end);
    if (end == s) throw ConfigError("cannot parse number: " + text);
    if (!outward) return Interval(x);
    // exactness test through a long double re-evaluation of the decimal
    const long double lx = strtold(s, nullptr);
    if ((long double)x == lx) return Interval(x);
    return Interval(rnd::down(x), rnd::up(x));
}

inline Interval parse_number(const json& j, bool outward = false) {
    if (j.is_string()) return parse_number(j.get<std::string>(), outward);
    if (j.is_number()) return Interval(j.get<double>());
    throw ConfigError("expected a number or numeric string");
}

inline std::string dec_up(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string hexstr(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

inline json interval_to_json(const Interval& v) {
    return json{{"dec", dec_up(v.hi())}, {"lo", hexstr(v.lo())}, {"hi", hexstr(v.hi())}};
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << j.dump(1) << "\n";
}

// ---- parameter files ----

struct ParamsFile {
    ThomasParams iv;
    ParamsD pd;
    double lambda1_hint = 0.0;
    bool has_hint = false;
};

inline ParamsFile load_params(const std::string& path, bool outward = false) {
    const json j = load_json(path);
    ParamsFile f;
    auto get = [&](const char* name) {
        if (!j.contains(name)) throw ConfigError(std::string("params file missing field ") + name);
        return parse_number(j.at(name), outward);
    };
    f.iv.nu = get("nu");
    f.iv.nu1 = get("nu1");
    f.iv.nu2 = get("nu2");
    f.iv.nu3 = get("nu3");
    f.iv.nu4 = get("nu4");
    f.iv.nu5 = get("nu5");
    f.pd = ParamsD{f.iv.nu.mid(), f.iv.nu1.mid(), f.iv.nu2.mid(),
                   f.iv.nu3.mid(), f.iv.nu4.mid(), f.iv.nu5.mid()};
    if (j.contains("lambda1_hint")) {
        f.lambda1_hint = j.at("lambda1_hint").get<double>();
        f.has_hint = true;
    }
    return f;
}

inline double resolve_hint(const ParamsFile& f) {
    return f.has_hint ? f.lambda1_hint : default_lambda1_hint(f.pd);
}

// ---- float candidate files ----

inline json candidate_to_json(const FloatSeqPair& u) {
    json j;
    j["d"] = dec_up(u.d);
    j["d_hex"] = hexstr(u.d);
    j["N0"] = u.support();
    json u1 = json::array(), u2 = json::array();
    for (double x : u.u1) u1.push_back(hexstr(x));
    for (double x : u.u2) u2.push_back(hexstr(x));
    j["u1"] = std::move(u1);
    j["u2"] = std::move(u2);
    return j;
}

inline FloatSeqPair candidate_from_json(const json& j) {
    FloatSeqPair u;
    u.d = j.contains("d_hex") ? std::strtod(j.at("d_hex").get<std::string>().c_str(), nullptr)
                              : std::strtod(j.at("d").get<std::string>().c_str(), nullptr);
    for (const auto& x : j.at("u1")) u.u1.push_back(std::strtod(x.get<std::string>().c_str(), nullptr));
    for (const auto& x : j.at("u2")) u.u2.push_back(std::strtod(x.get<std::string>().c_str(), nullptr));
    if (u.u1.size() != u.u2.size()) throw ConfigError("candidate components differ in size");
    return u;
}

inline void save_candidate(const std::string& path, const FloatSeqPair& u) {
    save_json(path, candidate_to_json(u));
}

inline FloatSeqPair load_candidate(const std::string& path) { return candidate_from_json(load_json(path)); }

// ---- branch segment candidate files ----

inline json branch_to_json(const FloatChebBranch& b) {
    json j;
    j["d"] = hexstr(b.d);
    j["N0"] = b.n0;
    j["Nc"] = b.nc;
    auto vec = [](const std::vector<double>& v) {
        json a = json::array();
        for (double x : v) a.push_back(hexstr(x));
        return a;
    };
    auto mat = [&vec](const std::vector<std::vector<double>>& m) {
        json a = json::array();
        for (const auto& row : m) a.push_back(vec(row));
        return a;
    };
    j["nu5_cheb"] = vec(b.nu5);
    j["dnu5_cheb"] = vec(b.dnu5);
    j["u1_cheb"] = mat(b.u1);
    j["u2_cheb"] = mat(b.u2);
    j["du1_cheb"] = mat(b.du1);
    j["du2_cheb"] = mat(b.du2);
    return j;
}

inline FloatChebBranch branch_from_json(const json& j) {
    FloatChebBranch b;
    b.d = std::strtod(j.at("d").get<std::string>().c_str(), nullptr);
    b.n0 = j.at("N0").get<std::size_t>();
    b.nc = j.at("Nc").get<std::size_t>();
    auto vec = [](const json& a) {
        std::vector<double> v;
        for (const auto& x : a) v.push_back(std::strtod(x.get<std::string>().c_str(), nullptr));
        return v;
    };
    auto mat = [&vec](const json& a) {
        std::vector<std::vector<double>> m;
        for (const auto& row : a) m.push_back(vec(row));
        return m;
    };
    b.nu5 = vec(j.at("nu5_cheb"));
    b.dnu5 = vec(j.at("dnu5_cheb"));
    b.u1 = mat(j.at("u1_cheb"));
    b.u2 = mat(j.at("u2_cheb"));
    b.du1 = mat(j.at("du1_cheb"));
    b.du2 = mat(j.at("du2_cheb"));
    return b;
}

// ---- interval sequence files ----

inline json sequence_to_json(const CosineSeq& s, bool hex = true) {
    json j;
    j["d"] = json::array({hexstr(s.d.lo()), hexstr(s.d.hi())});
    j["tau"] = json::array({hexstr(s.tau.lo()), hexstr(s.tau.hi())});
    json coeffs = json::array();
    for (const Interval& c : s.c)
        coeffs.push_back(hex ? json::array({hexstr(c.lo()), hexstr(c.hi())})
                             : json::array({dec_up(c.lo()), dec_up(c.hi())}));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline CosineSeq sequence_from_json(const json& j) {
    auto num = [](const json& x) { return std::strtod(x.get<std::string>().c_str(), nullptr); };
    const Interval d(num(j.at("d").at(0)), num(j.at("d").at(1)));
    const Interval tau(num(j.at("tau").at(0)), num(j.at("tau").at(1)));
    CosineSeq s(d, tau, j.at("coeffs").size() - 1);
    std::size_t i = 0;
    for (const auto& c : j.at("coeffs")) s.c[i++] = Interval(num(c.at(0)), num(c.at(1)));
    return s;
}

} // namespace tcap
