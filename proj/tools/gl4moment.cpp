// gl4moment: command-line front end. JSON reports on stdout (CSV where asked),
// diagnostics on stderr. Exit codes: 0 success, 1 failed check or runtime
// failure, 2 usage error or malformed input.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gl4/characters.hpp"
#include "gl4/io.hpp"
#include "gl4/verify.hpp"

namespace {

using gl4::io::json;
using gl4::satake::cplx;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

gl4::satake::ArchParams parse_mu(const std::string& text) {
    gl4::satake::ArchParams mu;
    mu.mu = gl4::io::parse_alpha(text);
    return mu;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto end = text.find(sep, start);
        out.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

double parse_real(const std::string& text) {
    cplx z = gl4::io::parse_complex(text);
    if (z.imag() != 0.0) throw UsageError("expected a real number, got '" + text + "'");
    return z.real();
}

int char_table(gl4::characters::u64 q) {
    if (q == 0) throw UsageError("--q must be positive");
    auto chars = gl4::characters::enumerate_characters(q);
    std::cout << "index,conductor,parity,order\n";
    for (std::size_t i = 0; i < chars.size(); ++i)
        std::cout << i << ',' << chars[i].conductor() << ',' << (chars[i].is_even() ? "even" : "odd") << ','
                  << chars[i].order() << '\n';
    return kOk;
}

int orthogonality_check(gl4::characters::u64 qmax, int pairs, std::uint64_t seed) {
    if (qmax == 0) throw UsageError("--qmax must be positive");
    constexpr double kTol = 1e-9;
    gl4::verify::Rng rng(seed);
    json rows = json::array();
    bool all = true;
    for (gl4::characters::u64 q = 1; q <= qmax; ++q) {
        auto chars = gl4::characters::even_primitive_characters(q);
        bool phi_ok = static_cast<long long>(chars.size()) == gl4::characters::phi_flat(q) &&
                      gl4::characters::even_primitive_orthogonality_rhs(q, 1, 1) ==
                          boost::rational<long long>(static_cast<long long>(chars.size()));
        double worst = 0.0;
        for (int k = 0; k < pairs; ++k) {
            gl4::arith::i64 m, n;
            do {
                m = static_cast<gl4::arith::i64>(rng.integer(1, 100000));
                n = static_cast<gl4::arith::i64>(rng.integer(1, 100000));
            } while (std::gcd(static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n), q) != 1);
            double lhs = gl4::characters::even_primitive_orthogonality_lhs(chars, m, n);
            double rhs = boost::rational_cast<double>(gl4::characters::even_primitive_orthogonality_rhs(q, m, n));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        bool ok = phi_ok && worst < kTol;
        all = all && ok;
        rows.push_back({{"q", q}, {"phi_flat", chars.size()}, {"max_abs_diff", worst}, {"pass", ok}});
    }
    json r = gl4::io::report_header("orthogonality-check", seed);
    r["parameters"] = {{"qmax", qmax}, {"pairs_per_q", pairs}, {"tolerance", kTol}, {"mn_range", {1, 100000}}};
    r["results"] = rows;
    r["pass"] = all;
    emit(r);
    return all ? kOk : kFail;
}

int local_factor(gl4::satake::u64 p, const std::string& alpha, const std::string& s, double tol) {
    if (!gl4::arith::is_prime(p)) throw UsageError("--p must be prime");
    auto a = gl4::io::parse_alpha(alpha);
    auto rep = gl4::local::local_factor_report(a, p, gl4::io::parse_complex(s));
    json r = gl4::io::report_header("local-factor", std::nullopt);
    r["parameters"] = {{"tolerance", tol}};
    r["result"] = gl4::io::to_json(rep);
    bool ok = rep.max_rel_dev < tol;
    r["pass"] = ok;
    emit(r);
    return ok ? kOk : kFail;
}

int global_constants(const std::string& path, gl4::satake::u64 q, gl4::satake::u64 p_max) {
    auto in = gl4::io::load_rep(path);
    if (std::gcd(q, in.global.conductor()) != 1) throw UsageError("--q must be coprime to the conductor");
    auto A = gl4::local::a_constant(0.5, p_max, in.global);
    auto B = gl4::local::bq_constant(0.5, q, in.global);
    json r = gl4::io::report_header("global-constants", std::nullopt);
    r["parameters"] = {{"q", q}, {"p_max", p_max}, {"rep", gl4::io::to_json(in.global, 1000)}};
    r["result"] = {{"A_half", gl4::io::cplx_json(A.value)},
                   {"B_q_half", gl4::io::cplx_json(B)},
                   {"tail_estimate", std::isfinite(A.tail_estimate) ? json(A.tail_estimate) : json("inf")},
                   {"A_divergent", A.divergent},
                   {"primes_used", A.primes}};
    emit(r);
    return kOk;
}

int kernel(const std::string& which, const std::string& mu_text, const std::string& args, double tol,
           std::optional<double> c) {
    auto mu = parse_mu(mu_text);
    gl4::arch::KernelConfig cfg;
    cfg.tol = tol;
    if (c) cfg.c = *c;
    auto parts = split(args, ';');
    json result;
    if (which == "g") {
        if (parts.size() != 2) throw UsageError("kernel g needs --args \"s;t\" with s = re[,im]");
        auto v = gl4::arch::gamma_product(gl4::io::parse_complex(parts[0]), parse_real(parts[1]), mu);
        result = {{"s", gl4::io::cplx_json(v.s)}, {"t", v.t}, {"value", gl4::io::cplx_json(v.value)},
                  {"decay_rate", v.decay_rate}};
    } else if (which == "w") {
        if (parts.size() != 2) throw UsageError("kernel w needs --args \"x;t\"");
        double x = parse_real(parts[0]), t = parse_real(parts[1]);
        auto v = gl4::arch::w_kernel(x, t, mu, cfg);
        result = {{"x", x},         {"t", t},          {"value", v.value}, {"tail_estimate", v.tail_estimate},
                  {"c", v.c},       {"T", v.T},        {"h", v.h},         {"nodes", v.nodes}};
    } else if (which == "v") {
        if (parts.size() != 3) throw UsageError("kernel v needs --args \"xi;eta;mu_scale\"");
        double xi = parse_real(parts[0]), eta = parse_real(parts[1]), sc = parse_real(parts[2]);
        auto v = gl4::arch::v_kernel(xi, eta, sc, mu, cfg);
        result = {{"xi", xi},     {"eta", eta},      {"mu_scale", sc},         {"value", gl4::io::cplx_json(v.value)},
                  {"T_t", v.T_t}, {"h_t", v.h_t},    {"t_nodes", v.t_nodes},   {"tail_estimate", v.tail_estimate}};
    } else {
        throw UsageError("kernel must be one of g, w, v");
    }
    json r = gl4::io::report_header("kernel " + which, std::nullopt);
    json mj = json::array();
    for (auto m : mu.mu) mj.push_back(gl4::io::cplx_json(m));
    r["parameters"] = {{"mu", mj}, {"kernel", gl4::io::to_json(cfg)}};
    r["result"] = result;
    emit(r);
    return kOk;
}

gl4::moment::MomentConfig moment_config(double Q, gl4::satake::u64 p_max, int threads) {
    if (!(Q >= 2.0)) throw UsageError("--Q must be at least 2");
    if (threads < 1) throw UsageError("--threads must be at least 1");
    gl4::moment::MomentConfig cfg;
    cfg.Q = Q;
    cfg.p_max = p_max;
    cfg.threads = threads;
    return cfg;
}

int main_term(const std::string& path, double Q, gl4::satake::u64 p_max, bool csv) {
    auto in = gl4::io::load_rep(path);
    auto cfg = moment_config(Q, p_max, 1);
    auto m = gl4::moment::main_term(in.global, cfg);
    if (csv) {
        std::cout << gl4::io::rows_csv(m.rows);
        return kOk;
    }
    json r = gl4::io::report_header("main-term", std::nullopt);
    r["parameters"] = gl4::io::to_json(cfg);
    r["result"] = gl4::io::to_json(m);
    emit(r);
    return kOk;
}

int brute_moment(const std::string& path, double Q, gl4::satake::u64 p_max, int threads, bool csv) {
    auto in = gl4::io::load_rep(path);
    if (!in.eisenstein) throw UsageError("brute-moment needs a { \"chars\": ... } representation file");
    auto cfg = moment_config(Q, p_max, threads);
    auto m = gl4::moment::moment_compare(*in.eisenstein, cfg);
    if (csv) {
        std::cout << gl4::io::rows_csv(m.lhs.rows);
        return m.identity.pass ? kOk : kFail;
    }
    json r = gl4::io::report_header("brute-moment", std::nullopt);
    json params = gl4::io::to_json(cfg);
    params.erase("threads");
    r["parameters"] = params;
    r["rep"] = gl4::io::to_json(*in.eisenstein);
    r["result"] = gl4::io::to_json(m);
    r["pass"] = m.identity.pass;
    emit(r);
    return m.identity.pass ? kOk : kFail;
}

int verify(const std::string& suite, std::uint64_t seed, int threads) {
    if (threads < 1) throw UsageError("--threads must be at least 1");
    gl4::verify::Options opt{suite, seed, threads};
    auto r = gl4::verify::run(opt);
    r["parameters"] = {{"threads", threads}};
    emit(r);
    return r["pass"].get<bool>() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-moment toolkit for Dirichlet twists of degree-4 L-functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gl4::io::kToolVersion);

    std::uint64_t q = 0, qmax = 0, p = 0, p_max = 100000, seed = 7;
    int pairs = 20, threads = 1;
    double Q = 16.0, tol = 1e-9;
    bool csv = false;
    std::string alpha, s = "0.5", rep, suite = "all", mu, args, which;
    std::optional<double> c;

    auto* ct = app.add_subcommand("char-table", "CSV of the characters mod q");
    ct->add_option("--q", q, "modulus")->required();

    auto* oc = app.add_subcommand("orthogonality-check", "even-primitive orthogonality per modulus");
    oc->add_option("--qmax", qmax)->required();
    oc->add_option("--pairs", pairs, "random coprime (m, n) per modulus")->check(CLI::PositiveNumber);
    oc->add_option("--seed", seed);

    auto* lf = app.add_subcommand("local-factor", "B_p(s) by four routes");
    lf->add_option("--p", p)->required();
    lf->add_option("--alpha", alpha, "re,im;re,im;re,im;re,im")->required();
    lf->add_option("--s", s, "re[,im]");
    lf->add_option("--tol", tol)->check(CLI::PositiveNumber);

    auto* gc = app.add_subcommand("global-constants", "A(1/2) and B_q(1/2)");
    gc->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    gc->add_option("--q", q)->required();
    gc->add_option("--pmax", p_max);

    auto* kc = app.add_subcommand("kernel", "G, W or V at one point");
    kc->add_option("which", which, "g | w | v")->required()->check(CLI::IsMember({"g", "w", "v"}));
    kc->add_option("--mu", mu, "re,im;re,im;re,im;re,im")->required();
    kc->add_option("--args", args, "g: s;t   w: x;t   v: xi;eta;mu_scale")->required();
    double ktol = 1e-12;
    kc->add_option("--tol", ktol)->check(CLI::PositiveNumber);
    kc->add_option("--c", c, "contour abscissa");

    auto* mt = app.add_subcommand("main-term", "main term of the averaged moment");
    mt->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    mt->add_option("--Q", Q)->required();
    mt->add_option("--pmax", p_max);
    mt->add_flag("--csv", csv, "per-q table");

    auto* bm = app.add_subcommand("brute-moment", "direct moment against the main term");
    bm->add_option("--rep", rep)->required()->check(CLI::ExistingFile);
    bm->add_option("--Q", Q)->required();
    bm->add_option("--pmax", p_max);
    bm->add_option("--threads", threads);
    bm->add_flag("--csv", csv, "per-q table");

    auto* vf = app.add_subcommand("verify", "cross-oracle verification suites");
    vf->add_option("--suite", suite)->check(CLI::IsMember({"all", "characters", "local", "kernel", "moment"}));
    vf->add_option("--seed", seed);
    vf->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (ct->parsed()) return char_table(q);
        if (oc->parsed()) return orthogonality_check(qmax, pairs, seed);
        if (lf->parsed()) return local_factor(p, alpha, s, tol);
        if (gc->parsed()) return global_constants(rep, q, p_max);
        if (kc->parsed()) return kernel(which, mu, args, ktol, c);
        if (mt->parsed()) return main_term(rep, Q, p_max, csv);
        if (bm->parsed()) return brute_moment(rep, Q, p_max, threads, csv);
        if (vf->parsed()) return verify(suite, seed, threads);
    } catch (const gl4::io::SchemaError& e) {
        std::cerr << "error: malformed representation at " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
