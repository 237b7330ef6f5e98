#include "gl4/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gl4/arith.hpp"

namespace gl4::io {

namespace {

using satake::cplx;
using satake::Quad;

const json& field(const json& obj, const std::string& ptr, const char* key) {
    if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(ptr + "/" + key, "missing field");
    return *it;
}

u64 positive_int(const json& v, const std::string& ptr) {
    if (!v.is_number_integer()) throw SchemaError(ptr, "expected an integer");
    auto x = v.get<long long>();
    if (x <= 0) throw SchemaError(ptr, "must be positive");
    return static_cast<u64>(x);
}

cplx complex_pair(const json& v, const std::string& ptr) {
    if (!v.is_array() || v.size() != 2) throw SchemaError(ptr, "expected [re, im]");
    for (std::size_t i = 0; i < 2; ++i)
        if (!v[i].is_number()) throw SchemaError(ptr + "/" + std::to_string(i), "expected a number");
    return {v[0].get<double>(), v[1].get<double>()};
}

Quad quad(const json& v, const std::string& ptr) {
    if (!v.is_array() || v.size() != 4) throw SchemaError(ptr, "expected four [re, im] pairs");
    Quad q;
    for (std::size_t j = 0; j < 4; ++j) q[j] = complex_pair(v[j], ptr + "/" + std::to_string(j));
    return q;
}

std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

lfunc::EisensteinGL4 eisenstein_from_json(const json& doc) {
    const auto& chars = field(doc, "", "chars");
    if (!chars.is_array() || chars.size() != 4) throw SchemaError("/chars", "expected four characters");
    std::array<lfunc::CharRef, 4> refs;
    for (std::size_t j = 0; j < 4; ++j) {
        std::string ptr = "/chars/" + std::to_string(j);
        refs[j].q = positive_int(field(chars[j], ptr, "q"), ptr + "/q");
        const auto& idx = field(chars[j], ptr, "index");
        if (!idx.is_number_integer() || idx.get<long long>() < 0)
            throw SchemaError(ptr + "/index", "expected a non-negative integer");
        refs[j].index = idx.get<std::size_t>();
    }
    std::array<std::optional<lfunc::DirichletCharacter>, 4> cs;
    for (std::size_t j = 0; j < 4; ++j) {
        try {
            cs[j] = lfunc::character_from_ref(refs[j]);
        } catch (const std::exception& e) {
            throw SchemaError("/chars/" + std::to_string(j) + "/index", e.what());
        }
    }
    try {
        return lfunc::EisensteinGL4(std::array<lfunc::DirichletCharacter, 4>{*cs[0], *cs[1], *cs[2], *cs[3]});
    } catch (const std::invalid_argument& e) {
        // messages start with "chars[j]"
        std::string msg = e.what();
        std::string ptr = "/chars";
        if (msg.rfind("chars[", 0) == 0 && msg.size() > 7) ptr += "/" + msg.substr(6, 1);
        throw SchemaError(ptr, msg);
    }
}

satake::GlobalRep global_rep_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    u64 N = positive_int(field(doc, "", "conductor"), "/conductor");
    satake::ArchParams arch;
    arch.mu = quad(field(doc, "", "mu"), "/mu");
    try {
        arch.check_tempered();
    } catch (const std::exception& e) {
        throw SchemaError("/mu", e.what());
    }

    std::map<u64, Quad> primes;
    if (auto it = doc.find("primes"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("/primes", "expected an object keyed by primes");
        for (const auto& [key, val] : it->items()) {
            std::string ptr = "/primes/" + key;
            u64 p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw SchemaError(ptr, "key is not an integer");
            }
            if (!arith::is_prime(p)) throw SchemaError(ptr, "key is not prime");
            Quad a = quad(val, ptr);
            try {
                satake::check_tempered({p, a}, N % p == 0);
            } catch (const std::exception& e) {
                throw SchemaError(ptr, e.what());
            }
            primes.emplace(p, a);
        }
    }

    satake::DefaultRule rule = satake::DefaultRule::Error;
    if (auto it = doc.find("default"); it != doc.end()) {
        if (!it->is_string()) throw SchemaError("/default", "expected a string");
        std::string name = it->get<std::string>();
        if (name == "unit_trace") name = "unit-trace";
        try {
            rule = satake::default_rule_from_string(name);
        } catch (const std::exception& e) {
            throw SchemaError("/default", e.what());
        }
    }
    satake::GlobalRep::LocalRule fn;
    if (rule == satake::DefaultRule::Eisenstein) {
        if (!doc.contains("chars")) throw SchemaError("/chars", "the eisenstein default needs character data");
        auto E = eisenstein_from_json(doc);
        if (E.conductor() != N)
            throw SchemaError("/conductor", "differs from the product of the character moduli");
        fn = [E](u64 p) { return E.satake(p); };
    }
    return satake::GlobalRep(N, arch, std::move(primes), rule, std::move(fn));
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const satake::GlobalRep& rep, u64 listed_limit) {
    json mu = json::array();
    for (auto m : rep.arch().mu) mu.push_back(cplx_json(m));
    json primes = json::object();
    for (const auto& [p, a] : rep.listed()) {
        if (listed_limit && p > listed_limit) break;
        json q = json::array();
        for (auto x : a) q.push_back(cplx_json(x));
        primes[std::to_string(p)] = q;
    }
    return {{"conductor", rep.conductor()},
            {"mu", mu},
            {"primes", primes},
            {"default", satake::to_string(rep.default_rule())}};
}

json to_json(const lfunc::EisensteinGL4& rep) {
    json chars = json::array();
    for (const auto& r : rep.refs()) chars.push_back({{"q", r.q}, {"index", r.index}});
    return {{"chars", chars}, {"conductor", rep.conductor()}};
}

RepInput rep_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    if (doc.contains("chars") && !doc.contains("mu")) {
        auto E = eisenstein_from_json(doc);
        if (doc.contains("conductor")) {
            const auto& c = doc["conductor"];
            if (!c.is_number_integer() || c.get<long long>() != static_cast<long long>(E.conductor()))
                throw SchemaError("/conductor", "does not match the product of the character moduli (" +
                                                    std::to_string(E.conductor()) + ")");
        }
        return {E.to_global_rep(), E};
    }
    auto g = global_rep_from_json(doc);
    std::optional<lfunc::EisensteinGL4> E;
    if (g.default_rule() == satake::DefaultRule::Eisenstein && g.listed().empty()) E = eisenstein_from_json(doc);
    return {std::move(g), std::move(E)};
}

RepInput load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rep file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    return rep_from_json(doc);
}

cplx parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw std::invalid_argument("cannot parse complex number '" + text + "'");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) throw std::invalid_argument("cannot parse complex number '" + text + "'");
    }
    std::string rest;
    if (is >> rest) throw std::invalid_argument("trailing characters in '" + text + "'");
    return {re, im};
}

Quad parse_alpha(const std::string& text) {
    Quad a;
    std::size_t start = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        std::size_t end = text.find(';', start);
        if ((j < 3) != (end != std::string::npos))
            throw std::invalid_argument("alpha needs four ';'-separated entries");
        a[j] = parse_complex(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
        start = end + 1;
    }
    return a;
}

json to_json(const local::LocalFactorReport& r) {
    json alpha = json::array();
    for (auto x : r.alpha) alpha.push_back(cplx_json(x));
    auto opt = [](const std::optional<cplx>& z) { return z ? cplx_json(*z) : json(nullptr); };
    return {{"p", r.p},
            {"alpha", alpha},
            {"s", cplx_json(r.s)},
            {"B_int", cplx_json(r.B_int)},
            {"B_series", cplx_json(r.B_series)},
            {"B_res", opt(r.B_res)},
            {"B_fg", opt(r.B_fg)},
            {"B_powersum", opt(r.B_powersum)},
            {"B_fg_printed_tables", opt(r.B_fg_printed)},
            {"printed_table_rel_dev", r.printed_table_rel_dev},
            {"residue_note", r.residue_note},
            {"fg_note", r.fg_note},
            {"max_rel_dev", r.max_rel_dev},
            {"theta_nodes", r.theta_nodes},
            {"series_R", r.series_R},
            {"series_tail_bound", r.series_tail}};
}

json to_json(const arch::KernelConfig& c) {
    return {{"c", c.c},     {"T", c.T},   {"h", c.h},
            {"T_t", c.T_t}, {"h_t", c.h_t}, {"tol", c.tol},
            {"log_ratio_max", c.log_ratio_max}, {"table_step", c.table_step}};
}

json to_json(const moment::MomentConfig& c) {
    return {{"Q", c.Q},
            {"psi", {{"lo", c.psi.lo}, {"hi", c.psi.hi}, {"amplitude", c.psi.amplitude}}},
            {"alpha", c.alpha},
            {"delta", c.delta},
            {"y_step", c.y_step},
            {"y_max", c.y_max},
            {"p_max", c.p_max},
            {"box", c.box},
            {"max_Q", c.max_Q},
            {"identity_tol", c.identity_tol},
            {"threads", c.threads},
            {"kernel", to_json(c.kernel)}};
}

json to_json(const moment::IdentityReport& r) {
    return {{"box", r.box},
            {"D_cut", r.D_cut},
            {"char_side", cplx_json(r.char_side)},
            {"divisor_side", cplx_json(r.divisor_side)},
            {"delta", cplx_json(r.delta)},
            {"delta_tilde", cplx_json(r.delta_tilde)},
            {"diagonal", cplx_json(r.diag)},
            {"off_diagonal_small_d", cplx_json(r.off_small_d)},
            {"off_diagonal_large_d", cplx_json(r.off_large_d)},
            {"residual_char_vs_divisor", r.residual_18_19},
            {"residual_char_vs_delta", r.residual_21},
            {"residual_partition", r.residual_partition},
            {"pass", r.pass}};
}

namespace {

json rows_json(const std::vector<moment::QRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"q", r.q}, {"phi_flat", r.phi_flat}, {"psi", r.psi}, {"lhs", r.lhs}, {"main", r.main},
                       {"B_q", r.B_q}});
    return out;
}

}  // namespace

json to_json(const moment::MainTermResult& r) {
    return {{"value", r.value},
            {"diagonal_value", r.diagonal_value},
            {"g_integral", r.g_integral},
            {"A_half", cplx_json(r.A.value)},
            {"A_p_max", r.A.p_max},
            {"A_primes", r.A.primes},
            {"A_tail_estimate", std::isfinite(r.A.tail_estimate) ? json(r.A.tail_estimate) : json("inf")},
            {"A_divergent", r.A.divergent},
            {"rows", rows_json(r.rows)}};
}

json to_json(const moment::LhsResult& r) {
    return {{"value", r.value}, {"y_max", r.y_max}, {"y_step", r.y_step}, {"rows", rows_json(r.rows)}};
}

json to_json(const moment::MomentReport& r) {
    return {{"Q", r.Q},
            {"lhs", to_json(r.lhs)},
            {"main_term", to_json(r.main)},
            {"identity", to_json(r.identity)},
            {"ratio", r.ratio},
            {"ratio_diagonal", r.ratio_diagonal}};
}

json report_header(const std::string& command, std::optional<std::uint64_t> seed) {
    json h = {{"schema_version", kSchemaVersion}, {"tool", "gl4moment"}, {"tool_version", kToolVersion},
              {"command", command}};
    h["seed"] = seed ? json(*seed) : json(nullptr);
    return h;
}

std::string rows_csv(const std::vector<moment::QRow>& rows) {
    std::string out = "q,phi_flat,psi,lhs,main,B_q\n";
    for (const auto& r : rows)
        out += std::to_string(r.q) + "," + std::to_string(r.phi_flat) + "," + csv_number(r.psi) + "," +
               csv_number(r.lhs) + "," + csv_number(r.main) + "," + csv_number(r.B_q) + "\n";
    return out;
}

}  // namespace gl4::io
