#pragma once

// JSON reading of representation files and JSON writing of every report type.
// Reports are nlohmann::json objects (std::map-backed, so keys come out sorted).

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gl4/archimedean.hpp"
#include "gl4/dirichlet_lfunc.hpp"
#include "gl4/local_factors.hpp"
#include "gl4/moment.hpp"
#include "gl4/satake.hpp"

namespace gl4::io {

using json = nlohmann::json;
using satake::u64;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// A malformed input document; `pointer` is the JSON pointer of the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& message)
        : std::runtime_error((pointer.empty() ? "/" : pointer) + ": " + message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// { "conductor": int, "mu": [[re,im] x4], "primes": { "p": [[re,im] x4] },
//   "default": "error" | "ones" | "eisenstein" | "unit_trace" }
// The "eisenstein" default additionally needs "chars" in the EisensteinGL4 form.
satake::GlobalRep global_rep_from_json(const json& doc);
// { "chars": [{ "q": int, "index": int } x4] }
lfunc::EisensteinGL4 eisenstein_from_json(const json& doc);

json to_json(const satake::GlobalRep& rep, u64 listed_limit = 0);
json to_json(const lfunc::EisensteinGL4& rep);

struct RepInput {
    satake::GlobalRep global;
    std::optional<lfunc::EisensteinGL4> eisenstein;  // set for { "chars": ... } files
};

// A document with "chars" and no "mu" is an EisensteinGL4 (its "conductor" is optional
// and checked); anything else is read as a GlobalRep.
RepInput rep_from_json(const json& doc);
RepInput load_rep(const std::string& path);

satake::Quad parse_alpha(const std::string& text);  // "re,im;re,im;re,im;re,im"
satake::cplx parse_complex(const std::string& text);  // "re" or "re,im"

json cplx_json(satake::cplx z);
json to_json(const local::LocalFactorReport& r);
json to_json(const arch::KernelConfig& cfg);
json to_json(const moment::MomentConfig& cfg);
json to_json(const moment::IdentityReport& r);
json to_json(const moment::MainTermResult& r);
json to_json(const moment::LhsResult& r);
json to_json(const moment::MomentReport& r);

// Envelope shared by every report.
json report_header(const std::string& command, std::optional<std::uint64_t> seed);

// Fixed-format CSV of per-q rows (q, phi_flat, psi, lhs, main, B_q).
std::string rows_csv(const std::vector<moment::QRow>& rows);

}  // namespace gl4::io
