#pragma once

// Cross-oracle verification suites. Every check returns a JSON object with a
// boolean "pass", the tolerances and truncation parameters it used, and its
// measured deviations. Nothing time-dependent goes into a report.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "gl4/io.hpp"

namespace gl4::verify {

using io::json;

struct Options {
    std::string suite = "all";  // all | characters | local | kernel | moment
    std::uint64_t seed = 7;
    int threads = 1;
};

// std::mt19937_64 output is fixed by the standard; the std distributions are
// not, so the conversions to doubles and ranges are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi);
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi);  // inclusive

private:
    std::mt19937_64 engine_;
};

// The stand-in representation used by the moment checks: odd primitive
// characters mod 3, 4, 5 and 7.
lfunc::EisensteinGL4 standin_rep();

json check_local_four_way(std::uint64_t seed);
json check_power_sum_path(std::uint64_t seed);
json check_even_orthogonality(std::uint64_t seed);
json check_large_sieve(std::uint64_t seed);
json check_series_identity();
json check_kernels(std::uint64_t seed);
json check_twisted_sum();
json check_twisted_integral();
json check_identity_box();
json check_moment_trend(int threads);

// Called after each check with its name and wall time; timings never enter reports.
using TimingSink = std::function<void(const std::string& check, double seconds)>;

json run(const Options& opt, const TimingSink& sink = {});

// Suites and the checks they run, in order.
const std::map<std::string, std::vector<std::string>>& suites();

}  // namespace gl4::verify
