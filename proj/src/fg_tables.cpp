#include "gl4/fg_tables.hpp"

#include <stdexcept>

namespace gl4::fg {

namespace {

const std::vector<Term> kPrinted = {
#include "data/fg_printed.inc"
};

const std::vector<Term> kCorrected = {
#include "data/fg_corrected.inc"
};

void fnv_mix(std::uint64_t& h, long long v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
        h ^= (u >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
}

FGTables load(const char* name, const std::vector<Term>& data, std::uint64_t expected) {
    FGTables t(name, data);
    if (t.checksum() != expected)
        throw std::logic_error(std::string("f/g table '") + name + "' failed its checksum");
    return t;
}

}  // namespace

std::uint64_t checksum_of(const std::vector<Term>& stored) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& t : stored) {
        fnv_mix(h, t.poly);
        fnv_mix(h, t.index);
        fnv_mix(h, t.coef);
        for (int e : t.exps) fnv_mix(h, e);
    }
    return h;
}

FGTables::FGTables(std::string name, const std::vector<Term>& stored)
    : name_(std::move(name)), checksum_(checksum_of(stored)) {
    for (const auto& t : stored) {
        if (t.poly == 'f' && t.index >= 0 && t.index <= 4) {
            f_[static_cast<std::size_t>(t.index)].push_back(t);
        } else if (t.poly == 'g' && t.index >= 0 && t.index <= 6) {
            g_[static_cast<std::size_t>(t.index)].push_back(t);
        } else {
            throw std::invalid_argument("f/g table entry outside the stored range");
        }
    }
    for (std::size_t i = 5; i <= 9; ++i) f_[i] = f_[9 - i];
    for (std::size_t i = 7; i <= 12; ++i) g_[i] = g_[12 - i];
}

const FGTables& printed_tables() {
    static const FGTables t = load("printed", kPrinted, kPrintedChecksum);
    return t;
}

const FGTables& corrected_tables() {
    static const FGTables t = load("corrected", kCorrected, kCorrectedChecksum);
    return t;
}

}  // namespace gl4::fg
