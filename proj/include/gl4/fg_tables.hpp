#pragma once

// Integer polynomial tables f_0..f_9 and g_0..g_12 in (s_1, s_2, s_3, s_4)
// giving N(p) = sum f_i p^i and D(p) = sum g_i p^i. Only f_0..f_4 and g_0..g_6
// are stored; the rest follow from f_i = f_{9-i} and g_i = g_{12-i}.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gl4::fg {

struct Term {
    char poly;  // 'f' or 'g'
    int index;
    long long coef;
    std::array<int, 4> exps;
};

class FGTables {
public:
    FGTables(std::string name, const std::vector<Term>& stored);

    const std::string& name() const { return name_; }
    std::uint64_t checksum() const { return checksum_; }

    const std::vector<Term>& f(int i) const { return f_.at(static_cast<std::size_t>(i)); }
    const std::vector<Term>& g(int i) const { return g_.at(static_cast<std::size_t>(i)); }

    template <class T>
    static T eval(const std::vector<Term>& poly, const std::array<T, 4>& s) {
        T acc = T(0);
        for (const auto& t : poly) {
            T m = T(t.coef);
            for (std::size_t k = 0; k < 4; ++k)
                for (int e = 0; e < t.exps[k]; ++e) m = m * s[k];
            acc = acc + m;
        }
        return acc;
    }

    template <class T>
    T numerator(const std::array<T, 4>& s, const T& p) const {
        T acc = T(0);
        for (int i = 9; i >= 0; --i) acc = acc * p + eval(f(i), s);
        return acc;
    }

    template <class T>
    T denominator(const std::array<T, 4>& s, const T& p) const {
        T acc = T(0);
        for (int i = 12; i >= 0; --i) acc = acc * p + eval(g(i), s);
        return acc;
    }

private:
    std::string name_;
    std::uint64_t checksum_ = 0;
    std::array<std::vector<Term>, 10> f_;
    std::array<std::vector<Term>, 13> g_;
};

// The published tables, transcribed verbatim (two known misprints included).
const FGTables& printed_tables();
// Same with g_4 and g_6 corrected against the symbolic expansion of D(p).
const FGTables& corrected_tables();

// Locked checksums; a mismatch at load time throws.
inline constexpr std::uint64_t kPrintedChecksum = 0x1b4c94f2fac537d4ULL;
inline constexpr std::uint64_t kCorrectedChecksum = 0x08b3a418e7845067ULL;

std::uint64_t checksum_of(const std::vector<Term>& stored);

}  // namespace gl4::fg
