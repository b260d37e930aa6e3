#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "salmon/rational.hpp"

namespace salmon {

// Ambient dimensions (a, b, c) of A (x) B (x) C.
struct Dims {
    int a = 0, b = 0, c = 0;

    friend bool operator==(const Dims&, const Dims&) = default;

    int factor(int f) const {
        switch (f) {
            case 0: return a;
            case 1: return b;
            case 2: return c;
        }
        throw contract_error("Dims::factor: bad factor");
    }

    long size() const { return static_cast<long>(a) * b * c; }
    std::string str() const { return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c); }
};

enum class Factor : int { A = 0, B = 1, C = 2 };

inline int factor_index(Factor f) { return static_cast<int>(f); }
inline const char* factor_name(Factor f) { return f == Factor::A ? "A" : (f == Factor::B ? "B" : "C"); }

// Coordinate x[i,j,k] on A (x) B (x) C; all indices 1-based. The total order
// is lexicographic on (i, j, k) and every canonical form uses it.
struct VariableIndex {
    std::uint8_t i = 1, j = 1, k = 1;

    VariableIndex() = default;
    VariableIndex(int i_, int j_, int k_)
        : i(static_cast<std::uint8_t>(i_)), j(static_cast<std::uint8_t>(j_)), k(static_cast<std::uint8_t>(k_)) {}

    int index(Factor f) const { return f == Factor::A ? i : (f == Factor::B ? j : k); }

    VariableIndex with_index(Factor f, int v) const {
        VariableIndex r = *this;
        (f == Factor::A ? r.i : (f == Factor::B ? r.j : r.k)) = static_cast<std::uint8_t>(v);
        return r;
    }

    bool in_range(const Dims& d) const { return i >= 1 && i <= d.a && j >= 1 && j <= d.b && k >= 1 && k <= d.c; }

    std::string str() const {
        return "x[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
    }

    friend auto operator<=>(const VariableIndex& x, const VariableIndex& y) {
        if (auto c = x.i <=> y.i; c != 0) return c;
        if (auto c = x.j <=> y.j; c != 0) return c;
        return x.k <=> y.k;
    }
    friend bool operator==(const VariableIndex&, const VariableIndex&) = default;
};

}  // namespace salmon
