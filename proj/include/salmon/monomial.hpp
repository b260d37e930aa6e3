#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "salmon/variable.hpp"

namespace salmon {

// Per-factor exponent sums of a monomial (or of a multihomogeneous
// polynomial): degA/degB/degC indexed by the 1-based factor index, with
// sum(degA) = sum(degB) = sum(degC) = total degree.
struct MultiDegree {
    std::vector<int> degA, degB, degC;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

    const std::vector<int>& factor(Factor f) const {
        return f == Factor::A ? degA : (f == Factor::B ? degB : degC);
    }
    std::vector<int>& factor(Factor f) { return f == Factor::A ? degA : (f == Factor::B ? degB : degC); }

    std::string str() const;
};

// Sparse exponent map VariableIndex -> positive exponent, keys strictly
// increasing. The canonical monomial order compares the expanded variable
// sequences (each variable repeated by its exponent) lexicographically,
// shorter sequence first on ties.
class Monomial {
public:
    using Entry = std::pair<VariableIndex, int>;

    Monomial() = default;

    // From an unsorted list of variables with multiplicity one each.
    static Monomial from_variables(std::vector<VariableIndex> vars);
    // From entries already sorted with positive exponents (trusted).
    static Monomial from_sorted(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int degree() const;

    MultiDegree multidegree(const Dims& dims) const;

    bool in_range(const Dims& dims) const;

    // Expanded variable sequence, weakly increasing, length == degree().
    std::vector<VariableIndex> expand() const;

    static int compare(const Monomial& x, const Monomial& y);
    friend bool operator<(const Monomial& x, const Monomial& y) { return compare(x, y) < 0; }
    friend bool operator==(const Monomial& x, const Monomial& y) { return x.entries_ == y.entries_; }

    std::string str() const;  // e.g. "x[1,1,1]^2 x[2,3,1]"

private:
    std::vector<Entry> entries_;
};

// Dense 6-bit packing of an expanded monomial, usable whenever all indices
// are <= 4 and the degree is <= 10. Packed keys of equal degree compare in
// canonical monomial order, which makes them ideal hash/sort keys during
// construction-time accumulation.
using PackedMonomial = std::uint64_t;

inline constexpr int kMaxPackedDegree = 10;

inline bool packable(const Dims& dims, int degree) {
    return dims.a <= 4 && dims.b <= 4 && dims.c <= 4 && degree <= kMaxPackedDegree;
}

inline std::uint8_t pack_variable(const VariableIndex& v) {
    return static_cast<std::uint8_t>(((v.i - 1) << 4) | ((v.j - 1) << 2) | (v.k - 1));
}

inline VariableIndex unpack_variable(std::uint8_t code) {
    return VariableIndex(((code >> 4) & 3) + 1, ((code >> 2) & 3) + 1, (code & 3) + 1);
}

// codes must be sorted ascending; degree <= kMaxPackedDegree.
PackedMonomial pack_codes(const std::uint8_t* codes, int degree);
Monomial unpack_monomial(PackedMonomial key, int degree);
PackedMonomial pack_monomial(const Monomial& m);

}  // namespace salmon
