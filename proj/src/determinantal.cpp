#include "salmon/determinantal.hpp"

#include <algorithm>
#include <mutex>

namespace salmon {

namespace {

// Block (p,q) of psi holds sign * T_m: (1,2) -> +T3, (1,3) -> -T2, etc.
struct BlockEntry {
    int slice;  // 0 = zero block
    int sign;
};

BlockEntry psi_block(int p, int q) {
    static constexpr BlockEntry table[3][3] = {
        {{0, 0}, {3, +1}, {2, -1}},
        {{3, -1}, {0, 0}, {1, +1}},
        {{2, +1}, {1, -1}, {0, 0}},
    };
    return table[p - 1][q - 1];
}

}  // namespace

PsiMatrix build_psi(const Tensor3& t) {
    const Dims d = t.dims();
    if (d.a != 3)
        throw input_error("psi requires first factor dimension exactly 3 (got a=" + std::to_string(d.a) +
                          "); compress the tensor first");
    PsiMatrix psi{d, RationalMatrix(3 * d.b, 3 * d.c)};
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            const BlockEntry e = psi_block(p, q);
            if (e.slice == 0) continue;
            for (int j = 1; j <= d.b; ++j)
                for (int k = 1; k <= d.c; ++k)
                    psi.mat.at((p - 1) * d.b + j - 1, (q - 1) * d.c + k - 1) = e.sign * t.at(e.slice, j, k);
        }
    return psi;
}

Rat strassen_det(const Tensor3& t) {
    if (!(t.dims() == Dims{3, 3, 3})) throw input_error("strassen_det requires dims 3,3,3");
    return build_psi(t).mat.det();
}

namespace {

// Symbolic entry of the 9x9 psi at dims (3,3,3): a signed variable or zero.
struct SymEntry {
    bool zero;
    int sign;
    VariableIndex var;
};

SymEntry sym_entry(int row, int col) {
    const int p = row / 3 + 1, j = row % 3 + 1;
    const int q = col / 3 + 1, k = col % 3 + 1;
    const BlockEntry e = psi_block(p, q);
    if (e.slice == 0) return {true, 0, {}};
    return {false, e.sign, VariableIndex(e.slice, j, k)};
}

// Laplace expansion row by row with memoization on the remaining column set
// (the row is determined by the popcount).
SparsePolynomial det_minor(unsigned cols, std::vector<SparsePolynomial>& memo, std::vector<bool>& ready) {
    const Dims dims{3, 3, 3};
    if (ready[cols]) return memo[cols];
    const int remaining = __builtin_popcount(cols);
    const int row = 9 - remaining;
    SparsePolynomial det(dims);
    if (remaining == 0) {
        det = SparsePolynomial::constant(dims, 1);
    } else {
        int pos = 0;
        std::vector<SparsePolynomial::Term> terms;
        for (int c = 0; c < 9; ++c) {
            if (!(cols & (1u << c))) continue;
            const int cof_sign = (pos++ % 2 == 0) ? 1 : -1;
            const SymEntry e = sym_entry(row, c);
            if (e.zero) continue;
            SparsePolynomial sub = det_minor(cols & ~(1u << c), memo, ready);
            const Int scale = e.sign * cof_sign;
            for (const auto& t : sub.terms()) {
                auto vars = t.mono.expand();
                vars.push_back(e.var);
                terms.push_back({Monomial::from_variables(std::move(vars)), t.coeff * scale});
            }
        }
        det = SparsePolynomial::from_terms(dims, std::move(terms));
    }
    memo[cols] = det;
    ready[cols] = true;
    return det;
}

}  // namespace

const SparsePolynomial& strassen_poly() {
    static SparsePolynomial poly = [] {
        std::vector<SparsePolynomial> memo(1u << 9);
        std::vector<bool> ready(1u << 9, false);
        return det_minor((1u << 9) - 1, memo, ready);
    }();
    return poly;
}

std::array<int, 3> MinorIndex::class_pattern() const {
    std::array<int, 3> pattern{0, 0, 0};
    for (int c : columns) pattern[(c - 1) / 4] += 1;
    return pattern;
}

MinorClass minor_class(const MinorIndex& index, const Dims& dims) {
    if (!(dims.a == 3 && dims.b == 3 && dims.c == 4))
        throw input_error("minor classification is defined for dims 3,3,4");
    if (index.columns.size() != 9) throw input_error("a maximal minor of the 9x12 psi selects 9 columns");
    for (int c : index.columns)
        if (c < 1 || c > 12) throw input_error("minor column out of range 1..12");
    std::array<int, 3> pattern = index.class_pattern();
    std::sort(pattern.begin(), pattern.end(), std::greater<int>());
    if (pattern == std::array<int, 3>{3, 3, 3}) return MinorClass::C333;
    if (pattern == std::array<int, 3>{4, 3, 2}) return MinorClass::C432;
    if (pattern == std::array<int, 3>{4, 4, 1}) return MinorClass::C441;
    return MinorClass::Other;
}

std::string minor_class_name(MinorClass c) {
    switch (c) {
        case MinorClass::C333: return "(3,3,3)";
        case MinorClass::C432: return "(4,3,2)";
        case MinorClass::C441: return "(4,4,1)";
        case MinorClass::Other: return "other";
    }
    return "other";
}

RationalMatrix flattening(const Tensor3& t, Factor mode) {
    const Dims d = t.dims();
    switch (mode) {
        case Factor::A: {
            RationalMatrix m(d.a, d.b * d.c);
            for (int i = 1; i <= d.a; ++i)
                for (int j = 1; j <= d.b; ++j)
                    for (int k = 1; k <= d.c; ++k) m.at(i - 1, (j - 1) * d.c + (k - 1)) = t.at(i, j, k);
            return m;
        }
        case Factor::B: {
            RationalMatrix m(d.b, d.a * d.c);
            for (int i = 1; i <= d.a; ++i)
                for (int j = 1; j <= d.b; ++j)
                    for (int k = 1; k <= d.c; ++k) m.at(j - 1, (i - 1) * d.c + (k - 1)) = t.at(i, j, k);
            return m;
        }
        case Factor::C: {
            RationalMatrix m(d.c, d.a * d.b);
            for (int i = 1; i <= d.a; ++i)
                for (int j = 1; j <= d.b; ++j)
                    for (int k = 1; k <= d.c; ++k) m.at(k - 1, (i - 1) * d.b + (j - 1)) = t.at(i, j, k);
            return m;
        }
    }
    throw contract_error("bad flattening mode");
}

bool subspace_test(const Tensor3& t, const Dims& target) {
    return flattening(t, Factor::A).exact_rank() <= target.a &&
           flattening(t, Factor::B).exact_rank() <= target.b &&
           flattening(t, Factor::C).exact_rank() <= target.c;
}

}  // namespace salmon
