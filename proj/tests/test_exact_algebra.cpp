#include <doctest.h>

#include "salmon/matrix.hpp"
#include "salmon/polynomial.hpp"
#include "salmon/rng.hpp"
#include "salmon/tensor.hpp"

using namespace salmon;

namespace {

const Dims d334{3, 3, 4};

SparsePolynomial random_poly(Rng& rng, const Dims& dims, int max_terms) {
    std::vector<SparsePolynomial::Term> terms;
    const int n = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < n; ++t) {
        std::vector<VariableIndex> vars;
        const int deg = static_cast<int>(rng.uniform(1, 4));
        for (int e = 0; e < deg; ++e)
            vars.emplace_back(static_cast<int>(rng.uniform(1, dims.a)), static_cast<int>(rng.uniform(1, dims.b)),
                              static_cast<int>(rng.uniform(1, dims.c)));
        Int c = rng.uniform_int(-20, 20);
        if (c == 0) c = 1;
        terms.push_back({Monomial::from_variables(std::move(vars)), std::move(c)});
    }
    return SparsePolynomial::from_terms(dims, std::move(terms));
}

Tensor3 random_tensor(Rng& rng, const Dims& dims, long long lo = -9, long long hi = 9) {
    Tensor3 t(dims);
    for (int i = 1; i <= dims.a; ++i)
        for (int j = 1; j <= dims.b; ++j)
            for (int k = 1; k <= dims.c; ++k) t.at(i, j, k) = Rat(rng.uniform_int(lo, hi));
    return t;
}

}  // namespace

TEST_CASE("monomial order is lexicographic on expanded variable sequences") {
    Monomial a = Monomial::from_variables({{1, 1, 1}});
    Monomial b = Monomial::from_variables({{1, 1, 2}});
    Monomial aa = Monomial::from_variables({{1, 1, 1}, {1, 1, 1}});
    Monomial ab = Monomial::from_variables({{1, 1, 1}, {1, 1, 2}});
    CHECK(Monomial::compare(a, b) < 0);
    CHECK(Monomial::compare(a, aa) < 0);  // shorter first
    CHECK(Monomial::compare(aa, ab) < 0);
    CHECK(Monomial::compare(ab, ab) == 0);
}

TEST_CASE("packed monomial keys sort like monomials of equal degree") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto draw = [&] {
            std::vector<VariableIndex> vars;
            for (int e = 0; e < 5; ++e)
                vars.emplace_back(static_cast<int>(rng.uniform(1, 4)), static_cast<int>(rng.uniform(1, 4)),
                                  static_cast<int>(rng.uniform(1, 4)));
            return Monomial::from_variables(std::move(vars));
        };
        Monomial m1 = draw(), m2 = draw();
        const int cmp = Monomial::compare(m1, m2);
        const PackedMonomial k1 = pack_monomial(m1), k2 = pack_monomial(m2);
        if (cmp < 0) CHECK(k1 < k2);
        if (cmp > 0) CHECK(k1 > k2);
        if (cmp == 0) CHECK(k1 == k2);
        CHECK(unpack_monomial(k1, 5) == m1);
    }
}

TEST_CASE("multidegree_of: single variable") {
    Monomial m = Monomial::from_variables({{1, 1, 1}});
    MultiDegree md = multidegree_of(m, d334);
    CHECK(md.degA == std::vector<int>{1, 0, 0});
    CHECK(md.degB == std::vector<int>{1, 0, 0});
    CHECK(md.degC == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("multidegree_of: the six-variable product from the degree-6 module") {
    Monomial m = Monomial::from_variables({{3, 2, 1}, {1, 1, 3}, {2, 1, 1}, {2, 2, 1}, {1, 3, 4}, {3, 3, 2}});
    MultiDegree md = multidegree_of(m, d334);
    CHECK(md.degA == std::vector<int>{2, 2, 2});
    CHECK(md.degB == std::vector<int>{2, 2, 2});
    CHECK(md.degC == std::vector<int>{3, 1, 1, 1});
}

TEST_CASE("multidegree_of: additive on powers") {
    Monomial m = Monomial::from_variables({{1, 1, 1}, {1, 1, 1}});
    MultiDegree md = multidegree_of(m, d334);
    CHECK(md.degA == std::vector<int>{2, 0, 0});
    CHECK(md.degB == std::vector<int>{2, 0, 0});
    CHECK(md.degC == std::vector<int>{2, 0, 0, 0});
}

TEST_CASE("multidegree is additive over monomial products") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        SparsePolynomial p = random_poly(rng, d334, 1);
        SparsePolynomial q = random_poly(rng, d334, 1);
        const Monomial& m1 = p.terms()[0].mono;
        const Monomial& m2 = q.terms()[0].mono;
        auto vars = m1.expand();
        auto more = m2.expand();
        vars.insert(vars.end(), more.begin(), more.end());
        MultiDegree sum = multidegree_of(Monomial::from_variables(vars), d334);
        MultiDegree a = multidegree_of(m1, d334), b = multidegree_of(m2, d334);
        for (int f = 0; f < 3; ++f) {
            Factor fa = static_cast<Factor>(f);
            std::vector<int> add = a.factor(fa);
            for (std::size_t i = 0; i < add.size(); ++i) add[i] += b.factor(fa)[i];
            CHECK(sum.factor(fa) == add);
        }
    }
}

TEST_CASE("canonicalize: content and sign rules") {
    const Dims dims = d334;
    SparsePolynomial p = SparsePolynomial::variable(dims, {1, 1, 1}).scaled(6) -
                         SparsePolynomial::variable(dims, {1, 1, 2}).scaled(4);
    SparsePolynomial c = canonicalize(p);
    REQUIRE(c.term_count() == 2);
    CHECK(c.terms()[0].coeff == 3);
    CHECK(c.terms()[1].coeff == -2);

    SparsePolynomial neg = -SparsePolynomial::variable(dims, {1, 1, 1});
    CHECK(canonicalize(neg) == SparsePolynomial::variable(dims, {1, 1, 1}));
}

TEST_CASE("canonicalize: zero polynomial is the explicit zero value, not an error") {
    SparsePolynomial z(d334);
    CHECK(canonicalize(z).is_zero());
}

TEST_CASE("canonicalize is idempotent on random polynomials") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        SparsePolynomial p = random_poly(rng, d334, 12);
        SparsePolynomial once = canonicalize(p);
        CHECK(canonicalize(once) == once);
    }
}

TEST_CASE("evaluate: single coordinate on a unit tensor") {
    SparsePolynomial p = SparsePolynomial::variable(d334, {1, 1, 1});
    CHECK(evaluate(p, unit_tensor(d334, 1, 1, 1)) == 1);
    CHECK(evaluate(p, unit_tensor(d334, 2, 1, 1)) == 0);
}

TEST_CASE("evaluate: dimension mismatch names the offending variable") {
    SparsePolynomial p = SparsePolynomial::variable(d334, {1, 1, 4});
    Tensor3 small(Dims{3, 3, 3});
    CHECK_THROWS_WITH_AS(static_cast<void>(evaluate(p, small)),
                         doctest::Contains("x[1,1,4]"), input_error);
}

TEST_CASE("evaluate is a ring homomorphism on random inputs") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        SparsePolynomial p = random_poly(rng, d334, 8);
        SparsePolynomial q = random_poly(rng, d334, 8);
        Tensor3 t = random_tensor(rng, d334);
        CHECK(evaluate(p + q, t) == evaluate(p, t) + evaluate(q, t));
        CHECK(evaluate(p * q, t) == evaluate(p, t) * evaluate(q, t));
    }
}

TEST_CASE("evaluate handles rational (non-integer) tensors exactly") {
    SparsePolynomial p = SparsePolynomial::variable(d334, {1, 2, 3}) * SparsePolynomial::variable(d334, {1, 2, 3});
    Tensor3 t(d334);
    t.at(1, 2, 3) = Rat(3, 7);
    CHECK(evaluate(p, t) == Rat(9, 49));
}

TEST_CASE("substitute_indices: swap k 1<->2 on a variable") {
    SparsePolynomial p = SparsePolynomial::variable(d334, {1, 1, 1});
    SparsePolynomial q = substitute_indices(p, Factor::C, {2, 1, 3, 4});
    CHECK(q == SparsePolynomial::variable(d334, {1, 1, 2}));
}

TEST_CASE("substitute_indices: identity map is the identity") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePolynomial p = random_poly(rng, d334, 10);
        CHECK(substitute_indices(p, Factor::A, {1, 2, 3}) == p);
        CHECK(substitute_indices(p, Factor::C, {1, 2, 3, 4}) == p);
    }
}

TEST_CASE("substitute_indices with a bijection is invertible") {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        SparsePolynomial p = random_poly(rng, d334, 10);
        const std::vector<int> sigma{3, 1, 2};  // A-cycle
        const std::vector<int> inverse{2, 3, 1};
        CHECK(substitute_indices(substitute_indices(p, Factor::A, sigma), Factor::A, inverse) == p);
    }
}

TEST_CASE("substitute_indices: non-total map on an occurring index is an error") {
    SparsePolynomial p = SparsePolynomial::variable(d334, {2, 1, 1});
    CHECK_THROWS_AS(static_cast<void>(substitute_indices(p, Factor::A, {1, 0, 3})), input_error);
}

TEST_CASE("general (merging) substitution accumulates coefficients") {
    const Dims dims = d334;
    SparsePolynomial p =
        SparsePolynomial::variable(dims, {1, 1, 1}) + SparsePolynomial::variable(dims, {2, 1, 1});
    SparsePolynomial q = substitute_indices(p, Factor::A, {1, 1, 3});
    REQUIRE(q.term_count() == 1);
    CHECK(q.terms()[0].coeff == 2);
}

TEST_CASE("exact_rank: identity and engineered ranks") {
    CHECK(RationalMatrix::identity(4).exact_rank() == 4);

    // A 5x7 product of random 5x3 and 3x7 matrices has rank exactly 3
    // (generically; verified for this seed).
    Rng rng(53);
    RationalMatrix left(5, 3), right(3, 7);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 3; ++c) left.at(r, c) = Rat(rng.uniform_int(-10, 10));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 7; ++c) right.at(r, c) = Rat(rng.uniform_int(-10, 10));
    CHECK((left * right).exact_rank() == 3);
}

TEST_CASE("exact_rank handles rational entries and huge intermediate values") {
    RationalMatrix m(3, 3);
    m.at(0, 0) = Rat(1, 3);
    m.at(0, 1) = Rat(1, 5);
    m.at(1, 0) = Rat(2, 3);
    m.at(1, 1) = Rat(2, 5);
    m.at(2, 2) = Rat(Int("123456789123456789123456789"));
    CHECK(m.exact_rank() == 2);
}

TEST_CASE("kernel: basis of the right null space") {
    // x + y + z = 0, y - z = 0 -> kernel spanned by (-2, 1, 1).
    RationalMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(0, 2) = 1;
    m.at(1, 1) = 1;
    m.at(1, 2) = -1;
    auto basis = m.kernel();
    REQUIRE(basis.size() == 1);
    const Rat x = basis[0][0], y = basis[0][1], z = basis[0][2];
    CHECK(x + y + z == 0);
    CHECK(y - z == 0);
    CHECK(!(x == 0 && y == 0 && z == 0));
}

TEST_CASE("det: Bareiss agrees with cofactor expansion on random 4x4") {
    Rng rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        RationalMatrix m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = make_rat(rng.uniform_int(-6, 6), rng.uniform_int(1, 3));
        // Independent oracle: Laplace expansion along the first row.
        std::function<Rat(std::vector<std::vector<Rat>>)> laplace =
            [&](std::vector<std::vector<Rat>> a) -> Rat {
            const int n = static_cast<int>(a.size());
            if (n == 1) return a[0][0];
            Rat total = 0;
            for (int c = 0; c < n; ++c) {
                if (a[0][c] == 0) continue;
                std::vector<std::vector<Rat>> sub(n - 1, std::vector<Rat>(n - 1));
                for (int r = 1; r < n; ++r) {
                    int cc = 0;
                    for (int d = 0; d < n; ++d) {
                        if (d == c) continue;
                        sub[r - 1][cc++] = a[r][d];
                    }
                }
                const Rat term = a[0][c] * laplace(sub);
                total += (c % 2 == 0) ? term : -term;
            }
            return total;
        };
        std::vector<std::vector<Rat>> a(4, std::vector<Rat>(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) a[r][c] = m.at(r, c);
        CHECK(m.det() == laplace(a));
    }
}

TEST_CASE("tensor slices reconstruct the tensor") {
    Rng rng(61);
    Tensor3 t = random_tensor(rng, d334);
    for (int k = 1; k <= 4; ++k) {
        RationalMatrix s = t.slice(Factor::C, k);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(s.at(i - 1, j - 1) == t.at(i, j, k));
    }
}

TEST_CASE("lowering operator: basic action and derivation property") {
    SparsePolynomial x = SparsePolynomial::variable(d334, {1, 1, 1});
    CHECK(lowering_operator(x, Factor::C, 1, 2) == SparsePolynomial::variable(d334, {1, 1, 2}));

    // On x^2 the derivation doubles: x[1,1,1]^2 -> 2 x[1,1,1] x[1,1,2].
    SparsePolynomial sq = x * x;
    SparsePolynomial low = lowering_operator(sq, Factor::C, 1, 2);
    REQUIRE(low.term_count() == 1);
    CHECK(low.terms()[0].coeff == 2);
}
