#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "salmon/monomial.hpp"
#include "salmon/rational.hpp"
#include "salmon/tensor.hpp"
#include "salmon/variable.hpp"

namespace salmon {

// Multivariate polynomial over the coordinates x[i,j,k], with exact integer
// coefficients once canonical. Canonical form: terms sorted ascending in the
// monomial order, coefficient gcd 1, and the coefficient of the smallest
// monomial positive. The multidegree is present iff the polynomial is
// multihomogeneous.
class SparsePolynomial {
public:
    struct Term {
        Monomial mono;
        Int coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SparsePolynomial() = default;
    explicit SparsePolynomial(Dims dims) : dims_(dims) {}

    // Terms need not be sorted; duplicates are merged and zeros dropped.
    static SparsePolynomial from_terms(Dims dims, std::vector<Term> terms);
    static SparsePolynomial variable(Dims dims, VariableIndex v);
    static SparsePolynomial constant(Dims dims, Int c);

    Dims dims() const { return dims_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return degree_; }
    const std::optional<MultiDegree>& multidegree() const { return multidegree_; }

    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-() const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    SparsePolynomial scaled(const Int& s) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

    // True if the two canonical polynomials agree up to overall sign.
    static bool equal_up_to_sign(const SparsePolynomial& p, const SparsePolynomial& q);

    std::string str() const;

private:
    friend SparsePolynomial canonicalize(const SparsePolynomial&);
    void finalize();  // sort, merge, drop zeros, recompute degree/multidegree

    Dims dims_;
    std::vector<Term> terms_;
    int degree_ = 0;
    std::optional<MultiDegree> multidegree_;
};

// Content-1, sign-normalized form (idempotent). The zero polynomial stays
// the explicit zero value.
SparsePolynomial canonicalize(const SparsePolynomial& p);

MultiDegree multidegree_of(const Monomial& m, const Dims& dims);

// Exact evaluation: sum of coeff * product of entries^exp. Throws
// input_error naming the offending variable on a dimension mismatch.
Rat evaluate(const SparsePolynomial& p, const Tensor3& t);
double evaluate_numeric(const SparsePolynomial& p, const Tensor3& t);

// Numeric evaluation together with the L1 magnitude of its terms; "vanishing
// up to tolerance" means |value| <= tol * max(1, magnitude).
struct NumericEval {
    double value = 0;
    double magnitude = 0;
};
NumericEval evaluate_numeric_scaled(const SparsePolynomial& p, const Tensor3& t);

// Remap one factor's indices through `map` (1-based; map[old-1] = new).
// Bijections permute variables; general total maps may merge terms.
SparsePolynomial substitute_indices(const SparsePolynomial& p, Factor f, const std::vector<int>& map);

// Derivation sum x[..to..] d/dx[..from..] restricted to the chosen factor
// slot; shifts the factor multidegree by -e_from + e_to. May return zero.
SparsePolynomial lowering_operator(const SparsePolynomial& p, Factor f, int from, int to);

// A vector is highest-weight when every elementary raising operator (the
// lowering action with to < from) kills it, in every factor.
bool is_highest_weight(const SparsePolynomial& p);

// Accumulator used by construction algorithms: packed-key fast path when the
// monomial fits 6-bit packing, generic monomial map otherwise.
class PolyBuilder {
public:
    PolyBuilder(Dims dims, int degree);

    void add_packed(PackedMonomial key, long long coeff);  // packed fast path only
    void add(const Monomial& m, const Int& coeff);
    void add_scaled(const SparsePolynomial& p, const Int& scale);

    bool packed() const { return packed_; }
    int degree() const { return degree_; }

    // Merge another builder of identical shape (used by parallel reductions;
    // addition is commutative so the result is schedule-independent).
    void merge(const PolyBuilder& other);

    SparsePolynomial build_canonical() const;
    SparsePolynomial build_raw() const;  // merged/sorted but not sign/content normalized

private:
    Dims dims_;
    int degree_;
    bool packed_;
    std::unordered_map<PackedMonomial, long long> fast_;
    std::unordered_map<PackedMonomial, Int> fast_big_;
    std::vector<std::pair<Monomial, Int>> slow_;  // merged at build time
};

}  // namespace salmon
