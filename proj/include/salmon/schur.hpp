#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "salmon/polynomial.hpp"
#include "salmon/symmetrizer.hpp"

namespace salmon {

// Exact incremental span of multihomogeneous polynomials. Polynomials of
// different multidegree have disjoint monomial support, so independence only
// has to be decided inside each multidegree group; within a group rows are
// kept in echelon form by leading monomial with integer two-row elimination.
class PolySpan {
public:
    // True if p was independent of the current span (p is then absorbed).
    bool add(const SparsePolynomial& p);
    // Would add() succeed? (non-mutating)
    bool independent(const SparsePolynomial& p) const;
    int rank() const { return rank_; }

private:
    struct Row {
        std::vector<SparsePolynomial::Term> terms;  // sorted, leading at back
    };
    using Group = std::map<Monomial, Row>;  // keyed by leading monomial

    // Reduces p against the group, returns the (canonicalized) remainder.
    static SparsePolynomial reduce(const Group& g, SparsePolynomial p);

    std::map<std::string, Group> groups_;  // keyed by multidegree
    int rank_ = 0;
};

// Builds the symmetrized highest-weight-vector polynomial: expand the three
// one-factor symmetrizer images, route slot s to the variable
// x[A(s), B(s), C(s)], multiply the slot variables into a monomial and
// accumulate with signs, then canonicalize. The result is multihomogeneous
// with multidegree given by the three content weights.
SparsePolynomial construct_hwv_polynomial(const PositionTableau& fillA, const PositionTableau& fillB,
                                          const PositionTableau& fillC, const Dims& dims);

// Same variables, larger ambient dims (used to inherit equations upward).
SparsePolynomial embed(const SparsePolynomial& p, const Dims& dims);

struct FillingTriple {
    std::array<Filling, 3> f;
    std::string str() const { return f[0].str() + "|" + f[1].str() + "|" + f[2].str(); }
};

// Basis of a module (usually one Schur triple; M5 is a direct sum of
// three), with per-polynomial provenance.
struct ModuleBasis {
    std::string name;  // M5 / M6 / M9 / strassen / ad hoc
    std::vector<std::array<Partition, 3>> components;
    Dims dims;
    int degree = 0;
    std::vector<SparsePolynomial> polys;
    std::vector<std::string> provenance;
    std::string note;  // set when the module is zero at these dims

    Int expected_dimension() const;
    std::size_t size() const { return polys.size(); }
};

// Breadth-first closure of a highest weight vector under all elementary
// lowering operators, with exact span tracking; the result has exactly
// prod weyl_dimension(pi_f, dim_f) elements.
ModuleBasis module_basis_from_hwv(const SparsePolynomial& hwv, const Dims& dims);

// Expansion of representative polynomials to one polynomial per semistandard
// filling triple by per-factor index substitutions; exact linear
// independence is verified as the basis is assembled. The partition triple
// is read off the representative fillings.
ModuleBasis module_basis_by_swaps(const std::vector<std::pair<FillingTriple, SparsePolynomial>>& reps,
                                  const Dims& dims);

// Representative content fillings: one per weight-type class, each the
// row-word-minimal filling of its class.
std::vector<Filling> class_representatives(const Partition& shape, int n);

// The lexicographically first triple of standard slot tableaux for which the
// highest-weight-content symmetrizer construction is nonzero. Most slot
// triples annihilate the product; this picks the canonical surviving one.
std::array<Filling, 3> find_module_slots(const std::array<Partition, 3>& triple, const Dims& dims);

// First nonzero chain of elementary lowerings taking p (of the given weight
// in factor f) to the target weight; moves tried in lexicographic order.
// Returns zero if no chain survives. `word` receives the moves applied.
SparsePolynomial lower_to_weight(const SparsePolynomial& p, Factor f, const std::vector<int>& target,
                                 std::vector<std::pair<int, int>>& word);

// Named module builders behind `gen`. M5 = the three Strassen commutation
// summands, M6 = (2,2,2)x(2,2,2)x(3,1,1,1), M9 = (3,3,3)^3 built from the
// determinantal highest weight vector by lowering closure.
ModuleBasis make_module_basis(const std::string& name, const Dims& dims);

// A maximal independent set of highest-weight vectors for one isotypic
// component, built from highest-weight contents with the slot tableaux
// varying over standard fillings (then random slot bijections if ever
// needed). Returns exactly `multiplicity` polynomials.
struct HwvSpace {
    std::vector<SparsePolynomial> polys;
    std::vector<std::string> provenance;
};
HwvSpace hwv_space_spanning(const std::array<Partition, 3>& triple, const Dims& dims, const Int& multiplicity,
                            std::uint64_t seed = 0);

}  // namespace salmon
