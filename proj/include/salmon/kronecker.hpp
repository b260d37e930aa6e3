#pragma once

#include <array>
#include <vector>

#include "salmon/partition.hpp"
#include "salmon/variable.hpp"

namespace salmon {

// Degree guard for the character machinery; liftable for experiments.
inline constexpr int kDefaultDegreeCap = 9;

// dim of the Schur module S_shape(C^n); zero when the shape has more rows
// than n. Hook content formula.
Int weyl_dimension(const Partition& shape, int n);

// Multiplicity of the trivial character in chi_p1 * chi_p2 * chi_p3:
// (1/d!) sum over classes of |class| chi1 chi2 chi3.
Int kronecker_mult(const Partition& p1, const Partition& p2, const Partition& p3);

struct IsotypicComponent {
    std::array<Partition, 3> triple;
    Int multiplicity;
    Int component_dim;  // multiplicity * prod of weyl dims
};

// All partition triples of d with lengths <= (a,b,c) and positive
// multiplicity, ordered lexicographically by triple. The component dims sum
// to binomial(abc + d - 1, d).
std::vector<IsotypicComponent> isotypic_decomposition(int d, const Dims& dims,
                                                      int degree_cap = kDefaultDegreeCap);

}  // namespace salmon
