#pragma once

#include <set>

#include "salmon/matrix.hpp"
#include "salmon/polynomial.hpp"
#include "salmon/tensor.hpp"

namespace salmon {

// Ottaviani's block matrix for a tensor with first factor dimension 3:
// slicing T = a_1 (x) T_1 + a_2 (x) T_2 + a_3 (x) T_3 along A,
//
//   psi_T = (  0    T3  -T2 )
//           ( -T3   0    T1 )
//           (  T2  -T1   0  ),
//
// a 3b x 3c matrix, linear in T; rank(psi_T) <= 2 rank(T).
struct PsiMatrix {
    Dims source_dims;
    RationalMatrix mat;  // 3b x 3c
};

PsiMatrix build_psi(const Tensor3& t);

// det(psi_T) for a 3x3x3 tensor; Strassen's degree-9 hypersurface equation.
Rat strassen_det(const Tensor3& t);

// Symbolic expansion of det(psi_T) in the 27 coordinates of a 3x3x3 tensor:
// canonical, degree 9, 9216 monomials, multidegree [[3,3,3],[3,3,3],[3,3,3]].
// The overall sign follows the determinant so that evaluate(strassen_poly, T)
// equals strassen_det(T) identically.
const SparsePolynomial& strassen_poly();

// Classification of a maximal (9x9) minor of the 9x12 psi matrix at dims
// (3,3,4) by how its column set meets the three c-column blocks.
enum class MinorClass { C333, C432, C441, Other };

struct MinorIndex {
    std::set<int> columns;  // 1-based columns of psi, |columns| = 3b
    std::array<int, 3> class_pattern() const;
};

MinorClass minor_class(const MinorIndex& index, const Dims& dims);
std::string minor_class_name(MinorClass c);

// Mode-m flattening: A gives an a x (b*c) matrix with column order lex in
// (j,k); B and C analogously.
RationalMatrix flattening(const Tensor3& t, Factor mode);

// Membership in Sub_{a',b',c'}: every flattening rank within its bound.
bool subspace_test(const Tensor3& t, const Dims& target);

}  // namespace salmon
