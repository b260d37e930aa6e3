#pragma once

#include <cstdint>

#include "salmon/kronecker.hpp"
#include "salmon/matrix.hpp"
#include "salmon/schur.hpp"
#include "salmon/tensor.hpp"

namespace salmon {

// Seeded sample of the cone over sigma_r: r rank-one summands with integer
// entries uniform in [-100, 100].
struct SecantSample {
    Dims dims;
    int r = 0;
    std::uint64_t seed = 0;
    std::vector<RankOneFactors> factors;
    Tensor3 tensor;
};

SecantSample sample_secant(int r, const Dims& dims, std::uint64_t seed);

// Seeded generic point of Sub_{a',b',c'}: a random core tensor pushed
// through random inclusion matrices.
struct SubspaceSample {
    Dims dims;
    Dims target;
    std::uint64_t seed = 0;
    Tensor3 core;                              // the a' x b' x c' generic point
    std::array<RationalMatrix, 3> inclusions;  // dims.factor x target.factor
    Tensor3 tensor;
};

SubspaceSample sample_subspace(const Dims& target, const Dims& dims, std::uint64_t seed);

// Uniform integer-entry tensor in [-100, 100]; generic for our purposes.
Tensor3 sample_generic(const Dims& dims, std::uint64_t seed);

// Projective dimension of sigma_r by Terracini: exact rank of the affine
// parametrization Jacobian at a random rational point, minus one.
int terracini_dim(int r, const Dims& dims, std::uint64_t seed);

// Closed-form projective dimension of Sub_{a',b',c'}:
// a'b'c' - 1 + sum_f (dim_f - target_f) * target_f.
int subspace_dim(const Dims& target, const Dims& dims);

// Degree-d scan over the isotypic decomposition: for every component with
// positive multiplicity, span its highest weight space, evaluate the span at
// random rank-4 secant samples (exactly), and report the kernel of the
// evaluation matrix. A component "vanishes" when the kernel is nonzero.
struct ScanComponent {
    std::array<Partition, 3> triple;
    Int multiplicity;
    Int component_dim;
    int kernel_dim = 0;
    bool vanishing = false;
    std::vector<std::string> hwv_provenance;
};

struct ScanResult {
    int degree = 0;
    Dims dims;
    int sample_count = 0;
    int secant_rank = 4;
    std::uint64_t seed = 0;
    std::vector<ScanComponent> components;  // partition-triple lex order

    int vanishing_count() const;
};

// The default cap reflects the combinatorial blow-up of symmetrizer
// expansion in high degree; pass a larger cap explicitly to override (scans
// beyond degree 6 may be infeasible for large components).
inline constexpr int kDefaultScanDegreeCap = 6;

ScanResult ideal_scan(int degree, const Dims& dims, int sample_count, std::uint64_t seed,
                      int degree_cap = kDefaultScanDegreeCap);

}  // namespace salmon
