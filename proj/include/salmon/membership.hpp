#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "salmon/matrix.hpp"
#include "salmon/schur.hpp"
#include "salmon/tensor.hpp"

namespace salmon {

// Random linear maps pushing a tensor down to the target dims of an
// equation family: (4,4,4) for M5, (3,3,4) for M6 and M9.
struct CompressionMaps {
    RationalMatrix phiA, phiB, phiC;  // source dim x target dim
    std::uint64_t seed = 0;

    const RationalMatrix& factor(Factor f) const {
        return f == Factor::A ? phiA : (f == Factor::B ? phiB : phiC);
    }
};

Tensor3 compress(const Tensor3& t, const CompressionMaps& maps);

CompressionMaps random_compression(const Dims& source, const Dims& target, std::uint64_t seed,
                                   std::uint64_t stream);

enum class Family { M5, M6, M9 };
const char* family_name(Family f);

struct FamilyVerdict {
    enum class Status { Vanishes, DoesNotVanish, Skipped };
    Status status = Status::Vanishes;
    bool certain = false;  // non-vanishing is certain; vanishing is probabilistic
    int trials = 0;
    std::string note;

    struct Witness {
        int trial = 0;
        std::string poly_id;
        std::string value;  // exact rational (or float in numeric mode)
        CompressionMaps maps;
    };
    std::optional<Witness> witness;
};

// Shared immutable equation bases, built once on first use.
class EquationCache {
public:
    static const ModuleBasis& m6_at_334();
    static const ModuleBasis& m5_at_444();
};

// Evaluates one family on `trials` random compressions of t, exactly in
// exact mode. Any nonzero value is a certain non-membership witness; all
// zeros is a probabilistic "vanishes". M9 is tested determinantally: the
// 9x12 psi matrix of the (3,3,4) compression must have rank at most 8.
FamilyVerdict test_family(const Tensor3& t, Family family, int trials, std::uint64_t seed,
                          double numeric_tol = 1e-10);

struct MembershipReport {
    Dims dims;
    std::string mode;  // "exact" or "numeric"
    std::uint64_t seed = 0;
    int trials = 0;
    std::array<int, 3> flattening_ranks{0, 0, 0};
    bool sub444_pass = false;
    FamilyVerdict m5, m6, m9;
    bool in_zero_set = false;

    std::string conclusion() const { return in_zero_set ? "in-zero-set" : "not-in-zero-set"; }
};

// The full border-rank-<=4 zero-set membership test: Sub_{4,4,4} flattening
// conditions plus the M5, M6, M9 families under random compression.
// Requires a,b,c >= 3.
MembershipReport border_rank_le4_test(const Tensor3& t, int trials, std::uint64_t seed,
                                      double numeric_tol = 1e-10);

// The explicit (3,3,4) point showing degree-5/9 equations alone are not
// enough: psi rank 8, M5 and M9 vanish, M6 does not.
Tensor3 friedland_point();

}  // namespace salmon
