#pragma once

#include "salmon/partition.hpp"

namespace salmon {

// Irreducible S_d character value chi_shape(cycle_type), computed by the
// Murnaghan-Nakayama border-strip recursion with memoization. Both
// partitions must have the same size.
long long mn_character(const Partition& shape, const Partition& cycle_type);

}  // namespace salmon
