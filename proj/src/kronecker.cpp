#include "salmon/kronecker.hpp"

#include <algorithm>

#include "salmon/characters.hpp"

namespace salmon {

Int weyl_dimension(const Partition& shape, int n) {
    if (shape.length() > n) return 0;
    // prod over cells (n + col - row) / hook(cell), rows/cols 0-based.
    const std::vector<int> cols = shape.conjugate();
    Int num = 1, den = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) {
            num *= n + c - r;
            den *= (shape.parts[r] - c - 1) + (cols[c] - r - 1) + 1;
        }
    SALMON_CHECK(num % den == 0, "hook content product must divide exactly");
    return num / den;
}

Int kronecker_mult(const Partition& p1, const Partition& p2, const Partition& p3) {
    const int d = p1.size();
    if (p2.size() != d || p3.size() != d)
        throw input_error("kronecker_mult arguments must partition the same d");
    Int sum = 0;
    for (const auto& cls : conjugacy_classes(d)) {
        long long x1 = mn_character(p1, cls.cycle_type);
        if (x1 == 0) continue;
        long long x2 = mn_character(p2, cls.cycle_type);
        if (x2 == 0) continue;
        long long x3 = mn_character(p3, cls.cycle_type);
        if (x3 == 0) continue;
        sum += cls.class_size * Int(static_cast<long>(x1)) * Int(static_cast<long>(x2)) *
               Int(static_cast<long>(x3));
    }
    const Int dfac = factorial(d);
    SALMON_CHECK(sum % dfac == 0 && sum >= 0, "character sum must be a non-negative multiple of d!");
    return sum / dfac;
}

std::vector<IsotypicComponent> isotypic_decomposition(int d, const Dims& dims, int degree_cap) {
    if (d > degree_cap)
        throw input_error("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(degree_cap) +
                          "; raise the cap explicitly to proceed");
    // Length cuts applied up front: longer shapes give zero Schur modules.
    const auto pa = partitions_of_max_length(d, dims.a);
    const auto pb = partitions_of_max_length(d, dims.b);
    const auto pc = partitions_of_max_length(d, dims.c);
    std::vector<IsotypicComponent> out;
    for (const auto& p1 : pa) {
        const Int w1 = weyl_dimension(p1, dims.a);
        for (const auto& p2 : pb) {
            const Int w2 = weyl_dimension(p2, dims.b);
            for (const auto& p3 : pc) {
                Int mult = kronecker_mult(p1, p2, p3);
                if (mult == 0) continue;
                Int dim = mult * w1 * w2 * weyl_dimension(p3, dims.c);
                out.push_back({{p1, p2, p3}, std::move(mult), std::move(dim)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IsotypicComponent& x, const IsotypicComponent& y) {
        return x.triple < y.triple;
    });
    return out;
}

}  // namespace salmon
