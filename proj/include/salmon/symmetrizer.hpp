#pragma once

#include <cstdint>
#include <vector>

#include "salmon/tableau.hpp"

namespace salmon {

// A Young diagram with a slot number (position in the d-fold tensor power)
// and a basis-index content attached to every cell. The slot grid is a
// standard-tableau-like bijection cells -> {1..d}; the content grid is a
// semistandard filling prescribing which basis vector occupies each cell.
struct PositionTableau {
    Partition shape;
    std::vector<std::vector<int>> slot_rows;     // slot numbers, 1-based
    std::vector<std::vector<int>> content_rows;  // basis indices, 1-based

    int size() const { return shape.size(); }
    void validate(int factor_dim) const;

    // Content weight as multiplicities over 1..factor_dim.
    std::vector<int> content_weight(int factor_dim) const;

    Filling content_filling() const { return Filling{shape, content_rows}; }
    Filling slot_filling() const { return Filling{shape, slot_rows}; }
};

// Slots numbered along rows: 1,2,3 / 4 / 5 / 6.
PositionTableau row_major_positions(const Filling& content);
// Slots numbered down columns: 1,4 / 2,5 / 3,6.
PositionTableau column_major_positions(const Filling& content);
// Arbitrary standard tableau of slots.
PositionTableau with_positions(const Filling& slots, const Filling& content);

// Expansion of (row symmetrize) o (column skew-symmetrize) applied to the
// slot assignment slot -> content. Terms are (coefficient, assignment) with
// assignment[s-1] = basis index in slot s; assignments with a repeated index
// inside a column cancel and are dropped, so the sum may be empty.
struct SignedSlotAssignmentSum {
    int d = 0;
    std::vector<std::pair<long long, std::vector<std::uint8_t>>> terms;

    bool empty() const { return terms.empty(); }
};

SignedSlotAssignmentSum symmetrizer_image(const PositionTableau& pt);

}  // namespace salmon
