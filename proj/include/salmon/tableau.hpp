#pragma once

#include <string>
#include <vector>

#include "salmon/partition.hpp"

namespace salmon {

// Filling of a Young diagram, stored row by row. Semistandard means rows
// weakly increase left-to-right and columns strictly increase top-to-bottom.
struct Filling {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard() const;
    bool is_standard() const;  // entries 1..d, each once, rows and columns strict

    // Multiplicities of each value 1..n (the filling's weight).
    std::vector<int> weight(int n) const;
    // Weight multiplicities sorted descending: the swap-equivalence class key.
    Partition weight_type() const;

    std::string str() const;  // "(3,1,1,1):[1,1,1;2;3;4]"
    static Filling parse(const std::string& s);

    friend bool operator==(const Filling&, const Filling&) = default;
    friend auto operator<=>(const Filling& x, const Filling& y) {
        if (auto c = x.shape <=> y.shape; c != 0) return c;
        return x.rows <=> y.rows;
    }
};

// The highest-weight filling: every cell of row r holds r.
Filling highest_weight_filling(const Partition& shape);

// All semistandard fillings with entries in 1..max_entry, ascending row-word
// order; the count equals the Weyl dimension. Empty when the shape has more
// rows than max_entry.
std::vector<Filling> enumerate_ssyt(const Partition& shape, int max_entry);

// All standard fillings (position tableaux), ascending row-word order.
std::vector<Filling> enumerate_standard(const Partition& shape);

}  // namespace salmon
