#pragma once

#include <vector>

#include "salmon/rational.hpp"

namespace salmon {

// Dense matrix of exact rationals. Rank, kernel and determinant are exact:
// rows are scaled to integers and eliminated fraction-free (Bareiss), so no
// tolerance enters anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    static RationalMatrix identity(int n);

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rat& s) const;

    int exact_rank() const;
    Rat det() const;  // square only
    // Basis of the right kernel {v : Mv = 0}; dimension cols - rank.
    std::vector<std::vector<Rat>> kernel() const;

    std::string str() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

int exact_rank(const RationalMatrix& m);

}  // namespace salmon
