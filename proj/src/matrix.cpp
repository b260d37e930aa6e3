#include "salmon/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace salmon {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    SALMON_CHECK(cols_ == rhs.rows_, "matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += at(r, k) * rhs.at(k, c);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    SALMON_CHECK(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] = data_[t] + rhs.data_[t];
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rat& s) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] = data_[t] * s;
    return out;
}

namespace {

// Integer matrix obtained by clearing denominators row by row (rank and
// kernel are unchanged).
std::vector<std::vector<Int>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols(); ++c) {
            const Int& den = m.at(r, c).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int c = 0; c < m.cols(); ++c) {
            const Rat& q = m.at(r, c);
            rows[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }
    return rows;
}

// Fraction-free elimination in place; returns pivot columns. After step t
// with pivot p, rows below satisfy the Bareiss division property, keeping
// entries at minor size.
std::vector<int> bareiss(std::vector<std::vector<Int>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_cols;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int t = r; t < rows; ++t)
            if (a[t][c] != 0) {
                p = t;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        for (int t = r + 1; t < rows; ++t) {
            for (int d = c + 1; d < cols; ++d) {
                a[t][d] = (a[r][c] * a[t][d] - a[t][c] * a[r][d]) / prev;
            }
            a[t][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int RationalMatrix::exact_rank() const {
    auto a = integer_rows(*this);
    return static_cast<int>(bareiss(a).size());
}

Rat RationalMatrix::det() const {
    SALMON_CHECK(rows_ == cols_, "det requires a square matrix");
    if (rows_ == 0) return 1;
    // Track the row scalings so the rational determinant comes back exactly.
    Rat scale = 1;
    auto a = std::vector<std::vector<Int>>(rows_, std::vector<Int>(cols_));
    for (int r = 0; r < rows_; ++r) {
        Int lcm = 1;
        for (int c = 0; c < cols_; ++c) {
            const Int& den = at(r, c).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        scale /= Rat(lcm);
        for (int c = 0; c < cols_; ++c) a[r][c] = at(r, c).get_num() * (lcm / at(r, c).get_den());
    }
    int sign = 1;
    Int prev = 1;
    for (int r = 0; r < rows_; ++r) {
        int p = -1;
        for (int t = r; t < rows_; ++t)
            if (a[t][r] != 0) {
                p = t;
                break;
            }
        if (p < 0) return 0;
        if (p != r) {
            std::swap(a[r], a[p]);
            sign = -sign;
        }
        for (int t = r + 1; t < rows_; ++t) {
            for (int d = r + 1; d < cols_; ++d) a[t][d] = (a[r][r] * a[t][d] - a[t][r] * a[r][d]) / prev;
            a[t][r] = 0;
        }
        prev = a[r][r];
    }
    // Bareiss leaves det(integer matrix) in the last pivot.
    return Rat(sign * a[rows_ - 1][cols_ - 1]) * scale;
}

std::vector<std::vector<Rat>> RationalMatrix::kernel() const {
    auto a = integer_rows(*this);
    std::vector<int> pivots = bareiss(a);
    const int rank = static_cast<int>(pivots.size());

    // Back-substitute over the rationals on the echelon rows.
    std::vector<std::vector<Rat>> echelon(rank, std::vector<Rat>(cols_));
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < cols_; ++c) echelon[r][c] = Rat(a[r][c]);
    for (int r = rank - 1; r >= 0; --r) {
        const Rat lead = echelon[r][pivots[r]];
        for (auto& x : echelon[r]) x /= lead;
        for (int t = 0; t < r; ++t) {
            const Rat f = echelon[t][pivots[r]];
            if (f == 0) continue;
            for (int c = pivots[r]; c < cols_; ++c) echelon[t][c] -= f * echelon[r][c];
        }
    }

    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -echelon[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << rat_to_string(at(r, c));
        os << "\n";
    }
    return os.str();
}

int exact_rank(const RationalMatrix& m) { return m.exact_rank(); }

}  // namespace salmon
