#pragma once

#include <array>
#include <vector>

#include "salmon/rational.hpp"
#include "salmon/variable.hpp"

namespace salmon {

class RationalMatrix;

// Dense a x b x c tensor. Exact mode stores rationals; numeric mode stores
// doubles. Entries are flattened row-major with i outermost and k innermost.
class Tensor3 {
public:
    enum class Mode { Exact, Numeric };

    Tensor3() = default;
    explicit Tensor3(Dims dims, Mode mode = Mode::Exact);

    Dims dims() const { return dims_; }
    Mode mode() const { return mode_; }
    bool exact() const { return mode_ == Mode::Exact; }

    // 1-based index access.
    const Rat& at(int i, int j, int k) const { return exact_[offset(i, j, k)]; }
    Rat& at(int i, int j, int k) { return exact_[offset(i, j, k)]; }
    double atd(int i, int j, int k) const { return numeric_[offset(i, j, k)]; }
    double& atd(int i, int j, int k) { return numeric_[offset(i, j, k)]; }

    const std::vector<Rat>& exact_entries() const { return exact_; }
    const std::vector<double>& numeric_entries() const { return numeric_; }

    long offset(int i, int j, int k) const {
        if (i < 1 || i > dims_.a || j < 1 || j > dims_.b || k < 1 || k > dims_.c)
            throw input_error("tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ") out of range for dims " + dims_.str());
        return (static_cast<long>(i - 1) * dims_.b + (j - 1)) * dims_.c + (k - 1);
    }

    bool is_zero() const;

    // Slice along the given factor at 1-based index t. Factor A slices are
    // b x c, factor B slices a x c, factor C slices a x b; the tensor is the
    // sum of basis-vector (x) slice over the sliced factor.
    RationalMatrix slice(Factor f, int t) const;

    // Permute the tensor factors: result dims/entries satisfy
    // result[idx] = this[idx routed through perm], where perm maps result
    // factor positions to source factor positions.
    Tensor3 transpose(const std::array<Factor, 3>& source_of) const;

    Tensor3 to_numeric() const;

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    Dims dims_;
    Mode mode_ = Mode::Exact;
    std::vector<Rat> exact_;
    std::vector<double> numeric_;
};

// T = sum of factors[i].a (x) factors[i].b (x) factors[i].c.
struct RankOneFactors {
    std::vector<Rat> a, b, c;
};

Tensor3 assemble(Dims dims, const std::vector<RankOneFactors>& factors);

Tensor3 unit_tensor(Dims dims, int i, int j, int k);

}  // namespace salmon
