#include "salmon/tensor.hpp"

#include "salmon/matrix.hpp"

namespace salmon {

Tensor3::Tensor3(Dims dims, Mode mode) : dims_(dims), mode_(mode) {
    if (dims.a < 1 || dims.b < 1 || dims.c < 1) throw input_error("tensor dims must be positive: " + dims.str());
    if (mode_ == Mode::Exact)
        exact_.assign(dims.size(), Rat(0));
    else
        numeric_.assign(dims.size(), 0.0);
}

bool Tensor3::is_zero() const {
    if (mode_ == Mode::Exact) {
        for (const auto& q : exact_)
            if (q != 0) return false;
    } else {
        for (double x : numeric_)
            if (x != 0.0) return false;
    }
    return true;
}

RationalMatrix Tensor3::slice(Factor f, int t) const {
    SALMON_CHECK(mode_ == Mode::Exact, "slice requires exact mode");
    switch (f) {
        case Factor::A: {
            RationalMatrix m(dims_.b, dims_.c);
            for (int j = 1; j <= dims_.b; ++j)
                for (int k = 1; k <= dims_.c; ++k) m.at(j - 1, k - 1) = at(t, j, k);
            return m;
        }
        case Factor::B: {
            RationalMatrix m(dims_.a, dims_.c);
            for (int i = 1; i <= dims_.a; ++i)
                for (int k = 1; k <= dims_.c; ++k) m.at(i - 1, k - 1) = at(i, t, k);
            return m;
        }
        case Factor::C: {
            RationalMatrix m(dims_.a, dims_.b);
            for (int i = 1; i <= dims_.a; ++i)
                for (int j = 1; j <= dims_.b; ++j) m.at(i - 1, j - 1) = at(i, j, t);
            return m;
        }
    }
    throw contract_error("bad factor");
}

Tensor3 Tensor3::transpose(const std::array<Factor, 3>& source_of) const {
    SALMON_CHECK(mode_ == Mode::Exact, "transpose requires exact mode");
    Dims nd{dims_.factor(factor_index(source_of[0])), dims_.factor(factor_index(source_of[1])),
            dims_.factor(factor_index(source_of[2]))};
    Tensor3 out(nd);
    int idx[3];
    for (idx[0] = 1; idx[0] <= nd.a; ++idx[0])
        for (idx[1] = 1; idx[1] <= nd.b; ++idx[1])
            for (idx[2] = 1; idx[2] <= nd.c; ++idx[2]) {
                int src[3] = {1, 1, 1};
                for (int p = 0; p < 3; ++p) src[factor_index(source_of[p])] = idx[p];
                out.at(idx[0], idx[1], idx[2]) = at(src[0], src[1], src[2]);
            }
    return out;
}

Tensor3 Tensor3::to_numeric() const {
    if (mode_ == Mode::Numeric) return *this;
    Tensor3 out(dims_, Mode::Numeric);
    for (std::size_t t = 0; t < exact_.size(); ++t) out.numeric_[t] = exact_[t].get_d();
    return out;
}

Tensor3 assemble(Dims dims, const std::vector<RankOneFactors>& factors) {
    Tensor3 t(dims);
    for (const auto& f : factors) {
        SALMON_CHECK(static_cast<int>(f.a.size()) == dims.a && static_cast<int>(f.b.size()) == dims.b &&
                         static_cast<int>(f.c.size()) == dims.c,
                     "rank-one factor length mismatch");
        for (int i = 1; i <= dims.a; ++i) {
            if (f.a[i - 1] == 0) continue;
            for (int j = 1; j <= dims.b; ++j) {
                if (f.b[j - 1] == 0) continue;
                const Rat ab = f.a[i - 1] * f.b[j - 1];
                for (int k = 1; k <= dims.c; ++k) t.at(i, j, k) += ab * f.c[k - 1];
            }
        }
    }
    return t;
}

Tensor3 unit_tensor(Dims dims, int i, int j, int k) {
    Tensor3 t(dims);
    t.at(i, j, k) = 1;
    return t;
}

}  // namespace salmon
