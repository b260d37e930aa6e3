#include "salmon/monomial.hpp"

#include <algorithm>

namespace salmon {

std::string MultiDegree::str() const {
    auto vec = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    return "[" + vec(degA) + "," + vec(degB) + "," + vec(degC) + "]";
}

Monomial Monomial::from_variables(std::vector<VariableIndex> vars) {
    std::sort(vars.begin(), vars.end());
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        entries.emplace_back(vars[i], static_cast<int>(j - i));
        i = j;
    }
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
}

Monomial Monomial::from_sorted(std::vector<Entry> entries) {
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

MultiDegree Monomial::multidegree(const Dims& dims) const {
    MultiDegree md;
    md.degA.assign(dims.a, 0);
    md.degB.assign(dims.b, 0);
    md.degC.assign(dims.c, 0);
    for (const auto& [v, e] : entries_) {
        md.degA[v.i - 1] += e;
        md.degB[v.j - 1] += e;
        md.degC[v.k - 1] += e;
    }
    return md;
}

bool Monomial::in_range(const Dims& dims) const {
    for (const auto& [v, e] : entries_)
        if (!v.in_range(dims)) return false;
    return true;
}

std::vector<VariableIndex> Monomial::expand() const {
    std::vector<VariableIndex> out;
    out.reserve(degree());
    for (const auto& [v, e] : entries_)
        for (int t = 0; t < e; ++t) out.push_back(v);
    return out;
}

int Monomial::compare(const Monomial& x, const Monomial& y) {
    std::size_t ix = 0, iy = 0;
    int rx = 0, ry = 0;  // remaining exponent at the current entry
    for (;;) {
        if (ix == x.entries_.size() && iy == y.entries_.size()) return 0;
        if (ix == x.entries_.size()) return -1;
        if (iy == y.entries_.size()) return 1;
        const VariableIndex& vx = x.entries_[ix].first;
        const VariableIndex& vy = y.entries_[iy].first;
        if (vx != vy) return vx < vy ? -1 : 1;
        if (rx == 0) rx = x.entries_[ix].second;
        if (ry == 0) ry = y.entries_[iy].second;
        int t = std::min(rx, ry);
        rx -= t;
        ry -= t;
        if (rx == 0) ++ix;
        if (ry == 0) ++iy;
    }
}

std::string Monomial::str() const {
    std::string s;
    for (const auto& [v, e] : entries_) {
        if (!s.empty()) s += " ";
        s += v.str();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

PackedMonomial pack_codes(const std::uint8_t* codes, int degree) {
    PackedMonomial key = 0;
    for (int t = 0; t < degree; ++t) key = (key << 6) | codes[t];
    return key;
}

Monomial unpack_monomial(PackedMonomial key, int degree) {
    std::vector<VariableIndex> vars(degree);
    for (int t = degree - 1; t >= 0; --t) {
        vars[t] = unpack_variable(static_cast<std::uint8_t>(key & 0x3f));
        key >>= 6;
    }
    return Monomial::from_variables(std::move(vars));
}

PackedMonomial pack_monomial(const Monomial& m) {
    std::uint8_t codes[kMaxPackedDegree];
    int t = 0;
    for (const auto& [v, e] : m.entries())
        for (int r = 0; r < e; ++r) codes[t++] = pack_variable(v);
    return pack_codes(codes, t);
}

}  // namespace salmon
