#include "salmon/symmetrizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace salmon {

void PositionTableau::validate(int factor_dim) const {
    const int d = shape.size();
    std::vector<bool> seen(d + 1, false);
    bool ok = static_cast<int>(slot_rows.size()) == shape.length();
    for (int r = 0; ok && r < shape.length(); ++r) {
        ok = static_cast<int>(slot_rows[r].size()) == shape.parts[r];
        for (int c = 0; ok && c < shape.parts[r]; ++c) {
            const int s = slot_rows[r][c];
            ok = s >= 1 && s <= d && !seen[s];
            if (ok) seen[s] = true;
        }
    }
    if (!ok)
        throw input_error("slot grid must be a bijection cells -> 1.." + std::to_string(d));
    Filling content{shape, content_rows};
    if (!content.is_semistandard())
        throw input_error("content grid must be semistandard: " + content.str());
    for (const auto& row : content_rows)
        for (int v : row)
            if (v > factor_dim)
                throw input_error("content index " + std::to_string(v) + " exceeds factor dimension " +
                                  std::to_string(factor_dim));
}

std::vector<int> PositionTableau::content_weight(int factor_dim) const {
    return Filling{shape, content_rows}.weight(factor_dim);
}

PositionTableau row_major_positions(const Filling& content) {
    PositionTableau pt;
    pt.shape = content.shape;
    pt.content_rows = content.rows;
    int next = 1;
    for (int r = 0; r < pt.shape.length(); ++r) {
        pt.slot_rows.emplace_back();
        for (int c = 0; c < pt.shape.parts[r]; ++c) pt.slot_rows.back().push_back(next++);
    }
    return pt;
}

PositionTableau column_major_positions(const Filling& content) {
    PositionTableau pt;
    pt.shape = content.shape;
    pt.content_rows = content.rows;
    pt.slot_rows.resize(pt.shape.length());
    for (int r = 0; r < pt.shape.length(); ++r) pt.slot_rows[r].resize(pt.shape.parts[r]);
    const std::vector<int> cols = pt.shape.conjugate();
    int next = 1;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < cols[c]; ++r) pt.slot_rows[r][c] = next++;
    return pt;
}

PositionTableau with_positions(const Filling& slots, const Filling& content) {
    SALMON_CHECK(slots.shape == content.shape, "slot and content shapes differ");
    PositionTableau pt;
    pt.shape = content.shape;
    pt.slot_rows = slots.rows;
    pt.content_rows = content.rows;
    return pt;
}

namespace {

struct Group {
    // Slots of one column (or row), with the contents sitting on them.
    std::vector<int> slots;      // 0-based slot indices
    std::vector<std::uint8_t> values;
};

// Enumerate all per-group permutations of `values` over `slots`, recursing
// over groups; signed = skew-symmetrization (columns), unsigned = plain
// symmetrization (rows).
void enumerate_groups(const std::vector<Group>& groups, std::size_t g, bool with_sign,
                      std::vector<std::uint8_t>& assign, long long sign,
                      const std::function<void(const std::vector<std::uint8_t>&, long long)>& emit) {
    if (g == groups.size()) {
        emit(assign, sign);
        return;
    }
    const Group& grp = groups[g];
    const std::size_t h = grp.slots.size();
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        if (with_sign)
            for (std::size_t x = 0; x < h; ++x)
                for (std::size_t y = x + 1; y < h; ++y)
                    if (perm[x] > perm[y]) ++inversions;
        for (std::size_t t = 0; t < h; ++t) assign[grp.slots[t]] = grp.values[perm[t]];
        enumerate_groups(groups, g + 1, with_sign, assign, (inversions % 2) ? -sign : sign, emit);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t t = 0; t < h; ++t) assign[grp.slots[t]] = grp.values[t];
}

std::vector<Group> column_groups(const PositionTableau& pt, const std::vector<std::uint8_t>& base) {
    const std::vector<int> cols = pt.shape.conjugate();
    std::vector<Group> groups;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Group g;
        for (int r = 0; r < cols[c]; ++r) g.slots.push_back(pt.slot_rows[r][c] - 1);
        for (int s : g.slots) g.values.push_back(base[s]);
        if (g.slots.size() > 1) groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<Group> row_groups(const PositionTableau& pt, const std::vector<std::uint8_t>& base) {
    std::vector<Group> groups;
    for (int r = 0; r < pt.shape.length(); ++r) {
        Group g;
        for (int c = 0; c < pt.shape.parts[r]; ++c) g.slots.push_back(pt.slot_rows[r][c] - 1);
        for (int s : g.slots) g.values.push_back(base[s]);
        if (g.slots.size() > 1) groups.push_back(std::move(g));
    }
    return groups;
}

}  // namespace

SignedSlotAssignmentSum symmetrizer_image(const PositionTableau& pt) {
    const int d = pt.size();
    SignedSlotAssignmentSum out;
    out.d = d;

    // Base assignment: slot s carries the content of its cell.
    std::vector<std::uint8_t> base(d, 0);
    for (int r = 0; r < pt.shape.length(); ++r)
        for (int c = 0; c < pt.shape.parts[r]; ++c)
            base[pt.slot_rows[r][c] - 1] = static_cast<std::uint8_t>(pt.content_rows[r][c]);

    // A repeated content inside a column makes the skew-symmetrization zero.
    {
        const std::vector<int> cols = pt.shape.conjugate();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> vals;
            for (int r = 0; r < cols[c]; ++r) vals.push_back(pt.content_rows[r][c]);
            std::sort(vals.begin(), vals.end());
            if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return out;
        }
    }

    // Column pass with signs, accumulated per distinct assignment.
    std::map<std::vector<std::uint8_t>, long long> after_columns;
    {
        std::vector<std::uint8_t> assign = base;
        auto groups = column_groups(pt, base);
        enumerate_groups(groups, 0, true, assign, 1,
                         [&](const std::vector<std::uint8_t>& a, long long s) { after_columns[a] += s; });
    }

    // Row pass (no signs) applied to each surviving column term.
    std::map<std::vector<std::uint8_t>, long long> acc;
    for (const auto& [colAssign, colCoeff] : after_columns) {
        if (colCoeff == 0) continue;
        std::vector<std::uint8_t> assign = colAssign;
        auto groups = row_groups(pt, colAssign);
        enumerate_groups(groups, 0, false, assign, 1,
                         [&](const std::vector<std::uint8_t>& a, long long) { acc[a] += colCoeff; });
    }

    out.terms.reserve(acc.size());
    for (auto& [assign, coeff] : acc)
        if (coeff != 0) out.terms.emplace_back(coeff, assign);
    return out;
}

}  // namespace salmon
