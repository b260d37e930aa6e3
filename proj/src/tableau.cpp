#include "salmon/tableau.hpp"

#include <algorithm>

namespace salmon {

bool Filling::is_semistandard() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (int r = 0; r < shape.length(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.parts[r]) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) return false;
            if (c && rows[r][c] < rows[r][c - 1]) return false;
            if (r && c < rows[r - 1].size() && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

bool Filling::is_standard() const {
    const int d = shape.size();
    std::vector<bool> seen(d + 1, false);
    for (int r = 0; r < shape.length(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.parts[r]) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > d || seen[v]) return false;
            seen[v] = true;
            if (c && rows[r][c] <= rows[r][c - 1]) return false;
            if (r && c < rows[r - 1].size() && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

std::vector<int> Filling::weight(int n) const {
    std::vector<int> w(n, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v >= 1 && v <= n) ++w[v - 1];
        }
    return w;
}

Partition Filling::weight_type() const {
    int max_v = 0;
    for (const auto& row : rows)
        for (int v : row) max_v = std::max(max_v, v);
    std::vector<int> w = weight(max_v);
    std::sort(w.begin(), w.end(), std::greater<int>());
    while (!w.empty() && w.back() == 0) w.pop_back();
    return Partition(std::move(w));
}

std::string Filling::str() const {
    std::string s = shape.str() + ":[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += ";";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(rows[r][c]);
        }
    }
    return s + "]";
}

Filling Filling::parse(const std::string& s) {
    auto colon = s.find(":[");
    if (colon == std::string::npos || s.back() != ']') throw input_error("bad filling syntax: '" + s + "'");
    Filling f;
    f.shape = Partition::parse(s.substr(0, colon));
    std::string body = s.substr(colon + 2, s.size() - colon - 3);
    f.rows.emplace_back();
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            f.rows.back().push_back(std::stoi(cur));
            cur.clear();
        }
    };
    for (char ch : body) {
        if (ch == ',') {
            flush();
        } else if (ch == ';') {
            flush();
            f.rows.emplace_back();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw input_error("bad filling syntax: '" + s + "'");
        }
    }
    flush();
    return f;
}

Filling highest_weight_filling(const Partition& shape) {
    Filling f;
    f.shape = shape;
    for (int r = 0; r < shape.length(); ++r) f.rows.emplace_back(shape.parts[r], r + 1);
    return f;
}

namespace {

// Backtracking over cells in row-major order.
void gen_fillings(const Partition& shape, int max_entry, bool standard, int cell, int d,
                  std::vector<bool>& used, Filling& cur, std::vector<Filling>& out) {
    if (cell == d) {
        out.push_back(cur);
        return;
    }
    int r = 0, c = cell;
    while (c >= shape.parts[r]) {
        c -= shape.parts[r];
        ++r;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur.rows[r][c - 1] + (standard ? 1 : 0));
    if (r > 0 && c < static_cast<int>(cur.rows[r - 1].size())) lo = std::max(lo, cur.rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        if (standard) {
            if (used[v]) continue;
            used[v] = true;
        }
        cur.rows[r].push_back(v);
        gen_fillings(shape, max_entry, standard, cell + 1, d, used, cur, out);
        cur.rows[r].pop_back();
        if (standard) used[v] = false;
    }
}

std::vector<Filling> enumerate(const Partition& shape, int max_entry, bool standard) {
    std::vector<Filling> out;
    if (shape.length() > max_entry && !standard) return out;
    Filling cur;
    cur.shape = shape;
    cur.rows.resize(shape.length());
    std::vector<bool> used(max_entry + 1, false);
    gen_fillings(shape, max_entry, standard, 0, shape.size(), used, cur, out);
    return out;
}

}  // namespace

std::vector<Filling> enumerate_ssyt(const Partition& shape, int max_entry) {
    return enumerate(shape, max_entry, false);
}

std::vector<Filling> enumerate_standard(const Partition& shape) {
    return enumerate(shape, shape.size(), true);
}

}  // namespace salmon
