#include "salmon/partition.hpp"

#include <map>

namespace salmon {

std::vector<int> Partition::conjugate() const {
    std::vector<int> cols(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
        for (int c = 0; c < p; ++c) ++cols[c];
    return cols;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == ')' || ch == ' ') continue;
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw input_error("bad partition syntax: '" + s + "'");
        }
    }
    if (!cur.empty()) parts.push_back(std::stoi(cur));
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) { return partitions_of_max_length(d, d); }

std::vector<Partition> partitions_of_max_length(int d, int max_len) {
    if (d < 0) throw input_error("partitions of negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(d, d, max_len, cur, out);
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int d) {
    std::vector<ConjugacyClass> out;
    for (const Partition& mu : partitions_of(d)) {
        std::map<int, int> mult;
        for (int p : mu.parts) ++mult[p];
        Int denom = 1;
        for (auto [part, m] : mult) {
            denom *= factorial(m);
            for (int t = 0; t < m; ++t) denom *= part;
        }
        out.push_back({mu, factorial(d) / denom});
    }
    return out;
}

}  // namespace salmon
