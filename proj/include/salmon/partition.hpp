#pragma once

#include <string>
#include <vector>

#include "salmon/rational.hpp"

namespace salmon {

// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw input_error("partition parts must be positive");
            if (i && parts[i] > parts[i - 1]) throw input_error("partition parts must be weakly decreasing");
        }
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int part(int r) const { return r < length() ? parts[r] : 0; }  // 0-based row

    // Column heights of the Young diagram.
    std::vector<int> conjugate() const;

    std::string str() const;  // "(3,1,1,1)"
    static Partition parse(const std::string& s);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts <=> y.parts; }
};

// All partitions of d, descending lex, e.g. (d) first, (1^d) last.
std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_of_max_length(int d, int max_len);

// Conjugacy class of S_d given by a cycle type, with its size
// d! / prod(m_j! j^m_j).
struct ConjugacyClass {
    Partition cycle_type;
    Int class_size;
};

std::vector<ConjugacyClass> conjugacy_classes(int d);

}  // namespace salmon
