#include "salmon/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace salmon {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, long long> g_memo;
std::mutex g_memo_mutex;

// Murnaghan-Nakayama on beta-numbers: with b_i = parts[i] + (m-1-i), removing
// a border strip of length len means replacing some b by b-len (which must be
// >= 0 and not already a beta-number); the strip height parity is the number
// of beta-numbers strictly between the two.
long long mn_rec(std::vector<int> shape, std::vector<int> cycles) {
    if (shape.empty()) return cycles.empty() ? 1 : 0;
    Key key{shape, cycles};
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    const int m = static_cast<int>(shape.size());
    const int len = cycles.front();
    std::vector<int> rest_cycles(cycles.begin() + 1, cycles.end());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = shape[i] + (m - 1 - i);

    long long total = 0;
    for (int i = 0; i < m; ++i) {
        const int target = beta[i] - len;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++crossings;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> rest(m);
        for (int r = 0; r < m; ++r) rest[r] = nb[r] - (m - 1 - r);
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        long long sub = mn_rec(std::move(rest), rest_cycles);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_character(const Partition& shape, const Partition& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw input_error("character arguments must partition the same d: " + shape.str() + " vs " +
                          cycle_type.str());
    return mn_rec(shape.parts, cycle_type.parts);
}

}  // namespace salmon
