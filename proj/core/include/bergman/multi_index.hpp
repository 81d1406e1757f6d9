#pragma once

#include <numeric>
#include <vector>

namespace bergman {

// Exponent vector of a monomial in n variables.
struct MultiIndex {
    std::vector<int> entries;

    int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    size_t size() const { return entries.size(); }
    int operator[](size_t i) const { return entries[i]; }

    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
    bool operator<(const MultiIndex& o) const { return entries < o.entries; }
};

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

// All multi-indices over n variables with the given total degree, in
// lexicographic order (deterministic column layout for the bases).
inline std::vector<MultiIndex> enumerate_multi_indices(int n, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur{std::vector<int>(n, 0)};
    // iterative composition enumeration
    std::vector<int>& e = cur.entries;
    e[0] = degree;
    while (true) {
        out.push_back(cur);
        // next composition in colex-reversed order
        int i = n - 2;
        while (i >= 0 && e[i] == 0) --i;
        if (i < 0) break;
        int tail = e[n - 1];
        e[i] -= 1;
        e[i + 1] = tail + 1;
        if (i + 1 != n - 1) e[n - 1] = 0;
        for (int j = i + 2; j < n - 1; ++j) e[j] = 0;
    }
    return out;
}

} // namespace bergman
