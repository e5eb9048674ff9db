#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace arrfrob {

/// Ordered tuple of 1-based hyperplane indices. Sorted strictly-increasing
/// tuples serve as canonical subset representatives.
using IndexTuple = std::vector<int>;

/// Sort a tuple, tracking the permutation sign. Returns nothing when the
/// tuple has a repeated entry (the associated antisymmetric object is zero).
inline std::optional<std::pair<IndexTuple, int>> sort_signed(IndexTuple t) {
    int sign = 1;
    // Insertion sort; tuples are tiny.
    for (size_t i = 1; i < t.size(); ++i) {
        for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return std::nullopt;
    return std::make_pair(std::move(t), sign);
}

/// All sorted k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexTuple> k_subsets(int n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n) return out;
    IndexTuple cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// All sorted k-subsets of {1..n} avoiding the index `excluded`.
inline std::vector<IndexTuple> k_subsets_excluding(int n, int k, int excluded) {
    std::vector<IndexTuple> out;
    for (auto& s : k_subsets(n, k)) {
        if (!std::binary_search(s.begin(), s.end(), excluded)) out.push_back(std::move(s));
    }
    return out;
}

inline bool tuple_contains(const IndexTuple& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Remove the element at `pos` (0-based) from an ordered tuple.
inline IndexTuple tuple_erase(const IndexTuple& t, size_t pos) {
    IndexTuple out;
    out.reserve(t.size() - 1);
    for (size_t i = 0; i < t.size(); ++i)
        if (i != pos) out.push_back(t[i]);
    return out;
}

/// Insert v into a sorted tuple, returning the new tuple and the 0-based
/// position where v landed.
inline std::pair<IndexTuple, int> tuple_insert_sorted(const IndexTuple& sorted, int v) {
    IndexTuple out = sorted;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    int pos = static_cast<int>(it - out.begin());
    out.insert(it, v);
    return {std::move(out), pos};
}

inline std::string tuple_str(const IndexTuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

}  // namespace arrfrob
