#include "chios/sets.hpp"

#include "chios/errors.hpp"

#include <algorithm>

namespace chios {

bool is_sorted_set(const ElemSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

ElemSet sorted_set(ElemSet s) {
    std::sort(s.begin(), s.end());
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] == s[i])
            fail(ErrorKind::ValidationError, "repeated element " + std::to_string(s[i]) + " in set");
    return s;
}

bool contains(const ElemSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

bool is_subset(const ElemSet& a, const ElemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

ElemSet with_element(const ElemSet& s, int x) {
    ElemSet r = s;
    r.insert(std::lower_bound(r.begin(), r.end(), x), x);
    return r;
}

ElemSet without_element(const ElemSet& s, int x) {
    ElemSet r = s;
    auto it = std::lower_bound(r.begin(), r.end(), x);
    if (it != r.end() && *it == x) r.erase(it);
    return r;
}

uint64_t set_mask(const ElemSet& s) {
    uint64_t m = 0;
    for (int e : s) m |= (uint64_t{1} << (e - 1));
    return m;
}

void for_each_subset(int n, int k, const std::function<void(const ElemSet&)>& visit) {
    if (k < 0 || k > n) return;
    ElemSet cur(static_cast<size_t>(k));
    // standard lexicographic k-combination walk
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        visit(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<ElemSet> all_subsets(const ElemSet& s) {
    std::vector<ElemSet> out;
    size_t m = s.size();
    out.reserve(size_t{1} << m);
    for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
        ElemSet sub;
        for (size_t i = 0; i < m; ++i)
            if (bits & (uint64_t{1} << i)) sub.push_back(s[i]);
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sort_sign(const Word& word) {
    int sign = 1;
    Word w = word;
    // insertion sort, counting adjacent swaps
    for (size_t i = 1; i < w.size(); ++i) {
        size_t j = i;
        while (j > 0 && w[j - 1] > w[j]) {
            std::swap(w[j - 1], w[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && w[j - 1] == w[j]) return 0;
    }
    return sign;
}

std::string set_str(const ElemSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

} // namespace chios
