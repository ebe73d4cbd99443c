#ifndef CHIOS_SETS_HPP
#define CHIOS_SETS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chios {

/// A subset of the ground set 1..n, kept sorted ascending.
using ElemSet = std::vector<int>;

/// An ordered sequence of distinct elements; order carries a sign.
using Word = std::vector<int>;

bool is_sorted_set(const ElemSet& s);
ElemSet sorted_set(ElemSet s); // sorts, rejects duplicates via assert-like check

bool contains(const ElemSet& s, int x);
bool is_subset(const ElemSet& a, const ElemSet& b); // a ⊆ b
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_difference(const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
ElemSet with_element(const ElemSet& s, int x);    // s ∪ {x}
ElemSet without_element(const ElemSet& s, int x); // s \ {x}

/// Bitmask of a set for n ≤ 64; subset tests fall back to the sorted
/// representation above that.
uint64_t set_mask(const ElemSet& s);

/// Visits all k-subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const ElemSet&)>& visit);

/// All subsets of the given sorted set, in lexicographic order, sizes 0..|s|.
std::vector<ElemSet> all_subsets(const ElemSet& s);

/// Sign of the permutation sorting `word` ascending; 0 if a repeat occurs.
int sort_sign(const Word& word);

std::string set_str(const ElemSet& s); // "{1,2,5}"

} // namespace chios

#endif
