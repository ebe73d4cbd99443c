#ifndef CHIOS_PERM_HPP
#define CHIOS_PERM_HPP

#include "chios/sets.hpp"

#include <string>
#include <vector>

namespace chios {

/// A linear reordering of the ground set 1..n. `order()` lists the
/// elements from smallest to largest in the reordering, so
/// Perm({2,3,4,5,6,1}) makes 2 the smallest element and 1 the largest.
class Perm {
public:
    /// Builds from the order list; validates it is a bijection on 1..n.
    explicit Perm(std::vector<int> order);

    static Perm natural(int n);

    int size() const { return static_cast<int>(order_.size()); }

    /// Rank of element e in the reordering, 1-based (1 = smallest).
    int position(int e) const { return pos_[static_cast<size_t>(e)]; }

    /// Element at rank r (1-based).
    int element_at(int r) const { return order_[static_cast<size_t>(r - 1)]; }

    const std::vector<int>& order() const { return order_; }

    bool less(int a, int b) const { return position(a) < position(b); }

    /// The smallest element of a nonempty set under this reordering.
    int min_of(const ElemSet& s) const;

    /// The elements of `s` listed smallest-first under this reordering.
    Word sorted_word(const ElemSet& s) const;

    bool is_natural() const;

    std::string str() const; // "2,3,4,5,6,1"

private:
    std::vector<int> order_;
    std::vector<int> pos_; // pos_[element] = 1-based rank
};

} // namespace chios

#endif
