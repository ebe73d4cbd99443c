#include "chios/perm.hpp"

#include "chios/errors.hpp"

#include <algorithm>
#include <numeric>

namespace chios {

Perm::Perm(std::vector<int> order) : order_(std::move(order)) {
    int n = static_cast<int>(order_.size());
    pos_.assign(static_cast<size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) {
        int e = order_[static_cast<size_t>(r - 1)];
        if (e < 1 || e > n)
            fail(ErrorKind::ValidationError, "permutation entry " + std::to_string(e) + " out of range 1.." + std::to_string(n));
        if (pos_[static_cast<size_t>(e)] != 0)
            fail(ErrorKind::ValidationError, "permutation repeats element " + std::to_string(e));
        pos_[static_cast<size_t>(e)] = r;
    }
}

Perm Perm::natural(int n) {
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    return Perm(std::move(order));
}

int Perm::min_of(const ElemSet& s) const {
    int best = s.front();
    for (int e : s)
        if (less(e, best)) best = e;
    return best;
}

Word Perm::sorted_word(const ElemSet& s) const {
    Word w = s;
    std::sort(w.begin(), w.end(), [this](int a, int b) { return less(a, b); });
    return w;
}

bool Perm::is_natural() const {
    for (int r = 1; r <= size(); ++r)
        if (element_at(r) != r) return false;
    return true;
}

std::string Perm::str() const {
    std::string out;
    for (size_t i = 0; i < order_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(order_[i]);
    }
    return out;
}

} // namespace chios
