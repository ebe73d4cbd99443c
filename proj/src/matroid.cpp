#include "chios/matroid.hpp"

#include "chios/errors.hpp"

#include <algorithm>

namespace chios {

namespace {

bool subset_with_masks(const ElemSet& a, uint64_t amask, const ElemSet& b, uint64_t bmask, bool have_masks) {
    if (have_masks) return (amask & bmask) == amask;
    return is_subset(a, b);
}

} // namespace

Matroid::Matroid(int n, std::vector<ElemSet> circuits, bool elimination_checked)
    : n_(n), circuits_(std::move(circuits)), elimination_checked_(elimination_checked) {
    if (n_ <= 64) {
        circuit_masks_.reserve(circuits_.size());
        for (const auto& c : circuits_) circuit_masks_.push_back(set_mask(c));
    }
}

Matroid Matroid::from_circuits(int n, std::vector<ElemSet> circuits) {
    if (n < 0)
        fail(ErrorKind::ValidationError, "negative ground-set size");
    for (auto& c : circuits) {
        if (c.empty())
            fail(ErrorKind::ValidationError, "empty circuit");
        c = sorted_set(std::move(c));
        for (int e : c)
            if (e < 1 || e > n)
                fail(ErrorKind::ElementOutOfRange,
                     "circuit element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    for (size_t i = 0; i < circuits.size(); ++i)
        for (size_t j = 0; j < circuits.size(); ++j) {
            if (i == j) continue;
            if (is_subset(circuits[i], circuits[j]))
                fail(ErrorKind::ComparableCircuits,
                     "circuit " + set_str(circuits[i]) + " is contained in " + set_str(circuits[j]));
        }

    bool elimination_checked = false;
    if (n <= 12) {
        // circuit elimination: for C1 != C2 and e in both, some circuit
        // avoids e inside C1 ∪ C2
        for (size_t i = 0; i < circuits.size(); ++i)
            for (size_t j = i + 1; j < circuits.size(); ++j) {
                ElemSet common = set_intersection(circuits[i], circuits[j]);
                if (common.empty()) continue;
                ElemSet uni = set_union(circuits[i], circuits[j]);
                for (int e : common) {
                    ElemSet target = without_element(uni, e);
                    bool found = false;
                    for (const auto& c : circuits)
                        if (is_subset(c, target)) { found = true; break; }
                    if (!found)
                        fail(ErrorKind::ValidationError,
                             "circuit elimination fails for " + set_str(circuits[i]) + ", " +
                                 set_str(circuits[j]) + " at element " + std::to_string(e));
                }
            }
        elimination_checked = true;
    }
    return Matroid(n, std::move(circuits), elimination_checked);
}

ElemSet Matroid::ground_set() const {
    ElemSet g(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) g[static_cast<size_t>(i)] = i + 1;
    return g;
}

bool Matroid::is_independent(const ElemSet& x) const {
    bool masks = !circuit_masks_.empty();
    uint64_t xmask = masks ? set_mask(x) : 0;
    for (size_t i = 0; i < circuits_.size(); ++i) {
        if (circuits_[i].size() > x.size()) continue;
        if (subset_with_masks(circuits_[i], masks ? circuit_masks_[i] : 0, x, xmask, masks))
            return false;
    }
    return true;
}

int Matroid::rank(const ElemSet& x) const {
    ElemSet basis;
    for (int e : x) {
        basis.push_back(e);
        if (!is_independent(basis)) basis.pop_back();
    }
    return static_cast<int>(basis.size());
}

int Matroid::rank() const { return rank(ground_set()); }

ElemSet Matroid::closure(const ElemSet& x) const {
    int r = rank(x);
    ElemSet cl = x;
    for (int y = 1; y <= n_; ++y) {
        if (contains(x, y)) continue;
        if (rank(with_element(x, y)) == r) cl = with_element(cl, y);
    }
    return cl;
}

bool Matroid::is_flat(const ElemSet& x) const { return closure(x) == x; }

bool Matroid::is_unidependent(const ElemSet& u) const {
    return rank(u) == static_cast<int>(u.size()) - 1;
}

ElemSet Matroid::unique_circuit(const ElemSet& u) const {
    if (!is_unidependent(u))
        fail(ErrorKind::NotUnidependent, set_str(u) + " has rank != size-1");
    for (const auto& c : circuits_)
        if (is_subset(c, u)) return c;
    fail(ErrorKind::NotUnidependent, "no circuit inside " + set_str(u));
}

bool Matroid::is_loop(int x) const {
    for (const auto& c : circuits_)
        if (c.size() == 1 && c[0] == x) return true;
    return false;
}

bool Matroid::loop_free() const {
    for (const auto& c : circuits_)
        if (c.size() == 1) return false;
    return true;
}

bool Matroid::is_simple() const {
    for (const auto& c : circuits_)
        if (c.size() <= 2) return false;
    return true;
}

ElemSet Minor::parent_labels(const ElemSet& s) const {
    ElemSet out;
    out.reserve(s.size());
    for (int e : s) out.push_back(parent_label(e));
    return sorted_set(std::move(out));
}

namespace {

Minor make_minor(const Matroid& m, int x, std::vector<ElemSet> circuits) {
    // drop x, shift labels above it down by one
    std::vector<int> to_parent;
    to_parent.reserve(static_cast<size_t>(m.ground_size()) - 1);
    for (int e = 1; e <= m.ground_size(); ++e)
        if (e != x) to_parent.push_back(e);
    for (auto& c : circuits)
        for (int& e : c)
            if (e > x) --e;
    return Minor{Matroid::from_circuits(m.ground_size() - 1, std::move(circuits)), std::move(to_parent)};
}

} // namespace

Minor deletion(const Matroid& m, int x) {
    if (x < 1 || x > m.ground_size())
        fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(x));
    std::vector<ElemSet> kept;
    for (const auto& c : m.circuits())
        if (!contains(c, x)) kept.push_back(c);
    return make_minor(m, x, std::move(kept));
}

Minor contraction(const Matroid& m, int x) {
    if (x < 1 || x > m.ground_size())
        fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(x));
    if (m.is_loop(x))
        fail(ErrorKind::LoopContraction, "cannot contract loop " + std::to_string(x));
    std::vector<ElemSet> candidates;
    for (const auto& c : m.circuits())
        candidates.push_back(without_element(c, x));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<ElemSet> minimal;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool has_smaller = false;
        for (size_t j = 0; j < candidates.size() && !has_smaller; ++j)
            if (i != j && is_subset(candidates[j], candidates[i])) has_smaller = true;
        if (!has_smaller) minimal.push_back(candidates[i]);
    }
    return make_minor(m, x, std::move(minimal));
}

std::vector<ElemSet> broken_circuits(const Matroid& m, const Perm& pi) {
    if (!m.loop_free())
        fail(ErrorKind::LoopPresent, "broken circuits need a loop-free matroid");
    std::vector<ElemSet> out;
    for (const auto& c : m.circuits())
        if (c.size() > 1) out.push_back(without_element(c, pi.min_of(c)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElemSet> nbc_sets(const Matroid& m, const Perm& pi, int ell) {
    // loops never show up in independent sets, so singleton circuits are
    // simply skipped here
    std::vector<ElemSet> bcs;
    for (const auto& c : m.circuits())
        if (c.size() > 1) bcs.push_back(without_element(c, pi.min_of(c)));
    std::vector<ElemSet> out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
        if (!m.is_independent(s)) return;
        for (const auto& b : bcs)
            if (is_subset(b, s)) return;
        out.push_back(s);
    });
    return out;
}

std::vector<ElemSet> dependent_sets(const Matroid& m, int ell) {
    std::vector<ElemSet> out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
        if (!m.is_independent(s)) out.push_back(s);
    });
    return out;
}

std::vector<ElemSet> independent_sets(const Matroid& m, int ell) {
    std::vector<ElemSet> out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& s) {
        if (m.is_independent(s)) out.push_back(s);
    });
    return out;
}

bool is_active_in(const Matroid& m, const ElemSet& independent, int a, const Perm& pi) {
    if (contains(independent, a)) return false;
    ElemSet ext = with_element(independent, a);
    if (m.is_independent(ext)) return false;
    return pi.min_of(m.unique_circuit(ext)) == a;
}

std::vector<ElemSet> inactive_unidependents(const Matroid& m, int ell, const Perm& pi) {
    std::vector<ElemSet> out;
    for_each_subset(m.ground_size(), ell, [&](const ElemSet& u) {
        if (!m.is_unidependent(u)) return;
        int alpha = pi.min_of(m.unique_circuit(u));
        ElemSet rest = without_element(u, alpha);
        // alpha itself is active in rest; inactivity means nothing
        // pi-smaller is
        for (int a : m.closure(rest)) {
            if (!pi.less(a, alpha)) continue;
            if (is_active_in(m, rest, a, pi)) return;
        }
        out.push_back(u);
    });
    return out;
}

std::vector<ElemSet> inactive_unidependents(const Matroid& m, int ell) {
    return inactive_unidependents(m, ell, Perm::natural(m.ground_size()));
}

std::vector<ElemSet> minimal_broken_circuit_circuits(const Matroid& m, const Perm& pi) {
    if (!m.loop_free())
        fail(ErrorKind::LoopPresent, "needs a loop-free matroid");
    struct Item {
        ElemSet circuit;
        ElemSet broken;
        int alpha;
    };
    std::vector<Item> items;
    for (const auto& c : m.circuits()) {
        if (c.size() <= 1) continue;
        int alpha = pi.min_of(c);
        items.push_back(Item{c, without_element(c, alpha), alpha});
    }
    std::vector<ElemSet> out;
    for (const auto& it : items) {
        bool minimal = true;
        for (const auto& other : items)
            if (other.broken != it.broken && is_subset(other.broken, it.broken)) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        // one circuit per shared broken circuit: the pi-least element of
        // cl(B)\B closes the kept one
        ElemSet outside = set_difference(m.closure(it.broken), it.broken);
        if (pi.min_of(outside) != it.alpha) continue;
        out.push_back(it.circuit);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chios
