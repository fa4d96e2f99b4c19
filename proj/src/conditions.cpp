#include "cyclab/conditions.hpp"

namespace cyclab {

namespace {

// Vertices reachable from `start` without leaving `allowed`.
Bitset reachable(const Digraph& d, int start, const Bitset& allowed) {
    Bitset seen(d.order());
    if (!allowed.test(start)) return seen;
    seen.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : d.out_neighbors(u).members()) {
            if (allowed.test(v) && !seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
        }
    }
    return seen;
}

bool strong_within(const Digraph& d, const Bitset& allowed) {
    int start = allowed.first();
    if (start < 0) return true;
    if (reachable(d, start, allowed).count() != allowed.count()) return false;
    // backward reachability: walk in-neighborhoods
    Bitset seen(d.order());
    seen.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : d.in_neighbors(u).members()) {
            if (allowed.test(v) && !seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
        }
    }
    return seen.count() == allowed.count();
}

}  // namespace

bool is_strong(const Digraph& d) { return strong_within(d, Bitset::full(d.order())); }

bool is_2_strong(const Digraph& d) {
    if (d.order() < 3) throw std::invalid_argument("is_2_strong: order must be >= 3");
    if (!is_strong(d)) return false;
    for (int v = 0; v < d.order(); ++v) {
        Bitset allowed = Bitset::full(d.order());
        allowed.reset(v);
        if (!strong_within(d, allowed)) return false;
    }
    return true;
}

bool is_S_strong(const Digraph& d, const Bitset& s) {
    if (s.size() != d.order()) throw std::invalid_argument("is_S_strong: set size mismatch");
    if (s.none()) throw std::invalid_argument("is_S_strong: S must be nonempty");
    Bitset all = Bitset::full(d.order());
    for (int u : s.members()) {
        Bitset r = reachable(d, u, all);
        if (!s.is_subset_of(r)) return false;
    }
    return true;
}

A0Report check_A0(const Digraph& d, const Bitset& y) {
    if (y.size() != d.order()) throw std::invalid_argument("check_A0: set size mismatch");
    const int n = d.order();
    const int rhs = 3 * n - 2;
    A0Report rep;
    auto ys = y.members();
    auto record = [&](A0Violation v) {
        rep.holds = false;
        ++rep.violation_count;
        if (int(rep.violations.size()) < kMaxReportEntries) rep.violations.push_back(v);
    };
    for (int x : ys) {
        for (int yy : ys) {
            if (x == yy || d.adjacent(x, yy)) continue;
            int base = d.degree(x) + d.degree(yy);
            for (int z : ys) {
                if (z == x || z == yy) continue;
                if (!d.has_arc(x, z)) {
                    int lhs = base + d.out_degree(x) + d.in_degree(z);
                    if (lhs < rhs)
                        record({x, yy, z, A0Violation::Branch::NoArcXZ, lhs, rhs});
                }
                if (!d.has_arc(z, x)) {
                    int lhs = base + d.in_degree(x) + d.out_degree(z);
                    if (lhs < rhs)
                        record({x, yy, z, A0Violation::Branch::NoArcZX, lhs, rhs});
                }
            }
        }
    }
    return rep;
}

MeynielReport check_meyniel_set(const Digraph& d, const Bitset& m) {
    if (m.size() != d.order()) throw std::invalid_argument("check_meyniel_set: set size mismatch");
    const int n = d.order();
    MeynielReport rep;
    auto ms = m.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            int x = ms[i], yy = ms[j];
            if (d.adjacent(x, yy)) continue;
            int sum = d.degree(x) + d.degree(yy);
            if (sum < 2 * n - 1) {
                rep.holds = false;
                ++rep.violation_count;
                if (int(rep.violations.size()) < kMaxReportEntries)
                    rep.violations.push_back({x, yy, sum});
            }
        }
    }
    return rep;
}

bool lemma37_holds(const Digraph& d, const Bitset& y) {
    if (!check_A0(d, y).holds)
        throw ConditionNotMet("lemma37_holds: Y does not satisfy A0");
    const int n = d.order();
    for (int x : y.members()) {
        int weak_partners = 0;  // nonadjacent partners with low degree sum
        int partners = 0;
        for (int p : y.members()) {
            if (p == x || d.adjacent(x, p)) continue;
            ++partners;
            if (d.degree(x) + d.degree(p) < 2 * n - 1) ++weak_partners;
        }
        if (partners >= 2 && weak_partners >= 2) return false;
    }
    return true;
}

}  // namespace cyclab
