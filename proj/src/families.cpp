#include "cyclab/families.hpp"

namespace cyclab {

namespace {

void add_complete_symmetric(Digraph& d, int lo, int hi) {
    for (int u = lo; u < hi; ++u)
        for (int v = lo; v < hi; ++v)
            if (u != v) d.add_arc(u, v);
}

}  // namespace

Remark1Instance gen_remark1(int n, int m) {
    if (m < 2) throw std::invalid_argument("gen_remark1: m must be >= 2");
    if (n - m < 4) throw std::invalid_argument("gen_remark1: n-m must be >= 4");
    const int x = 0, z = 1, yv = m;
    Digraph d(n);
    add_complete_symmetric(d, 0, m);   // <G> = K*_m
    add_complete_symmetric(d, m, n);   // <H> = K*_{n-m}
    for (int u = m; u < n; ++u) {
        if (u == yv) continue;
        d.add_arc(u, x);
        d.add_arc(x, u);
    }
    d.add_arc(yv, x);
    d.freeze();
    Bitset y(n);
    y.set(x);
    y.set(yv);
    y.set(z);
    return {std::move(d), std::move(y), x, yv, z};
}

Digraph gen_h_mm(int m) {
    if (m < 2) throw std::invalid_argument("gen_h_mm: m must be >= 2");
    Digraph d(2 * m);
    add_complete_symmetric(d, 0, m);
    add_complete_symmetric(d, m, 2 * m);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v) d.add_arc(u, v);
    d.freeze();
    return d;
}

Digraph gen_h_m_m1_1(int m, HubOrientation orientation) {
    if (m < 2) throw std::invalid_argument("gen_h_m_m1_1: m must be >= 2");
    const int hub = 2 * m - 1;
    Digraph d(2 * m);
    add_complete_symmetric(d, m, 2 * m - 1);  // <B> = K*_{m-1}
    for (int u = 0; u < m; ++u) {
        for (int v = m; v < 2 * m - 1; ++v) {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
    }
    if (orientation == HubOrientation::In) {
        for (int v = m; v < 2 * m - 1; ++v) d.add_arc(v, hub);
        for (int u = 0; u < m; ++u) d.add_arc(hub, u);
    } else {
        for (int v = m; v < 2 * m - 1; ++v) d.add_arc(hub, v);
        for (int u = 0; u < m; ++u) d.add_arc(u, hub);
    }
    d.freeze();
    return d;
}

Digraph gen_h_2m(int m, bool both_arcs) {
    if (m < 2) throw std::invalid_argument("gen_h_2m: m must be >= 2");
    const int x = 2 * m - 2, y = 2 * m - 1;
    Digraph d(2 * m);
    // <A u {x}> complete symmetric: A = [0, m-1), plus x
    for (int u = 0; u < m - 1; ++u) {
        for (int v = u + 1; v < m - 1; ++v) {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
        d.add_arc(u, x);
        d.add_arc(x, u);
    }
    // <B u {y}> complete symmetric: B = [m-1, 2m-2), plus y
    for (int u = m - 1; u < 2 * m - 2; ++u) {
        for (int v = u + 1; v < 2 * m - 2; ++v) {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
        d.add_arc(u, y);
        d.add_arc(y, u);
    }
    for (int a = 0; a < m - 1; ++a) d.add_arc(y, a);
    for (int b = m - 1; b < 2 * m - 2; ++b) d.add_arc(b, x);
    d.add_arc(x, y);
    if (both_arcs) d.add_arc(y, x);
    d.freeze();
    return d;
}

Digraph gen_d6() {
    Digraph d(6);  // x1..x5 -> 0..4, x -> 5
    for (int i = 0; i < 4; ++i) d.add_arc(i, i + 1);  // x_i x_{i+1}
    for (int i = 0; i < 3; ++i) d.add_arc(5, i);      // x x_i
    d.add_arc(0, 4);  // x1 x5
    d.add_arc(1, 4);  // x2 x5
    d.add_arc(4, 0);  // x5 x1
    d.add_arc(4, 3);  // x5 x4
    d.add_arc(2, 1);  // x3 x2
    d.add_arc(2, 5);  // x3 x
    d.add_arc(3, 0);  // x4 x1
    d.add_arc(3, 5);  // x4 x
    d.freeze();
    return d;
}

Digraph gen_d6_prime() {
    Digraph d(6);
    for (auto [u, v] : gen_d6().arcs()) d.add_arc(u, v);
    d.add_arc(1, 3);  // x2 x4
    d.freeze();
    return d;
}

Digraph gen_k_star(int n) { return symmetric_closure(complete_graph(n)); }

Digraph gen_k_star_bipartite(int p, int q) {
    return symmetric_closure(complete_bipartite(p, q));
}

Digraph gen_two_cliques_plus_one(int m) {
    if (m < 2) throw std::invalid_argument("gen_two_cliques_plus_one: m must be >= 2");
    auto cliques = disjoint_union(complete_graph(m), complete_graph(m));
    return symmetric_closure(join(cliques, complete_graph(1)));
}

bool is_member_h_mm(const Digraph& d, int m) {
    if (m < 2 || d.order() != 2 * m) return false;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (u != v && !d.has_arc(u, v)) return false;
    for (int u = m; u < 2 * m; ++u)
        for (int v = m; v < 2 * m; ++v)
            if (u != v && !d.has_arc(u, v)) return false;
    for (int u = m; u < 2 * m; ++u)
        for (int v = 0; v < m; ++v)
            if (d.has_arc(u, v)) return false;  // no B -> A arc
    Bitset a(d.order()), b(d.order());
    for (int u = 0; u < m; ++u) a.set(u);
    for (int v = m; v < 2 * m; ++v) b.set(v);
    for (int u = 0; u < m; ++u)
        if (d.out_degree(u, b) < 1) return false;
    for (int v = m; v < 2 * m; ++v)
        if (d.in_degree(v, a) < 1) return false;
    return true;
}

bool is_member_h_m_m1_1(const Digraph& d, int m) {
    if (m < 2 || d.order() != 2 * m) return false;
    const int hub = 2 * m - 1;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (u != v && d.has_arc(u, v)) return false;  // <A> arcless
    for (int u = 0; u < m; ++u)
        for (int v = m; v < hub; ++v)
            if (!d.has_arc(u, v) || !d.has_arc(v, u)) return false;
    // either N-(a) = B with A <= N+(a), or N+(a) = B with A <= N-(a)
    bool in_ok = true, out_ok = true;
    for (int v = m; v < hub; ++v) {
        if (!d.has_arc(v, hub)) in_ok = false;
        if (!d.has_arc(hub, v)) out_ok = false;
    }
    for (int u = 0; u < m; ++u) {
        if (d.has_arc(u, hub) || !d.has_arc(hub, u)) in_ok = false;
        if (d.has_arc(hub, u) || !d.has_arc(u, hub)) out_ok = false;
    }
    return in_ok || out_ok;
}

bool is_member_h_2m(const Digraph& d, int m) {
    if (m < 2 || d.order() != 2 * m) return false;
    const int x = 2 * m - 2, y = 2 * m - 1;
    auto in_ax = [&](int v) { return v < m - 1 || v == x; };
    auto in_by = [&](int v) { return (v >= m - 1 && v < 2 * m - 2) || v == y; };
    for (int u = 0; u < 2 * m; ++u) {
        for (int v = 0; v < 2 * m; ++v) {
            if (u == v) continue;
            bool same_half = (in_ax(u) && in_ax(v)) || (in_by(u) && in_by(v));
            if (same_half && !d.has_arc(u, v)) return false;
        }
    }
    for (int a = 0; a < m - 1; ++a) {
        if (!d.has_arc(y, a)) return false;
        for (int b = m - 1; b < 2 * m - 2; ++b)
            if (d.has_arc(a, b) || d.has_arc(b, a)) return false;
        if (d.has_arc(a, y)) return false;
    }
    for (int b = m - 1; b < 2 * m - 2; ++b) {
        if (!d.has_arc(b, x) || d.has_arc(x, b)) return false;
    }
    return d.has_arc(x, y);  // yx optional
}

}  // namespace cyclab
