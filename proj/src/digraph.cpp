#include "cyclab/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace cyclab {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Digraph: order must be >= 1");
    out_.assign(n, Bitset(n));
    in_.assign(n, Bitset(n));
}

void Digraph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Digraph: invalid vertex id");
}

void Digraph::add_arc(int u, int v) {
    if (frozen_) throw std::logic_error("Digraph: add_arc after freeze");
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: loops are not allowed");
    if (out_[u].test(v)) throw std::invalid_argument("Digraph: duplicate arc");
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && out_[u].test(v);
}

bool Digraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: adjacency of a vertex with itself");
    return out_[u].test(v) || out_[v].test(u);
}

const Bitset& Digraph::out_neighbors(int u) const {
    check_vertex(u);
    return out_[u];
}

const Bitset& Digraph::in_neighbors(int u) const {
    check_vertex(u);
    return in_[u];
}

int Digraph::out_degree(int u) const {
    check_vertex(u);
    return out_[u].count();
}

int Digraph::in_degree(int u) const {
    check_vertex(u);
    return in_[u].count();
}

int Digraph::out_degree(int u, const Bitset& a) const {
    check_vertex(u);
    return out_[u].and_count(a);
}

int Digraph::in_degree(int u, const Bitset& a) const {
    check_vertex(u);
    return in_[u].and_count(a);
}

int Digraph::degree(int u, const Bitset& a, DegreeMode mode) const {
    switch (mode) {
        case DegreeMode::Out: return out_degree(u, a);
        case DegreeMode::In: return in_degree(u, a);
        case DegreeMode::Total: return degree(u, a);
    }
    throw std::invalid_argument("Digraph: bad degree mode");
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u].members()) out.emplace_back(u, v);
    return out;
}

Digraph Digraph::converse() const {
    Digraph r(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u].members()) r.add_arc(v, u);
    r.freeze();
    return r;
}

std::pair<Digraph, std::vector<int>> Digraph::induced(const Bitset& a) const {
    if (a.size() != n_) throw std::invalid_argument("Digraph: induced set size mismatch");
    if (a.none()) throw std::invalid_argument("Digraph: induced set must be nonempty");
    std::vector<int> to_old = a.members();
    std::vector<int> to_new(n_, -1);
    for (int i = 0; i < int(to_old.size()); ++i) to_new[to_old[i]] = i;
    Digraph r(int(to_old.size()));
    for (int u : to_old)
        for (int v : out_[u].members())
            if (a.test(v)) r.add_arc(to_new[u], to_new[v]);
    r.freeze();
    return {std::move(r), std::move(to_old)};
}

// ---- Path / Cycle ----------------------------------------------------------

Path::Path(const Digraph& d, std::vector<int> vertices) : v_(std::move(vertices)), set_(d.order()) {
    if (v_.empty()) throw std::invalid_argument("Path: empty vertex sequence");
    for (int x : v_) {
        if (x < 0 || x >= d.order()) throw std::out_of_range("Path: invalid vertex id");
        if (set_.test(x)) throw std::invalid_argument("Path: repeated vertex");
        set_.set(x);
    }
    for (std::size_t i = 0; i + 1 < v_.size(); ++i)
        if (!d.has_arc(v_[i], v_[i + 1])) throw std::invalid_argument("Path: missing arc");
}

Cycle::Cycle(const Digraph& d, std::vector<int> vertices) : v_(std::move(vertices)), set_(d.order()) {
    if (v_.size() < 2) throw std::invalid_argument("Cycle: needs at least 2 vertices");
    for (int x : v_) {
        if (x < 0 || x >= d.order()) throw std::out_of_range("Cycle: invalid vertex id");
        if (set_.test(x)) throw std::invalid_argument("Cycle: repeated vertex");
        set_.set(x);
    }
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (!d.has_arc(v_[i], v_[(i + 1) % v_.size()]))
            throw std::invalid_argument("Cycle: missing arc");
    auto lo = std::min_element(v_.begin(), v_.end());
    std::rotate(v_.begin(), lo, v_.end());
}

int Cycle::at(int i) const {
    int k = length();
    return v_[((i % k) + k) % k];
}

int Cycle::index_of(int v) const {
    for (int i = 0; i < length(); ++i)
        if (v_[i] == v) return i;
    throw std::invalid_argument("Cycle: vertex not on cycle");
}

int Cycle::successor(int v) const { return at(index_of(v) + 1); }
int Cycle::predecessor(int v) const { return at(index_of(v) - 1); }

int Cycle::forward_distance(int u, int v) const {
    int k = length();
    return ((index_of(v) - index_of(u)) % k + k) % k;
}

// ---- text format -----------------------------------------------------------

DigraphFile read_digraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<std::pair<int, int>> arcs;
    std::optional<std::vector<int>> yraw;

    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR for robustness against CRLF input
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;  // blank line
        if (kw[0] == '#') continue;
        if (kw == "n") {
            if (n) throw ParseError(lineno, "duplicate 'n' line");
            int v;
            if (!(ls >> v)) throw ParseError(lineno, "expected integer after 'n'");
            if (v < 1) throw ParseError(lineno, "order must be >= 1");
            n = v;
        } else if (kw == "arc") {
            if (!n) throw ParseError(lineno, "'arc' before 'n'");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'arc <u> <v>'");
            arcs.emplace_back(u, v);
        } else if (kw == "set") {
            if (!n) throw ParseError(lineno, "'set' before 'n'");
            std::string name;
            if (!(ls >> name) || name != "Y") throw ParseError(lineno, "expected 'set Y <v...>'");
            if (yraw) throw ParseError(lineno, "duplicate 'set Y' line");
            std::vector<int> vs;
            int v;
            while (ls >> v) vs.push_back(v);
            yraw = std::move(vs);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
        ls.clear();
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            throw ParseError(lineno, "trailing tokens on line");
    }
    if (!n) throw ParseError(std::max(lineno, 1), "missing 'n' line");

    Digraph d(*n);
    try {
        for (auto [u, v] : arcs) d.add_arc(u, v);
    } catch (const std::exception& e) {
        throw ParseError(lineno, std::string("bad arc: ") + e.what());
    }
    d.freeze();

    std::optional<Bitset> y;
    if (yraw) {
        Bitset s(*n);
        for (int v : *yraw) {
            if (v < 0 || v >= *n) throw ParseError(lineno, "Y vertex out of range");
            s.set(v);
        }
        y = std::move(s);
    }
    return {std::move(d), std::move(y)};
}

void write_digraph(std::ostream& out, const Digraph& d, const Bitset* y,
                   const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << d.order() << "\n";
    for (auto [u, v] : d.arcs()) out << "arc " << u << " " << v << "\n";
    if (y) {
        out << "set Y";
        for (int v : y->members()) out << " " << v;
        out << "\n";
    }
}

// ---- undirected builders ---------------------------------------------------

UndirectedGraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    UndirectedGraph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

UndirectedGraph edgeless_graph(int n) {
    if (n < 1) throw std::invalid_argument("edgeless_graph: n must be >= 1");
    return {n, {}};
}

UndirectedGraph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
    UndirectedGraph g{p + q, {}};
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) g.edges.emplace_back(u, p + v);
    return g;
}

UndirectedGraph disjoint_union(const UndirectedGraph& a, const UndirectedGraph& b) {
    UndirectedGraph g{a.n + b.n, a.edges};
    for (auto [u, v] : b.edges) g.edges.emplace_back(u + a.n, v + a.n);
    return g;
}

UndirectedGraph join(const UndirectedGraph& a, const UndirectedGraph& b) {
    UndirectedGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) g.edges.emplace_back(u, a.n + v);
    return g;
}

Digraph symmetric_closure(const UndirectedGraph& g) {
    Digraph d(g.n);
    for (auto [u, v] : g.edges) {
        if (u == v) throw std::invalid_argument("symmetric_closure: loop edge");
        d.add_arc(u, v);
        d.add_arc(v, u);
    }
    d.freeze();
    return d;
}

}  // namespace cyclab
