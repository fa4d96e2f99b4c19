#ifndef CYCLAB_DIGRAPH_HPP
#define CYCLAB_DIGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclab/bitset.hpp"
#include "cyclab/errors.hpp"

namespace cyclab {

enum class DegreeMode { Out, In, Total };

// Loop-free simple digraph on vertices 0..n-1. Adjacency is stored as
// per-vertex out/in bitsets, so d+(x,A)/d-(x,A) are popcounts.
//
// A Digraph starts as a single-owner builder; freeze() makes it immutable,
// after which it may be shared across threads freely. Inserting a duplicate
// arc or a loop throws (generator bugs should not pass silently).
class Digraph {
public:
    explicit Digraph(int n);

    int order() const { return n_; }
    int arc_count() const { return arc_count_; }
    bool frozen() const { return frozen_; }

    void add_arc(int u, int v);
    void freeze() { frozen_ = true; }

    bool has_arc(int u, int v) const;

    // True iff uv or vu is an arc. u == v is rejected.
    bool adjacent(int u, int v) const;

    const Bitset& out_neighbors(int u) const;
    const Bitset& in_neighbors(int u) const;

    int out_degree(int u) const;
    int in_degree(int u) const;
    int degree(int u) const { return out_degree(u) + in_degree(u); }

    int out_degree(int u, const Bitset& a) const;
    int in_degree(int u, const Bitset& a) const;
    int degree(int u, const Bitset& a) const { return out_degree(u, a) + in_degree(u, a); }

    int degree(int u, const Bitset& a, DegreeMode mode) const;

    std::vector<std::pair<int, int>> arcs() const;

    // All arcs reversed. The result is frozen.
    Digraph converse() const;

    // Subdigraph induced by a nonempty vertex set, relabeled 0..|A|-1 in
    // ascending order of original id. Second element maps new id -> old id.
    std::pair<Digraph, std::vector<int>> induced(const Bitset& a) const;

private:
    void check_vertex(int u) const;

    int n_;
    int arc_count_ = 0;
    bool frozen_ = false;
    std::vector<Bitset> out_, in_;
};

// Open path x1...xm (m >= 1): distinct vertices, consecutive pairs arcs.
class Path {
public:
    Path(const Digraph& d, std::vector<int> vertices);

    int size() const { return int(v_.size()); }
    int length() const { return int(v_.size()) - 1; }
    int at(int i) const { return v_.at(i); }
    int front() const { return v_.front(); }
    int back() const { return v_.back(); }
    const std::vector<int>& vertices() const { return v_; }
    const Bitset& vertex_set() const { return set_; }
    bool contains(int v) const { return set_.test(v); }

private:
    std::vector<int> v_;
    Bitset set_;
};

// Cycle x1...xk x1 (k >= 2). Stored rotation-normalized: the lowest vertex
// id comes first, so two descriptions of the same cyclic order compare equal.
class Cycle {
public:
    Cycle(const Digraph& d, std::vector<int> vertices);

    int length() const { return int(v_.size()); }
    int at(int i) const;  // index taken modulo k
    const std::vector<int>& vertices() const { return v_; }
    const Bitset& vertex_set() const { return set_; }
    bool contains(int v) const { return set_.test(v); }
    int index_of(int v) const;  // throws if absent
    int successor(int v) const;
    int predecessor(int v) const;

    // Number of arcs from u to v along the orientation.
    int forward_distance(int u, int v) const;

    bool operator==(const Cycle& o) const { return v_ == o.v_; }
    bool operator!=(const Cycle& o) const { return !(*this == o); }

private:
    std::vector<int> v_;
    Bitset set_;
};

// ---- text format ----------------------------------------------------------
//
//   # comment
//   n <int>
//   arc <u> <v>
//   set Y <v...>
//
// `n` must come first; unknown keywords are parse errors.

struct DigraphFile {
    Digraph digraph;
    std::optional<Bitset> y;
};

DigraphFile read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d, const Bitset* y = nullptr,
                   const std::vector<std::string>& comments = {});

// ---- undirected builders (for the symmetric-closure families) -------------

struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v
};

UndirectedGraph complete_graph(int n);
UndirectedGraph edgeless_graph(int n);
UndirectedGraph complete_bipartite(int p, int q);
UndirectedGraph disjoint_union(const UndirectedGraph& a, const UndirectedGraph& b);
// Disjoint union plus all edges between the two parts.
UndirectedGraph join(const UndirectedGraph& a, const UndirectedGraph& b);

// Every edge xy becomes the pair of arcs xy, yx. Loops and duplicate edges
// are rejected.
Digraph symmetric_closure(const UndirectedGraph& g);

}  // namespace cyclab

#endif
