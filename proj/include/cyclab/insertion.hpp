#ifndef CYCLAB_INSERTION_HPP
#define CYCLAB_INSERTION_HPP

#include <optional>
#include <vector>

#include "cyclab/digraph.hpp"

namespace cyclab {

// A C-bypass: a path of length >= 2 whose endpoints are the only vertices
// on C. `gap` is the length of C[entry, exit] along the cycle orientation.
struct Bypass {
    Path path;
    int entry;
    int exit;
    int gap;
};

// Index i into the host path P: P[i] -> head(Q) and tail(Q) -> P[i+1] are arcs.
struct InsertionPoint {
    int index;
};

// Smallest i such that Q can be inserted into P between P[i] and P[i+1].
// P and Q must be vertex-disjoint, |P| >= 2. When the degree inequality
//   d-(q1,P) + d+(qr,P) >= |P| + d-(q1,{P.back}) + d+(qr,{P.front})
// holds, a point is guaranteed to exist.
std::optional<InsertionPoint> path_insert(const Digraph& d, const Path& p, const Path& q);

// The path obtained by inserting Q into P at point i.
Path apply_insertion(const Digraph& d, const Path& p, const Path& q, InsertionPoint i);

// Cycle absorption: given cycle C (length k) and disjoint path Q (r
// vertices) with d-(q1,C) + d+(qr,C) >= k+1, returns one cycle of every
// length m in [r+1, k+r] with vertices within V(C) u V(Q).
// Throws ConditionNotMet when the degree sum is too small, and
// LemmaViolation if the pigeonhole construction ever fails despite the
// hypothesis (that would contradict the absorption lemma).
std::vector<Cycle> cycle_absorb(const Digraph& d, const Cycle& c, const Path& q);

// Multi-insertion: P an (a,b)-path, Q disjoint from P, S a subset of V(Q)
// each of whose vertices is individually insertable into P. Produces an
// (a,b)-path R with V(P) u S <= V(R) <= V(P) u V(Q), by inserting disjoint
// runs of Q into distinct arcs of P (maximal runs first, backtracking on
// failure). Throws std::invalid_argument if some S-vertex is not
// insertable, LemmaViolation if the search fails despite the precondition.
Path multi_insert(const Digraph& d, const Path& p, const Path& q, const Bitset& s);

// All midpoints v with x->v->y, for a nonadjacent-in-that-direction pair.
// If d+(x) + d-(y) >= n-2+k then at least k midpoints come back.
std::vector<int> length2_paths(const Digraph& d, int x, int y);

// Minimal C-bypass whose path passes through y (y not on C): minimum gap
// first, then minimum path length, then lexicographically smallest vertex
// sequence. `max_length` optionally caps the bypass length.
std::optional<Bypass> find_bypass(const Digraph& d, const Cycle& c, int y,
                                  std::optional<int> max_length = std::nullopt);

// ---- small-instance enumeration (used by the verifier's lemma suites) -----

// All simple cycles, each rotation-normalized, deduplicated.
std::vector<Cycle> enumerate_cycles(const Digraph& d);

// All simple paths with at least `min_vertices` vertices, restricted to
// `allowed` (paths may not leave it).
std::vector<Path> enumerate_paths(const Digraph& d, const Bitset& allowed, int min_vertices = 1);

}  // namespace cyclab

#endif
