#ifndef CYCLAB_FAMILIES_HPP
#define CYCLAB_FAMILIES_HPP

#include "cyclab/digraph.hpp"

namespace cyclab {

// Generators for the concrete digraphs and digraph families used as
// fixtures and sharpness witnesses. Vertex numbering is fixed per family
// (documented at each generator) so instances are reproducible.

struct Remark1Instance {
    Digraph digraph;
    Bitset y;  // {x, y, z}
    int x, yv, z;
};

// Sharpness witness: G = K*_m on [0,m) with x=0, z=1; H = K*_{n-m} on
// [m,n) with y=m; arcs ux,xu for every u in H \ {y}; plus the arc yx.
// Requires m >= 2 and n-m >= 4. Y-strong, satisfies A0, yet no cycle
// covers all of {x,y,z}.
Remark1Instance gen_remark1(int n, int m);

// Canonical maximal member of H(m,m): A=[0,m), B=[m,2m), both K*_m, every
// A->B arc present, no B->A arc.
Digraph gen_h_mm(int m);

enum class HubOrientation { In, Out };

// Canonical member of H(m,m-1,1): A=[0,m) arcless, B=[m,2m-1) complete
// symmetric, all arcs both ways between A and B, hub a=2m-1 wired
// In  (N-(a)=B, N+(a)=A) or Out (N+(a)=B, N-(a)=A).
Digraph gen_h_m_m1_1(int m, HubOrientation orientation);

// H(2m): A=[0,m-1), B=[m-1,2m-2), x=2m-2, y=2m-1; <A u {x}> and
// <B u {y}> are K*_m, no arcs between A and B, arcs ya for a in A and
// bx for b in B, arc xy (plus yx when both_arcs).
Digraph gen_h_2m(int m, bool both_arcs);

// The two sporadic order-6 exceptions, vertices x1..x5,x mapped to 0..5.
Digraph gen_d6();
Digraph gen_d6_prime();  // D6 plus the arc x2 x4

Digraph gen_k_star(int n);
Digraph gen_k_star_bipartite(int p, int q);
// [(K_m u K_m) + K_1]*: two m-cliques on [0,m) and [m,2m), apex 2m.
Digraph gen_two_cliques_plus_one(int m);

// Membership validators for the family definitions, against the canonical
// vertex numbering above. They accept non-canonical members too (e.g. an
// H(m,m) member with only some A->B arcs).
bool is_member_h_mm(const Digraph& d, int m);
bool is_member_h_m_m1_1(const Digraph& d, int m);
bool is_member_h_2m(const Digraph& d, int m);

}  // namespace cyclab

#endif
