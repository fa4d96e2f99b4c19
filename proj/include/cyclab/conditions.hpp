#ifndef CYCLAB_CONDITIONS_HPP
#define CYCLAB_CONDITIONS_HPP

#include <vector>

#include "cyclab/digraph.hpp"

namespace cyclab {

// Reports enumerate every violation (up to a cap) rather than stopping at
// the first one; the verifier's statistics want the full list.
inline constexpr int kMaxReportEntries = 10000;

// One failed instance of condition A0. `x` and `y` are the nonadjacent
// pair, `z` the third vertex; the branch names the missing arc that
// triggered the inequality.
struct A0Violation {
    enum class Branch { NoArcXZ, NoArcZX };
    int x, y, z;
    Branch branch;
    int lhs;  // the degree sum that came up short
    int rhs;  // always 3n-2
};

struct A0Report {
    bool holds = true;
    std::vector<A0Violation> violations;  // capped at kMaxReportEntries
    long long violation_count = 0;        // uncapped
};

struct MeynielViolation {
    int x, y;
    int degree_sum;  // < 2n-1
};

struct MeynielReport {
    bool holds = true;
    std::vector<MeynielViolation> violations;
    long long violation_count = 0;
};

bool is_strong(const Digraph& d);

// Strong, and still strong after deleting any single vertex. Requires n >= 3.
bool is_2_strong(const Digraph& d);

// Every ordered pair of distinct S-vertices joined by a directed path
// (intermediate vertices unrestricted). S must be nonempty.
bool is_S_strong(const Digraph& d, const Bitset& s);

// Condition A0 over Y: for every ordered pair x,y of distinct nonadjacent
// Y-vertices and every third distinct z in Y,
//   xz missing  =>  d(x)+d(y)+d+(x)+d-(z) >= 3n-2
//   zx missing  =>  d(x)+d(y)+d-(x)+d+(z) >= 3n-2
// The triple is required pairwise distinct.
A0Report check_A0(const Digraph& d, const Bitset& y);

// Every nonadjacent distinct pair in M has degree sum >= 2n-1.
MeynielReport check_meyniel_set(const Digraph& d, const Bitset& m);

// Consequence of A0 (Lemma about two nonadjacent partners): for every x in Y
// with two distinct nonadjacent partners y,z in Y, at least one of
// d(x)+d(y), d(x)+d(z) is >= 2n-1. Precondition: A0 holds on Y.
bool lemma37_holds(const Digraph& d, const Bitset& y);

}  // namespace cyclab

#endif
