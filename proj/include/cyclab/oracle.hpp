#ifndef CYCLAB_ORACLE_HPP
#define CYCLAB_ORACLE_HPP

#include <optional>

#include "cyclab/digraph.hpp"

namespace cyclab {

// Exact answers are capped: the subset DP is O(2^n * n^2) and refuses
// larger instances rather than degrading.
inline constexpr int kDefaultOracleCap = 14;

struct OracleResult {
    std::optional<Cycle> best_cycle;  // absent iff the digraph is acyclic
    int max_y_length = 0;
    bool exhausted = false;
};

// Maximum number of Y-vertices on any cycle, with one witness cycle.
// Ties among optimal cycles: shortest length, then lexicographically
// smallest normalized vertex sequence. Each DP run anchors the smallest
// cycle vertex to kill rotational duplicates.
OracleResult max_Y_cycle(const Digraph& d, const Bitset& y, int cap = kDefaultOracleCap);

// Same maximum without witness reconstruction; the scan loops use this.
int max_Y_length(const Digraph& d, const Bitset& y, int cap = kDefaultOracleCap);

bool is_hamiltonian(const Digraph& d, int cap = kDefaultOracleCap);

// True iff some cycle contains every vertex of S. S must be nonempty.
bool is_cyclable(const Digraph& d, const Bitset& s, int cap = kDefaultOracleCap);

}  // namespace cyclab

#endif
