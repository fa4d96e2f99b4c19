#ifndef CYCLAB_GROWER_HPP
#define CYCLAB_GROWER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclab/digraph.hpp"
#include "cyclab/oracle.hpp"

namespace cyclab {

enum class GrowStatus { Ok, HypothesisUnmet, TheoremViolation };

// Output of grow(): a witness cycle, which Y-vertex (if any) it omits, and
// the construction trace. status == Ok guarantees |covered| >= |Y| - 1.
struct Certificate {
    GrowStatus status = GrowStatus::Ok;
    std::optional<Cycle> cycle;
    Bitset covered;  // V(cycle) intersect Y
    std::optional<int> omitted;
    std::vector<std::string> trace;
};

const char* to_string(GrowStatus s);
void write_certificate(std::ostream& out, const Certificate& c);

// Shortest cycle through some pair of Y-vertices (pairs in ascending order,
// shorter cycles first). Requires |Y| >= 2.
std::optional<Cycle> initial_cycle(const Digraph& d, const Bitset& y);

// The main-theorem algorithm. Checks the hypotheses (Y-strong, A0), then
// repeatedly improves the cycle's Y-length by merging a minimum-gap bypass
// through an uncovered Y-vertex and re-inserting displaced Y-vertices.
// When no improving step is found within `budget` iterations, falls back
// to the exact oracle (when order <= oracle_cap).
Certificate grow(const Digraph& d, const Bitset& y, int budget = 0 /* 0 = 10n */,
                 int oracle_cap = kDefaultOracleCap);

}  // namespace cyclab

#endif
