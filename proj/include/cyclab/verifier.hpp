#ifndef CYCLAB_VERIFIER_HPP
#define CYCLAB_VERIFIER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclab/digraph.hpp"

namespace cyclab {

// ---- arc bitmask encoding --------------------------------------------------
// Ordered pairs (u,v), u != v, enumerated u-major with v skipping u; bit i
// set means the i-th pair is an arc. Reports print the mask in hex.

using ArcMask = std::vector<std::uint64_t>;

int arc_bit_count(int n);
ArcMask mask_from_digraph(const Digraph& d);
Digraph digraph_from_mask(int n, const ArcMask& mask);
std::string mask_to_hex(const ArcMask& mask);

// ---- scan configuration ----------------------------------------------------

struct YPolicy {
    enum class Kind { AllSubsets, YEqualsV, SampledK };
    Kind kind = Kind::YEqualsV;
    int k = 4;  // samples per digraph for SampledK (always includes Y=V)

    static YPolicy all_subsets() { return {Kind::AllSubsets, 0}; }
    static YPolicy y_equals_v() { return {Kind::YEqualsV, 0}; }
    static YPolicy sampled(int k) { return {Kind::SampledK, k}; }

    std::string to_string() const;
    static YPolicy parse(const std::string& s);  // "all" | "V" | "sampled-<k>"
};

struct ScanViolation {
    std::string hex_mask;
    std::vector<int> y;
    std::string property;
};

struct ScanReport {
    std::string property;
    int n = 0;
    std::string policy;
    std::uint64_t seed = 0;
    bool seeded = false;
    long long examined = 0;         // digraphs (or trials) inspected
    long long hypothesis_hits = 0;  // instances where the hypothesis held
    std::vector<ScanViolation> violations;
    double wall_seconds = 0;
    bool property_is_open = false;  // conjecture scans: entries are candidates
};

void write_scan_report(std::ostream& out, const ScanReport& r);

// Registered property names (main-theorem, manoussakis, theorem-f,
// lemma-3.1/2/5/7/8/10/11, conjecture-i/ii/iii).
std::vector<std::string> property_names();
bool property_exists(const std::string& name);
bool property_is_open(const std::string& name);

// All 2^(n(n-1)) loop-free digraphs of order n, in arc-bitmask order.
// Requires n <= 5. `seed` only feeds the SampledK policy. workers = 0
// means hardware concurrency; the merged report is worker-count invariant.
ScanReport exhaustive_scan(int n, const std::string& property, const YPolicy& policy,
                           std::uint64_t seed = 0, int workers = 0);

// `trials` random digraphs with independent arc probability `arc_prob`,
// deterministic given the seed. Requires n <= the oracle cap.
ScanReport random_scan(int n, long long trials, std::uint64_t seed,
                       const std::string& property, const YPolicy& policy,
                       double arc_prob = 0.5, int workers = 0);

// Random search for counterexamples to conjecture variant 'i'/'ii'/'iii'.
// Hits are recorded, never asserted: the conjecture is open.
ScanReport conjecture_scan(int n, const std::string& variant, long long trials,
                           std::uint64_t seed, int workers = 0);

}  // namespace cyclab

#endif
