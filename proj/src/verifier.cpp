#include "cyclab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "cyclab/conditions.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/insertion.hpp"
#include "cyclab/oracle.hpp"

namespace cyclab {

// ---- mask encoding ---------------------------------------------------------

int arc_bit_count(int n) { return n * (n - 1); }

namespace {

// bit index of the ordered pair (u,v)
int pair_bit(int n, int u, int v) { return u * (n - 1) + (v < u ? v : v - 1); }

bool mask_bit(const ArcMask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }

void set_mask_bit(ArcMask& m, int i) { m[i >> 6] |= std::uint64_t(1) << (i & 63); }

}  // namespace

ArcMask mask_from_digraph(const Digraph& d) {
    const int n = d.order();
    ArcMask m((arc_bit_count(n) + 63) / 64, 0);
    for (auto [u, v] : d.arcs()) set_mask_bit(m, pair_bit(n, u, v));
    return m;
}

Digraph digraph_from_mask(int n, const ArcMask& mask) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && mask_bit(mask, pair_bit(n, u, v))) d.add_arc(u, v);
    d.freeze();
    return d;
}

std::string mask_to_hex(const ArcMask& mask) {
    std::ostringstream os;
    os << "0x" << std::hex;
    bool leading = true;
    for (int i = int(mask.size()) - 1; i >= 0; --i) {
        if (leading) {
            if (mask[i] == 0 && i > 0) continue;
            os << mask[i];
            leading = false;
        } else {
            os.width(16);
            os.fill('0');
            os << mask[i];
        }
    }
    return os.str();
}

// ---- YPolicy ---------------------------------------------------------------

std::string YPolicy::to_string() const {
    switch (kind) {
        case Kind::AllSubsets: return "all";
        case Kind::YEqualsV: return "V";
        case Kind::SampledK: return "sampled-" + std::to_string(k);
    }
    return "?";
}

YPolicy YPolicy::parse(const std::string& s) {
    if (s == "all") return all_subsets();
    if (s == "V") return y_equals_v();
    if (s.rfind("sampled-", 0) == 0) {
        int k = std::stoi(s.substr(8));
        if (k < 1) throw std::invalid_argument("YPolicy: sample count must be >= 1");
        return sampled(k);
    }
    throw std::invalid_argument("YPolicy: expected 'all', 'V' or 'sampled-<k>'");
}

// ---- deterministic per-instance rng ----------------------------------------

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (b * 0x9e3779b97f4a7c15ULL + 0x85ebca6bULL));
    return s.next();
}

// ---- property checks -------------------------------------------------------
// Each check returns (hypothesis hits inside the instance, violated?).

using CheckResult = std::pair<long long, bool>;

CheckResult check_main_theorem(const Digraph& d, const Bitset& y) {
    if (d.order() < 4 || y.count() < 2) return {0, false};
    if (!is_S_strong(d, y) || !check_A0(d, y).holds) return {0, false};
    return {1, max_Y_length(d, y) < y.count() - 1};
}

CheckResult check_manoussakis(const Digraph& d, const Bitset&) {
    if (d.order() < 4 || !is_strong(d)) return {0, false};
    if (!check_A0(d, Bitset::full(d.order())).holds) return {0, false};
    return {1, !is_hamiltonian(d)};
}

CheckResult check_theorem_f(const Digraph& d, const Bitset& m) {
    if (m.none()) return {0, false};
    if (!check_meyniel_set(d, m).holds || !is_S_strong(d, m)) return {0, false};
    return {1, !is_cyclable(d, m)};
}

CheckResult check_lemma_3_7(const Digraph& d, const Bitset& y) {
    if (y.none() || !check_A0(d, y).holds) return {0, false};
    return {1, !lemma37_holds(d, y)};
}

CheckResult check_lemma_3_1(const Digraph& d, const Bitset&) {
    long long hits = 0;
    bool bad = false;
    for (const Cycle& c : enumerate_cycles(d)) {
        if (c.length() >= d.order()) continue;  // non-Hamiltonian cycles only
        Bitset off = c.vertex_set().complement();
        for (const Path& q : enumerate_paths(d, off)) {
            int sum = d.in_degree(q.front(), c.vertex_set()) +
                      d.out_degree(q.back(), c.vertex_set());
            if (sum < c.length() + 1) continue;
            ++hits;
            try {
                auto cycles = cycle_absorb(d, c, q);
                if (int(cycles.size()) != c.length()) bad = true;
                for (std::size_t i = 0; i < cycles.size(); ++i) {
                    if (cycles[i].length() != q.size() + 1 + int(i)) bad = true;
                    if (!cycles[i].vertex_set().is_subset_of(c.vertex_set() | q.vertex_set()))
                        bad = true;
                }
            } catch (const LemmaViolation&) {
                bad = true;
            }
        }
    }
    return {hits, bad};
}

CheckResult check_lemma_3_2(const Digraph& d, const Bitset&) {
    long long hits = 0;
    bool bad = false;
    Bitset all = Bitset::full(d.order());
    for (const Path& p : enumerate_paths(d, all, 2)) {
        Bitset off = p.vertex_set().complement();
        if (off.none()) continue;
        for (const Path& q : enumerate_paths(d, off)) {
            int lhs = d.in_degree(q.front(), p.vertex_set()) +
                      d.out_degree(q.back(), p.vertex_set());
            int rhs = p.size() + (d.has_arc(p.back(), q.front()) ? 1 : 0) +
                      (d.has_arc(q.back(), p.front()) ? 1 : 0);
            if (lhs < rhs) continue;
            ++hits;
            if (!path_insert(d, p, q)) bad = true;
        }
    }
    return {hits, bad};
}

CheckResult check_lemma_3_8(const Digraph& d, const Bitset&) {
    long long hits = 0;
    bool bad = false;
    const int n = d.order();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || d.has_arc(x, y)) continue;
            int k = d.out_degree(x) + d.in_degree(y) - (n - 2);
            if (k < 1) continue;
            ++hits;
            if (int(length2_paths(d, x, y).size()) < k) bad = true;
        }
    }
    return {hits, bad};
}

CheckResult check_lemma_3_10(const Digraph& d, const Bitset&) {
    long long hits = 0;
    bool bad = false;
    const int n = d.order();
    std::vector<Cycle> cycles;  // lazy
    bool have_cycles = false;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (d.degree(x) + d.degree(y) < 2 * n - 1) continue;
            Bitset pair = Bitset::of(n, {x, y});
            if (!is_S_strong(d, pair)) continue;
            ++hits;
            if (!have_cycles) {
                cycles = enumerate_cycles(d);
                have_cycles = true;
            }
            bool found = false;
            for (const Cycle& c : cycles) {
                if (!c.contains(x) || !c.contains(y)) continue;
                int fwd = c.forward_distance(x, y);
                if (std::min(fwd, c.length() - fwd) <= 2) {
                    found = true;
                    break;
                }
            }
            if (!found) bad = true;
        }
    }
    return {hits, bad};
}

CheckResult check_lemma_3_11(const Digraph& d, const Bitset& y) {
    if (y.count() < 4) return {0, false};
    if (!is_S_strong(d, y) || !check_A0(d, y).holds) return {0, false};
    long long hits = 0;
    bool bad = false;
    for (const Cycle& c : enumerate_cycles(d)) {
        if (c.length() >= d.order()) continue;
        if (c.vertex_set().and_count(y) < 2) continue;
        for (int v : y.members()) {
            if (c.contains(v)) continue;
            ++hits;
            if (!find_bypass(d, c, v)) bad = true;
        }
    }
    return {hits, bad};
}

// (C,x)- and (x,C)-path existence: interior restricted off C.
bool has_c_to_x_path(const Digraph& d, const Cycle& c, int x) {
    Bitset off = c.vertex_set().complement();
    Bitset seen(d.order());
    std::vector<int> stack;
    for (int u : c.vertices())
        for (int w : d.out_neighbors(u).members())
            if (off.test(w) && !seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == x) return true;
        for (int w : d.out_neighbors(u).members())
            if (off.test(w) && !seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    }
    return seen.test(x);
}

bool has_x_to_c_path(const Digraph& d, const Cycle& c, int x) {
    Bitset off = c.vertex_set().complement();
    Bitset seen(d.order());
    seen.set(x);
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : d.out_neighbors(u).members()) {
            if (c.contains(w)) return true;
            if (off.test(w) && !seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        }
    }
    return false;
}

// Endpoints on C of shortest (C,x)-paths (first element) and of shortest
// (x,C)-paths (second element).
std::pair<std::vector<int>, std::vector<int>> shortest_contact_sets(const Digraph& d,
                                                                    const Cycle& c, int x) {
    Bitset off = c.vertex_set().complement();
    const int inf = 1 << 20;

    // distances from x forward within offC
    std::vector<int> dist_fwd(d.order(), inf);
    dist_fwd[x] = 0;
    std::vector<int> queue{x};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : d.out_neighbors(u).members())
            if (off.test(w) && dist_fwd[w] == inf) {
                dist_fwd[w] = dist_fwd[u] + 1;
                queue.push_back(w);
            }
    }
    int best_out = inf;
    std::vector<int> exits;
    for (int v : c.vertices()) {
        int dv = inf;
        for (int w : d.in_neighbors(v).members())
            if (dist_fwd[w] < inf && (w == x || off.test(w))) dv = std::min(dv, dist_fwd[w] + 1);
        if (dv < best_out) {
            best_out = dv;
            exits = {v};
        } else if (dv == best_out && dv < inf) {
            exits.push_back(v);
        }
    }

    // distances to x backward within offC
    std::vector<int> dist_bwd(d.order(), inf);
    dist_bwd[x] = 0;
    queue = {x};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : d.in_neighbors(u).members())
            if (off.test(w) && dist_bwd[w] == inf) {
                dist_bwd[w] = dist_bwd[u] + 1;
                queue.push_back(w);
            }
    }
    int best_in = inf;
    std::vector<int> entries;
    for (int u : c.vertices()) {
        int du = inf;
        for (int w : d.out_neighbors(u).members())
            if (dist_bwd[w] < inf && (w == x || off.test(w))) du = std::min(du, dist_bwd[w] + 1);
        if (du < best_in) {
            best_in = du;
            entries = {u};
        } else if (du == best_in && du < inf) {
            entries.push_back(u);
        }
    }
    return {entries, exits};
}

CheckResult check_lemma_3_5(const Digraph& d, const Bitset&) {
    long long hits = 0;
    bool bad = false;
    const int n = d.order();
    for (const Cycle& c : enumerate_cycles(d)) {
        if (c.length() >= n) continue;
        for (int x = 0; x < n; ++x) {
            if (c.contains(x)) continue;
            if (!has_c_to_x_path(d, c, x) || !has_x_to_c_path(d, c, x)) continue;
            if (find_bypass(d, c, x)) continue;
            ++hits;

            std::vector<int> adj;
            for (int v : c.vertices())
                if (d.adjacent(x, v)) adj.push_back(v);

            auto deg_bound_fails = [&](int z) { return d.degree(x) + d.degree(z) > 2 * n - 2; };

            if (!adj.empty()) {
                // (i): x touches C in exactly one vertex, D is not 2-strong,
                // and the degree bound holds off that vertex
                if (adj.size() != 1) {
                    bad = true;
                    continue;
                }
                if (n >= 3 && is_2_strong(d)) bad = true;
                for (int z : c.vertices())
                    if (z != adj[0] && deg_bound_fails(z)) bad = true;
            } else {
                // (ii): bound for all of C except possibly one of {u,v}
                auto [entries, exits] = shortest_contact_sets(d, c, x);
                std::vector<int> over;
                for (int z : c.vertices())
                    if (deg_bound_fails(z)) over.push_back(z);
                for (int u : entries) {
                    for (int v : exits) {
                        if (u != v) {
                            bool ok = over.empty() ||
                                      (over.size() == 1 && (over[0] == u || over[0] == v));
                            if (!ok) bad = true;
                        } else {
                            bool ok = over.empty() || (over.size() == 1 && over[0] == u);
                            if (!ok) bad = true;
                        }
                    }
                }
            }
        }
    }
    return {hits, bad};
}

// >= 2 internally disjoint x->y paths, via unit vertex capacities.
bool two_disjoint_paths(const Digraph& d, int s, int t) {
    const int n = d.order();
    // split: v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? 2 : 1;
    for (auto [u, v] : d.arcs()) cap[2 * u + 1][2 * v] = 1;
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < 2) {
        std::vector<int> parent(2 * n, -1);
        parent[source] = source;
        std::vector<int> queue{source};
        for (std::size_t h = 0; h < queue.size() && parent[sink] < 0; ++h) {
            int u = queue[h];
            for (int w = 0; w < 2 * n; ++w)
                if (cap[u][w] > 0 && parent[w] < 0) {
                    parent[w] = u;
                    queue.push_back(w);
                }
        }
        if (parent[sink] < 0) break;
        for (int w = sink; w != source; w = parent[w]) {
            --cap[parent[w]][w];
            ++cap[w][parent[w]];
        }
        ++flow;
    }
    return flow >= 2;
}

CheckResult check_conjecture(const Digraph& d, const Bitset& y, char variant) {
    if (d.order() < 4 || y.none() || !check_A0(d, y).holds) return {0, false};
    switch (variant) {
        case 'i':
            if (!is_2_strong(d)) return {0, false};
            break;
        case 'j':  // (ii)
            if (y.count() < 4 || !is_S_strong(d, y)) return {0, false};
            break;
        case 'k': {  // (iii)
            auto ys = y.members();
            for (int a : ys)
                for (int b : ys)
                    if (a != b && !two_disjoint_paths(d, a, b)) return {0, false};
            break;
        }
    }
    return {1, !is_cyclable(d, y)};
}

struct Property {
    std::string name;
    bool uses_y;
    int min_y;  // smallest |Y| the hypothesis can hold for
    bool open;  // conjecture: record candidates, never assert
    std::function<CheckResult(const Digraph&, const Bitset&)> check;
};

const std::vector<Property>& registry() {
    static const std::vector<Property> props = {
        {"main-theorem", true, 2, false, check_main_theorem},
        {"manoussakis", false, 0, false, check_manoussakis},
        {"theorem-f", true, 1, false, check_theorem_f},
        {"lemma-3.1", false, 0, false, check_lemma_3_1},
        {"lemma-3.2", false, 0, false, check_lemma_3_2},
        {"lemma-3.5", false, 0, false, check_lemma_3_5},
        {"lemma-3.7", true, 1, false, check_lemma_3_7},
        {"lemma-3.8", false, 0, false, check_lemma_3_8},
        {"lemma-3.10", false, 0, false, check_lemma_3_10},
        {"lemma-3.11", true, 4, false, check_lemma_3_11},
        {"conjecture-i", true, 1, true,
         [](const Digraph& d, const Bitset& y) { return check_conjecture(d, y, 'i'); }},
        {"conjecture-ii", true, 4, true,
         [](const Digraph& d, const Bitset& y) { return check_conjecture(d, y, 'j'); }},
        {"conjecture-iii", true, 1, true,
         [](const Digraph& d, const Bitset& y) { return check_conjecture(d, y, 'k'); }},
    };
    return props;
}

const Property& find_property(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown property '" + name + "'");
}

// ---- per-instance evaluation -----------------------------------------------

Bitset random_subset(SplitMix64& rng, int n, int min_size) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uint64_t bits = rng.next();
        Bitset s(n);
        for (int v = 0; v < n; ++v)
            if ((bits >> v) & 1u) s.set(v);
        if (s.count() >= min_size) return s;
    }
    return Bitset::full(n);
}

void eval_instance(const Digraph& d, const ArcMask& mask, const Property& prop,
                   const YPolicy& policy, std::uint64_t instance_seed, ScanReport& rep) {
    const int n = d.order();
    auto run = [&](const Bitset& y) {
        auto [hits, violated] = prop.check(d, y);
        rep.hypothesis_hits += hits;
        if (violated && int(rep.violations.size()) < kMaxReportEntries)
            rep.violations.push_back({mask_to_hex(mask), y.members(), prop.name});
    };
    if (!prop.uses_y) {
        run(Bitset::full(n));
        return;
    }
    switch (policy.kind) {
        case YPolicy::Kind::YEqualsV:
            run(Bitset::full(n));
            break;
        case YPolicy::Kind::AllSubsets: {
            int min_size = std::max(prop.min_y, 1);
            for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
                Bitset y(n);
                for (int v = 0; v < n; ++v)
                    if ((bits >> v) & 1u) y.set(v);
                if (y.count() >= min_size) run(y);
            }
            break;
        }
        case YPolicy::Kind::SampledK: {
            int min_size = std::max(prop.min_y, 2);
            run(Bitset::full(n));  // always include Y=V
            SplitMix64 rng(instance_seed);
            for (int i = 1; i < policy.k; ++i) run(random_subset(rng, n, min_size));
            break;
        }
    }
}

ScanReport merge_reports(std::vector<ScanReport> parts, ScanReport header) {
    for (auto& p : parts) {
        header.examined += p.examined;
        header.hypothesis_hits += p.hypothesis_hits;
        for (auto& v : p.violations) header.violations.push_back(std::move(v));
    }
    return header;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

ArcMask random_mask(int n, SplitMix64& rng, double arc_prob) {
    int bits = arc_bit_count(n);
    ArcMask m((bits + 63) / 64, 0);
    auto threshold = std::uint64_t(arc_prob * double(~std::uint64_t(0)));
    for (int i = 0; i < bits; ++i)
        if (rng.next() <= threshold) set_mask_bit(m, i);
    return m;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const auto& p : registry()) names.push_back(p.name);
    return names;
}

bool property_exists(const std::string& name) {
    for (const auto& p : registry())
        if (p.name == name) return true;
    return false;
}

bool property_is_open(const std::string& name) { return find_property(name).open; }

ScanReport exhaustive_scan(int n, const std::string& property, const YPolicy& policy,
                           std::uint64_t seed, int workers) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("exhaustive_scan: full enumeration limited to n <= 5");
    const Property& prop = find_property(property);
    auto t0 = std::chrono::steady_clock::now();

    const std::uint64_t total = std::uint64_t(1) << arc_bit_count(n);
    int nworkers = resolve_workers(workers);
    std::uint64_t chunk = (total + nworkers - 1) / nworkers;

    std::vector<ScanReport> parts(nworkers);
    std::vector<std::thread> threads;
    for (int w = 0; w < nworkers; ++w) {
        threads.emplace_back([&, w] {
            std::uint64_t lo = std::uint64_t(w) * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            ScanReport& rep = parts[w];
            for (std::uint64_t m = lo; m < hi; ++m) {
                ArcMask mask{m};
                Digraph d = digraph_from_mask(n, mask);
                ++rep.examined;
                eval_instance(d, mask, prop, policy, mix(seed, m), rep);
            }
        });
    }
    for (auto& t : threads) t.join();

    ScanReport header;
    header.property = property;
    header.n = n;
    header.policy = policy.to_string();
    header.seed = seed;
    header.seeded = policy.kind == YPolicy::Kind::SampledK;
    header.property_is_open = prop.open;
    ScanReport rep = merge_reports(std::move(parts), std::move(header));
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ScanReport random_scan(int n, long long trials, std::uint64_t seed, const std::string& property,
                       const YPolicy& policy, double arc_prob, int workers) {
    if (n < 1 || n > kDefaultOracleCap)
        throw std::invalid_argument("random_scan: order exceeds the oracle cap");
    if (trials < 1) throw std::invalid_argument("random_scan: trials must be >= 1");
    if (arc_prob < 0.0 || arc_prob > 1.0)
        throw std::invalid_argument("random_scan: arc probability out of range");
    const Property& prop = find_property(property);
    auto t0 = std::chrono::steady_clock::now();

    int nworkers = resolve_workers(workers);
    long long chunk = (trials + nworkers - 1) / nworkers;
    std::vector<ScanReport> parts(nworkers);
    std::vector<std::thread> threads;
    for (int w = 0; w < nworkers; ++w) {
        threads.emplace_back([&, w] {
            long long lo = w * chunk;
            long long hi = std::min(trials, lo + chunk);
            ScanReport& rep = parts[w];
            for (long long t = lo; t < hi; ++t) {
                SplitMix64 rng(mix(seed, std::uint64_t(t)));
                ArcMask mask = random_mask(n, rng, arc_prob);
                Digraph d = digraph_from_mask(n, mask);
                ++rep.examined;
                eval_instance(d, mask, prop, policy, rng.next(), rep);
            }
        });
    }
    for (auto& t : threads) t.join();

    ScanReport header;
    header.property = property;
    header.n = n;
    header.policy = policy.to_string();
    header.seed = seed;
    header.seeded = true;
    header.property_is_open = prop.open;
    ScanReport rep = merge_reports(std::move(parts), std::move(header));
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ScanReport conjecture_scan(int n, const std::string& variant, long long trials,
                           std::uint64_t seed, int workers) {
    std::string prop;
    if (variant == "i")
        prop = "conjecture-i";
    else if (variant == "ii")
        prop = "conjecture-ii";
    else if (variant == "iii")
        prop = "conjecture-iii";
    else
        throw std::invalid_argument("conjecture_scan: variant must be i, ii or iii");
    // variant (ii) quantifies over Y with |Y| >= 4; the others over any
    // nonempty Y -- sampling covers both via the property's min_y.
    return random_scan(n, trials, seed, prop, YPolicy::sampled(4), 0.5, workers);
}

void write_scan_report(std::ostream& out, const ScanReport& r) {
    out << "scan " << r.property << " n=" << r.n << " policy=" << r.policy << " seed=";
    if (r.seeded)
        out << r.seed;
    else
        out << "none";
    out << "\n";
    out << "examined " << r.examined << "\n";
    out << "hits " << r.hypothesis_hits << "\n";
    out << "violations " << r.violations.size() << "\n";
    for (const auto& v : r.violations) {
        out << "violation " << v.hex_mask << " " << v.property << " Y";
        for (int y : v.y) out << " " << y;
        out << "\n";
    }
    out << "# wall_time " << r.wall_seconds << "\n";
}

}  // namespace cyclab
