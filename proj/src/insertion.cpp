#include "cyclab/insertion.hpp"

#include <algorithm>
#include <limits>

#include "cyclab/errors.hpp"

namespace cyclab {

namespace {

void require_disjoint(const Path& p, const Path& q, const char* who) {
    if (p.vertex_set().intersects(q.vertex_set()))
        throw std::invalid_argument(std::string(who) + ": paths must be vertex-disjoint");
}

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// BFS distances from `src` staying inside `allowed` (src itself need not be
// in `allowed`).
std::vector<int> bfs_dist(const Digraph& d, int src, const Bitset& allowed, bool backward) {
    std::vector<int> dist(d.order(), kInf);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        const Bitset& nb = backward ? d.in_neighbors(u) : d.out_neighbors(u);
        for (int v : nb.members()) {
            if (allowed.test(v) && dist[v] == kInf) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<InsertionPoint> path_insert(const Digraph& d, const Path& p, const Path& q) {
    require_disjoint(p, q, "path_insert");
    if (p.size() < 2) throw std::invalid_argument("path_insert: |P| must be >= 2");
    int head = q.front(), tail = q.back();
    for (int i = 0; i + 1 < p.size(); ++i)
        if (d.has_arc(p.at(i), head) && d.has_arc(tail, p.at(i + 1))) return InsertionPoint{i};
    return std::nullopt;
}

Path apply_insertion(const Digraph& d, const Path& p, const Path& q, InsertionPoint ip) {
    std::vector<int> verts;
    verts.reserve(p.size() + q.size());
    for (int i = 0; i < p.size(); ++i) {
        verts.push_back(p.at(i));
        if (i == ip.index)
            for (int j = 0; j < q.size(); ++j) verts.push_back(q.at(j));
    }
    return Path(d, verts);
}

std::vector<Cycle> cycle_absorb(const Digraph& d, const Cycle& c, const Path& q) {
    if (c.vertex_set().intersects(q.vertex_set()))
        throw std::invalid_argument("cycle_absorb: cycle and path must be disjoint");
    const int k = c.length();
    const int r = q.size();
    int sum = d.in_degree(q.front(), c.vertex_set()) + d.out_degree(q.back(), c.vertex_set());
    if (sum < k + 1)
        throw ConditionNotMet("cycle_absorb: d-(q1,C) + d+(qr,C) < k+1");

    std::vector<Cycle> out;
    out.reserve(k);
    for (int g = 1; g <= k; ++g) {
        bool found = false;
        for (int i = 0; i < k && !found; ++i) {
            if (d.has_arc(q.back(), c.at(i)) && d.has_arc(c.at(i + g - 1), q.front())) {
                std::vector<int> verts = q.vertices();
                for (int j = 0; j < g; ++j) verts.push_back(c.at(i + j));
                out.emplace_back(d, verts);
                found = true;
            }
        }
        if (!found)
            throw LemmaViolation("cycle_absorb: no cycle of length " + std::to_string(r + g) +
                                 " despite the degree hypothesis");
    }
    return out;
}

namespace {

// Backtracking core for multi_insert. Covers the S-indices of Q by
// disjoint runs Q[a..b], each assigned to a distinct arc of P it fits.
// Runs are tried longest-first; on failure the run is split/shifted.
class MultiInserter {
public:
    MultiInserter(const Digraph& d, const Path& p, const Path& q, std::vector<int> s_indices)
        : d_(d), p_(p), q_(q), s_(std::move(s_indices)), arc_of_run_(p.size() - 1, -1) {}

    bool solve() { return rec(0, 0); }

    Path build() const {
        std::vector<int> verts;
        for (int i = 0; i < p_.size(); ++i) {
            verts.push_back(p_.at(i));
            for (std::size_t r = 0; r < runs_.size(); ++r)
                if (arc_assign_[r] == i)
                    for (int j = runs_[r].first; j <= runs_[r].second; ++j)
                        verts.push_back(q_.at(j));
        }
        return Path(d_, verts);
    }

private:
    // next: index into s_ of the first uncovered S-vertex; min_start: the
    // earliest Q-index a new run may begin at (runs are disjoint, in order).
    bool rec(std::size_t next, int min_start) {
        if (next == s_.size()) return true;
        int target = s_[next];
        for (int start = target; start >= min_start; --start) {
            for (int end = q_.size() - 1; end >= target; --end) {
                for (int arc = 0; arc + 1 < p_.size(); ++arc) {
                    if (arc_of_run_[arc] >= 0) continue;
                    if (!d_.has_arc(p_.at(arc), q_.at(start)) ||
                        !d_.has_arc(q_.at(end), p_.at(arc + 1)))
                        continue;
                    runs_.emplace_back(start, end);
                    arc_assign_.push_back(arc);
                    arc_of_run_[arc] = int(runs_.size()) - 1;
                    std::size_t nx = next;
                    while (nx < s_.size() && s_[nx] <= end) ++nx;
                    if (rec(nx, end + 1)) return true;
                    arc_of_run_[arc] = -1;
                    arc_assign_.pop_back();
                    runs_.pop_back();
                }
            }
        }
        return false;
    }

    const Digraph& d_;
    const Path& p_;
    const Path& q_;
    std::vector<int> s_;
    std::vector<std::pair<int, int>> runs_;
    std::vector<int> arc_assign_;
    std::vector<int> arc_of_run_;
};

}  // namespace

Path multi_insert(const Digraph& d, const Path& p, const Path& q, const Bitset& s) {
    require_disjoint(p, q, "multi_insert");
    if (!s.is_subset_of(q.vertex_set()))
        throw std::invalid_argument("multi_insert: S must be a subset of V(Q)");
    if (s.none()) return p;
    if (p.size() < 2) throw std::invalid_argument("multi_insert: |P| must be >= 2");

    std::vector<int> s_indices;
    for (int j = 0; j < q.size(); ++j) {
        if (!s.test(q.at(j))) continue;
        Path singleton(d, {q.at(j)});
        if (!path_insert(d, p, singleton))
            throw std::invalid_argument("multi_insert: S-vertex not insertable into P");
        s_indices.push_back(j);
    }

    MultiInserter mi(d, p, q, std::move(s_indices));
    if (!mi.solve())
        throw LemmaViolation("multi_insert: construction failed despite per-vertex insertability");
    return mi.build();
}

std::vector<int> length2_paths(const Digraph& d, int x, int y) {
    if (x == y) throw std::invalid_argument("length2_paths: x and y must differ");
    if (d.has_arc(x, y)) throw std::invalid_argument("length2_paths: xy must not be an arc");
    return (d.out_neighbors(x) & d.in_neighbors(y)).members();
}

namespace {

// DFS for a simple (entry,exit)-path of exactly `len` arcs with interior in
// offC and passing through y, taking the lexicographically first branch.
class BypassSearch {
public:
    BypassSearch(const Digraph& d, const Bitset& offc, int y, int exit, int len)
        : d_(d), offc_(offc), y_(y), exit_(exit), len_(len),
          dist_to_exit_(bfs_dist(d, exit, offc, /*backward=*/true)),
          dist_to_y_(bfs_dist(d, y, offc, /*backward=*/true)),
          used_(d.order()) {}

    std::optional<std::vector<int>> from(int entry) {
        seq_ = {entry};
        used_ = Bitset(d_.order());
        return step(entry, len_) ? std::optional(seq_) : std::nullopt;
    }

private:
    // used_ tracks interior vertices currently on seq_. The entry and exit
    // live on C, so they can never be revisited through offC.
    bool step(int cur, int remaining) {
        if (remaining == 0) return cur == exit_ && used_.test(y_);
        // admissible lower bounds through the unrestricted off-C graph
        // (skip at the entry itself, which the BFS tables do not cover)
        if (offc_.test(cur)) {
            if (used_.test(y_)) {
                if (dist_to_exit_[cur] > remaining) return false;
            } else {
                if (dist_to_y_[cur] + dist_to_exit_[y_] > remaining) return false;
            }
        }
        for (int w : d_.out_neighbors(cur).members()) {
            if (remaining == 1) {
                if (w != exit_) continue;
            } else {
                if (!offc_.test(w) || used_.test(w)) continue;
                used_.set(w);
            }
            seq_.push_back(w);
            if (step(w, remaining - 1)) return true;
            seq_.pop_back();
            if (remaining > 1) used_.reset(w);
        }
        return false;
    }

    const Digraph& d_;
    const Bitset& offc_;
    int y_, exit_, len_;
    std::vector<int> dist_to_exit_, dist_to_y_;
    Bitset used_;
    std::vector<int> seq_;
};

}  // namespace

std::optional<Bypass> find_bypass(const Digraph& d, const Cycle& c, int y,
                                  std::optional<int> max_length) {
    if (c.contains(y)) throw std::invalid_argument("find_bypass: y lies on C");
    const int k = c.length();
    Bitset offc = c.vertex_set().complement();
    int cap = offc.count() + 1;  // longest possible bypass
    if (max_length) cap = std::min(cap, *max_length);

    for (int g = 1; g <= k - 1; ++g) {
        for (int len = 2; len <= cap; ++len) {
            std::optional<std::vector<int>> best;
            for (int ei = 0; ei < k; ++ei) {
                int entry = c.at(ei);
                int exit = c.at(ei + g);
                BypassSearch search(d, offc, y, exit, len);
                auto seq = search.from(entry);
                if (seq && (!best || *seq < *best)) best = seq;
            }
            if (best)
                return Bypass{Path(d, *best), best->front(), best->back(), g};
        }
    }
    return std::nullopt;
}

std::vector<Cycle> enumerate_cycles(const Digraph& d) {
    std::vector<Cycle> out;
    const int n = d.order();
    std::vector<int> seq;
    Bitset used(n);
    // anchor at the smallest vertex of each cycle
    auto dfs = [&](auto&& self, int anchor, int cur) -> void {
        for (int w : d.out_neighbors(cur).members()) {
            if (w == anchor && seq.size() >= 2) out.emplace_back(d, seq);
            if (w <= anchor || used.test(w)) continue;
            used.set(w);
            seq.push_back(w);
            self(self, anchor, w);
            seq.pop_back();
            used.reset(w);
        }
    };
    for (int a = 0; a < n; ++a) {
        seq = {a};
        used = Bitset(n);
        used.set(a);
        dfs(dfs, a, a);
    }
    return out;
}

std::vector<Path> enumerate_paths(const Digraph& d, const Bitset& allowed, int min_vertices) {
    std::vector<Path> out;
    std::vector<int> seq;
    Bitset used(d.order());
    auto dfs = [&](auto&& self, int cur) -> void {
        if (int(seq.size()) >= min_vertices) out.emplace_back(d, seq);
        for (int w : d.out_neighbors(cur).members()) {
            if (!allowed.test(w) || used.test(w)) continue;
            used.set(w);
            seq.push_back(w);
            self(self, w);
            seq.pop_back();
            used.reset(w);
        }
    };
    for (int s : allowed.members()) {
        seq = {s};
        used = Bitset(d.order());
        used.set(s);
        dfs(dfs, s);
    }
    return out;
}

}  // namespace cyclab
