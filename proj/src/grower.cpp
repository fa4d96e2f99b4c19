#include "cyclab/grower.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cyclab/conditions.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/insertion.hpp"

namespace cyclab {

const char* to_string(GrowStatus s) {
    switch (s) {
        case GrowStatus::Ok: return "ok";
        case GrowStatus::HypothesisUnmet: return "hypothesis-unmet";
        case GrowStatus::TheoremViolation: return "theorem-violation";
    }
    return "?";
}

void write_certificate(std::ostream& out, const Certificate& c) {
    out << "status " << to_string(c.status) << "\n";
    if (c.cycle) {
        out << "cycle";
        for (int v : c.cycle->vertices()) out << " " << v;
        out << "\n";
    }
    out << "omitted ";
    if (c.omitted)
        out << *c.omitted;
    else
        out << "none";
    out << "\n";
    for (const auto& t : c.trace) out << "trace " << t << "\n";
}

namespace {

std::string seq_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// Shortest cycle through a single vertex, via BFS back to it.
std::optional<Cycle> shortest_cycle_through(const Digraph& d, int v) {
    const int n = d.order();
    std::vector<int> parent(n, -2);
    std::vector<int> queue;
    for (int w : d.out_neighbors(v).members()) {
        if (parent[w] == -2) {
            parent[w] = v;
            queue.push_back(w);
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        if (d.has_arc(u, v)) {
            std::vector<int> rev;
            for (int cur = u; cur != v; cur = parent[cur]) rev.push_back(cur);
            rev.push_back(v);
            std::reverse(rev.begin(), rev.end());
            return Cycle(d, rev);
        }
        for (int w : d.out_neighbors(u).members()) {
            if (w != v && parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

// DFS for a simple cycle of exactly `len` vertices through s and t,
// anchored at s, branches in ascending vertex order.
class PairCycleSearch {
public:
    PairCycleSearch(const Digraph& d, int s, int t, int len)
        : d_(d), s_(s), t_(t), len_(len), used_(d.order()) {}

    std::optional<Cycle> run() {
        seq_ = {s_};
        used_.set(s_);
        if (step(s_)) return Cycle(d_, seq_);
        return std::nullopt;
    }

private:
    bool step(int cur) {
        if (int(seq_.size()) == len_) return used_.test(t_) && d_.has_arc(cur, s_);
        if (!used_.test(t_) && int(seq_.size()) == len_ - 1) {
            // last slot must be t
            if (d_.has_arc(cur, t_) && d_.has_arc(t_, s_)) {
                seq_.push_back(t_);
                return true;
            }
            return false;
        }
        for (int w : d_.out_neighbors(cur).members()) {
            if (used_.test(w)) continue;
            used_.set(w);
            seq_.push_back(w);
            if (step(w)) return true;
            seq_.pop_back();
            used_.reset(w);
        }
        return false;
    }

    const Digraph& d_;
    int s_, t_, len_;
    Bitset used_;
    std::vector<int> seq_;
};

// Merge a bypass into the cycle: keep C[exit..entry], route through the
// bypass, and multi-insert whatever displaced Y-vertices still fit.
struct MergeResult {
    Cycle cycle;
    int reinserted = 0;
};

MergeResult merge_bypass(const Digraph& d, const Cycle& c, const Bypass& bp, const Bitset& y) {
    const int k = c.length();
    const int ei = c.index_of(bp.entry);

    std::vector<int> kept;
    for (int i = 0; i <= k - bp.gap; ++i) kept.push_back(c.at(ei + bp.gap + i));
    Path p(d, kept);  // exit ... entry along C

    int reinserted = 0;
    if (bp.gap >= 2) {
        std::vector<int> displaced;
        for (int i = 1; i < bp.gap; ++i) displaced.push_back(c.at(ei + i));
        Path q(d, displaced);
        Bitset s(d.order());
        for (int v : displaced) {
            if (!y.test(v)) continue;
            if (path_insert(d, p, Path(d, {v}))) s.set(v);
        }
        if (s.any()) {
            p = multi_insert(d, p, q, s);
            reinserted = s.count();
        }
    }

    std::vector<int> verts = p.vertices();
    for (int i = 1; i + 1 < bp.path.size(); ++i) verts.push_back(bp.path.at(i));
    return {Cycle(d, verts), reinserted};
}

}  // namespace

std::optional<Cycle> initial_cycle(const Digraph& d, const Bitset& y) {
    if (y.count() < 2) throw std::invalid_argument("initial_cycle: |Y| must be >= 2");
    auto ys = y.members();
    for (int len = 2; len <= d.order(); ++len) {
        for (std::size_t i = 0; i < ys.size(); ++i) {
            for (std::size_t j = i + 1; j < ys.size(); ++j) {
                PairCycleSearch search(d, ys[i], ys[j], len);
                if (auto c = search.run()) return c;
            }
        }
    }
    return std::nullopt;
}

Certificate grow(const Digraph& d, const Bitset& y, int budget, int oracle_cap) {
    if (y.size() != d.order()) throw std::invalid_argument("grow: set size mismatch");
    if (y.none()) throw std::invalid_argument("grow: Y must be nonempty");
    const int n = d.order();
    if (budget <= 0) budget = 10 * n;

    Certificate cert;
    cert.covered = Bitset(n);

    auto finish_cover = [&]() {
        if (cert.cycle) cert.covered = cert.cycle->vertex_set() & y;
        auto uncovered = [&] {
            std::vector<int> u;
            for (int v : y.members())
                if (!cert.covered.test(v)) u.push_back(v);
            return u;
        }();
        if (uncovered.size() == 1) cert.omitted = uncovered[0];
    };

    bool hyp = is_S_strong(d, y) && check_A0(d, y).holds;
    if (!hyp) {
        cert.status = GrowStatus::HypothesisUnmet;
        cert.trace.push_back("hypothesis-unmet Y-strong/A0 check failed");
        try {
            auto res = max_Y_cycle(d, y, oracle_cap);
            if (res.best_cycle) {
                cert.cycle = res.best_cycle;
                cert.trace.push_back("fallback oracle best-effort ylen=" +
                                     std::to_string(res.max_y_length));
            }
        } catch (const CapExceeded&) {
            cert.trace.push_back("inconclusive oracle-cap-exceeded");
        }
        finish_cover();
        return cert;
    }

    if (y.count() == 1) {
        // below the theorem's |Y| >= 2 floor; certificate stays total
        int v = y.first();
        if (auto c = shortest_cycle_through(d, v)) {
            cert.cycle = c;
            cert.trace.push_back("initial-cycle " + seq_to_string(c->vertices()));
        } else {
            cert.omitted = v;
            cert.trace.push_back("single-Y-vertex lies on no cycle; omitted");
        }
        cert.status = GrowStatus::Ok;
        finish_cover();
        return cert;
    }

    std::optional<Cycle> c = initial_cycle(d, y);
    if (c) cert.trace.push_back("initial-cycle " + seq_to_string(c->vertices()));

    if (c) {
        int ylen = c->vertex_set().and_count(y);
        // keep improving toward a full cover; the theorem only needs |Y|-1
        for (int iter = 0; iter < budget && ylen < y.count(); ++iter) {
            bool improved = false;
            for (int yu : y.members()) {
                if (c->contains(yu)) continue;
                auto bp = find_bypass(d, *c, yu);
                if (!bp) continue;
                MergeResult merged = merge_bypass(d, *c, *bp, y);
                int new_ylen = merged.cycle.vertex_set().and_count(y);
                if (new_ylen > ylen) {
                    c = merged.cycle;
                    ylen = new_ylen;
                    std::ostringstream os;
                    os << "bypass-merge y=" << yu << " gap=" << bp->gap
                       << " len=" << bp->path.length() << " ylen=" << ylen;
                    cert.trace.push_back(os.str());
                    if (merged.reinserted)
                        cert.trace.push_back("insertion displaced-Y=" +
                                             std::to_string(merged.reinserted));
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        cert.cycle = c;
    }

    int ylen = cert.cycle ? cert.cycle->vertex_set().and_count(y) : 0;
    if (ylen < y.count() - 1) {
        try {
            auto res = max_Y_cycle(d, y, oracle_cap);
            cert.trace.push_back("fallback oracle ylen=" + std::to_string(res.max_y_length));
            if (res.best_cycle && res.max_y_length > ylen) {
                cert.cycle = res.best_cycle;
                ylen = res.max_y_length;
            }
        } catch (const CapExceeded&) {
            cert.trace.push_back("inconclusive budget-exhausted oracle-cap-exceeded");
        }
    }

    cert.status = (ylen >= y.count() - 1) ? GrowStatus::Ok : GrowStatus::TheoremViolation;
    finish_cover();
    return cert;
}

}  // namespace cyclab
