#include "cyclab/oracle.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cyclab/errors.hpp"

namespace cyclab {

namespace {

struct AnchorBest {
    int ycount = -1;
    int length = 0;
};

std::uint32_t to_word(const Bitset& s) {
    std::uint32_t w = 0;
    for (int v : s.members()) w |= std::uint32_t(1) << v;
    return w;
}

// Path DP anchored at `a`: dp[mask] = set of possible final vertices of a
// simple path that starts at a and uses exactly the vertices in mask, all
// of them > a except a itself.
std::vector<std::uint16_t> path_dp(const std::vector<std::uint32_t>& out, int n, int a) {
    std::uint32_t allowed = 0;
    for (int v = a; v < n; ++v) allowed |= std::uint32_t(1) << v;
    std::vector<std::uint16_t> dp(std::size_t(1) << n, 0);
    dp[std::uint32_t(1) << a] = std::uint16_t(1) << a;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        if (!(mask & (std::uint32_t(1) << a)) || (mask & ~allowed)) continue;
        std::uint16_t lasts = dp[mask];
        while (lasts) {
            int last = std::countr_zero(lasts);
            lasts &= std::uint16_t(lasts - 1);
            std::uint32_t nexts = out[last] & allowed & ~mask;
            while (nexts) {
                int w = std::countr_zero(nexts);
                nexts &= nexts - 1;
                dp[mask | (std::uint32_t(1) << w)] |= std::uint16_t(1) << w;
            }
        }
    }
    return dp;
}

// Best (max Y-count, then min length) closed cycle for one anchor.
AnchorBest anchor_best(const std::vector<std::uint16_t>& dp,
                       const std::vector<std::uint32_t>& out, int n, int a,
                       std::uint32_t ymask) {
    AnchorBest best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint16_t lasts = dp[mask];
        if (!lasts) continue;
        int len = std::popcount(mask);
        if (len < 2) continue;
        int yc = std::popcount(mask & ymask);
        std::uint16_t closers = 0;
        std::uint16_t ls = lasts;
        while (ls) {
            int last = std::countr_zero(ls);
            ls &= std::uint16_t(ls - 1);
            if (out[last] & (std::uint32_t(1) << a)) closers |= std::uint16_t(1) << last;
        }
        if (!closers) continue;
        if (yc > best.ycount || (yc == best.ycount && len < best.length)) {
            best.ycount = yc;
            best.length = len;
        }
    }
    return best;
}

class Reconstructor {
public:
    Reconstructor(const std::vector<std::uint16_t>& dp, const std::vector<std::uint32_t>& out,
                  int a, std::uint32_t ymask, int target_len, int target_y)
        : dp_(dp), out_(out), a_(a), ymask_(ymask), len_(target_len), y_(target_y) {}

    std::vector<int> run() {
        std::vector<int> seq{a_};
        std::uint32_t mask = std::uint32_t(1) << a_;
        int last = a_;
        while (std::popcount(mask) < len_) {
            bool stepped = false;
            std::uint32_t nexts = out_[last] & ~mask;
            while (nexts) {
                int w = std::countr_zero(nexts);
                nexts &= nexts - 1;
                std::uint32_t m2 = mask | (std::uint32_t(1) << w);
                if ((dp_[m2] & (std::uint16_t(1) << w)) && feasible(m2, w)) {
                    seq.push_back(w);
                    mask = m2;
                    last = w;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw std::logic_error("oracle: reconstruction dead end");
        }
        return seq;
    }

private:
    bool feasible(std::uint32_t mask, int last) {
        int len = std::popcount(mask);
        if (len == len_)
            return std::popcount(mask & ymask_) == y_ &&
                   (out_[last] & (std::uint32_t(1) << a_));
        if (std::popcount(mask & ymask_) + (len_ - len) < y_) return false;
        std::uint32_t key = mask * 16u + std::uint32_t(last);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool ok = false;
        std::uint32_t nexts = out_[last] & ~mask;
        while (nexts && !ok) {
            int w = std::countr_zero(nexts);
            nexts &= nexts - 1;
            std::uint32_t m2 = mask | (std::uint32_t(1) << w);
            if (dp_[m2] & (std::uint16_t(1) << w)) ok = feasible(m2, w);
        }
        memo_[key] = ok;
        return ok;
    }

    const std::vector<std::uint16_t>& dp_;
    const std::vector<std::uint32_t>& out_;
    int a_;
    std::uint32_t ymask_;
    int len_, y_;
    std::unordered_map<std::uint32_t, bool> memo_;
};

void check_inputs(const Digraph& d, const Bitset& y, int cap) {
    if (d.order() > cap) throw CapExceeded("oracle: order exceeds cap");
    if (y.size() != d.order()) throw std::invalid_argument("oracle: set size mismatch");
}

std::vector<std::uint32_t> out_words(const Digraph& d) {
    std::vector<std::uint32_t> out(d.order());
    for (int u = 0; u < d.order(); ++u) out[u] = to_word(d.out_neighbors(u));
    return out;
}

}  // namespace

int max_Y_length(const Digraph& d, const Bitset& y, int cap) {
    check_inputs(d, y, cap);
    const int n = d.order();
    auto out = out_words(d);
    std::uint32_t ymask = to_word(y);
    int best = 0;
    for (int a = 0; a < n; ++a) {
        auto dp = path_dp(out, n, a);
        AnchorBest ab = anchor_best(dp, out, n, a, ymask);
        if (ab.ycount > best) best = ab.ycount;
    }
    return best;
}

OracleResult max_Y_cycle(const Digraph& d, const Bitset& y, int cap) {
    check_inputs(d, y, cap);
    const int n = d.order();
    auto out = out_words(d);
    std::uint32_t ymask = to_word(y);

    int best_y = -1, best_len = 0, best_anchor = -1;
    for (int a = 0; a < n; ++a) {
        auto dp = path_dp(out, n, a);
        AnchorBest ab = anchor_best(dp, out, n, a, ymask);
        if (ab.ycount < 0) continue;
        // smaller anchor wins ties: the normalized sequence starts with it
        if (ab.ycount > best_y || (ab.ycount == best_y && ab.length < best_len)) {
            best_y = ab.ycount;
            best_len = ab.length;
            best_anchor = a;
        }
    }

    OracleResult res;
    res.exhausted = true;
    if (best_anchor < 0) return res;  // acyclic
    res.max_y_length = best_y;

    auto dp = path_dp(out, n, best_anchor);
    Reconstructor rec(dp, out, best_anchor, ymask, best_len, best_y);
    res.best_cycle = Cycle(d, rec.run());
    return res;
}

bool is_hamiltonian(const Digraph& d, int cap) {
    return max_Y_length(d, Bitset::full(d.order()), cap) == d.order();
}

bool is_cyclable(const Digraph& d, const Bitset& s, int cap) {
    if (s.none()) throw std::invalid_argument("is_cyclable: S must be nonempty");
    return max_Y_length(d, s, cap) == s.count();
}

}  // namespace cyclab
