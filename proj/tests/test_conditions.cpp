#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclab/conditions.hpp"
#include "cyclab/families.hpp"
#include "naive.hpp"

using namespace cyclab;

namespace {

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    d.freeze();
    return d;
}

}  // namespace

TEST_CASE("strong connectivity") {
    CHECK(is_strong(directed_cycle(4)));
    CHECK(is_strong(gen_k_star(3)));

    Digraph path(3);
    path.add_arc(0, 1);
    path.add_arc(1, 2);
    path.freeze();
    CHECK_FALSE(is_strong(path));

    Digraph one(1);
    one.freeze();
    CHECK(is_strong(one));  // single vertex reaches itself
}

TEST_CASE("2-strong") {
    CHECK(is_2_strong(gen_k_star(4)));
    CHECK_FALSE(is_2_strong(directed_cycle(4)));  // any deletion leaves a path
    CHECK(is_2_strong(gen_d6()));

    // two triangles sharing only the cut vertex 0
    Digraph cut(5);
    cut.add_arc(0, 1);
    cut.add_arc(1, 2);
    cut.add_arc(2, 0);
    cut.add_arc(0, 3);
    cut.add_arc(3, 4);
    cut.add_arc(4, 0);
    cut.freeze();
    CHECK(is_strong(cut));
    CHECK_FALSE(is_2_strong(cut));

    Digraph two(2);
    two.add_arc(0, 1);
    two.add_arc(1, 0);
    two.freeze();
    CHECK_THROWS_AS(is_2_strong(two), std::invalid_argument);
}

TEST_CASE("S-strong connectivity") {
    // 0 <-> 1 strongly, 2 only reachable, never reaches back
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(0, 2);
    d.freeze();
    CHECK(is_S_strong(d, Bitset::of(3, {0, 1})));
    CHECK_FALSE(is_S_strong(d, Bitset::of(3, {0, 2})));
    CHECK(is_S_strong(d, Bitset::of(3, {2})));  // singleton is trivially fine
    CHECK_THROWS_AS(is_S_strong(d, Bitset(3)), std::invalid_argument);

    // S-vertices may travel through non-S vertices
    Digraph relay(3);
    relay.add_arc(0, 2);
    relay.add_arc(2, 1);
    relay.add_arc(1, 0);
    relay.freeze();
    CHECK(is_S_strong(relay, Bitset::of(3, {0, 1})));
}

TEST_CASE("A0 holds vacuously when all pairs are adjacent") {
    A0Report r = check_A0(gen_k_star(5), Bitset::full(5));
    CHECK(r.holds);
    CHECK(r.violation_count == 0);
}

TEST_CASE("A0 fails on the directed 4-cycle with the expected margin") {
    // opposite vertices are nonadjacent; every degree is 2, so the triple
    // sum is 2+2+1+1 = 6 against the bound 3*4-2 = 10
    A0Report r = check_A0(directed_cycle(4), Bitset::full(4));
    CHECK_FALSE(r.holds);
    REQUIRE(!r.violations.empty());
    for (const auto& v : r.violations) {
        CHECK(v.rhs == 10);
        CHECK(v.lhs == 6);
    }
}

TEST_CASE("A0 restricted to Y ignores outside vertices") {
    // 0 and 2 nonadjacent, but Y = {0,1} has no nonadjacent pair
    Digraph d = directed_cycle(4);
    CHECK(check_A0(d, Bitset::of(4, {0, 1})).holds);
    CHECK_FALSE(check_A0(d, Bitset::of(4, {0, 1, 2})).holds);
}

TEST_CASE("A0 and Y-strong hold on the sharpness instance") {
    auto inst = gen_remark1(10, 4);
    CHECK(is_S_strong(inst.digraph, inst.y));
    CHECK(check_A0(inst.digraph, inst.y).holds);
}

TEST_CASE("sharpness instance degree identity") {
    // d(y) + d(z) + d-(y) + d+(x) = 4n - m - 6
    for (int n = 6; n <= 14; ++n) {
        for (int m = 2; m <= n - 4; ++m) {
            auto inst = gen_remark1(n, m);
            const Digraph& d = inst.digraph;
            int sum = d.degree(inst.yv) + d.degree(inst.z) + d.in_degree(inst.yv) +
                      d.out_degree(inst.x);
            CHECK(sum == 4 * n - m - 6);
        }
    }
}

TEST_CASE("meyniel set check") {
    CHECK(check_meyniel_set(gen_k_star(4), Bitset::full(4)).holds);  // vacuous

    MeynielReport r = check_meyniel_set(directed_cycle(4), Bitset::full(4));
    CHECK_FALSE(r.holds);
    CHECK(r.violation_count == 2);  // {0,2} and {1,3}
    for (const auto& v : r.violations) CHECK(v.degree_sum == 4);

    // adding both diagonals as 2-cycles fixes it
    Digraph d(4);
    for (int i = 0; i < 4; ++i) d.add_arc(i, (i + 1) % 4);
    d.add_arc(0, 2);
    d.add_arc(2, 0);
    d.add_arc(1, 3);
    d.add_arc(3, 1);
    d.freeze();
    CHECK(check_meyniel_set(d, Bitset::full(4)).holds);  // vacuous again
}

TEST_CASE("meyniel restricted to M only inspects M pairs") {
    MeynielReport r = check_meyniel_set(directed_cycle(4), Bitset::of(4, {0, 2}));
    CHECK_FALSE(r.holds);
    CHECK(r.violation_count == 1);
    CHECK(check_meyniel_set(directed_cycle(4), Bitset::of(4, {0, 1})).holds);
}

TEST_CASE("two nonadjacent partners consequence of A0") {
    CHECK_THROWS_AS(lemma37_holds(directed_cycle(4), Bitset::full(4)),
                    ConditionNotMet);  // A0 precondition fails
    CHECK(lemma37_holds(gen_k_star(5), Bitset::full(5)));
    auto inst = gen_remark1(10, 4);
    CHECK(lemma37_holds(inst.digraph, inst.y));
}

TEST_CASE("A0 on random digraphs matches a literal transcription") {
    naive::SplitMix64 rng(77);
    for (int t = 0; t < 300; ++t) {
        int n = 3 + rng.below(3);
        Digraph d = naive::random_digraph(n, rng);
        Bitset y = naive::random_subset(n, 3, rng);
        bool expect = true;
        for (int x : y.members()) {
            for (int yy : y.members()) {
                if (x == yy || d.adjacent(x, yy)) continue;
                for (int z : y.members()) {
                    if (z == x || z == yy) continue;
                    int base = d.degree(x) + d.degree(yy);
                    if (!d.has_arc(x, z) &&
                        base + d.out_degree(x) + d.in_degree(z) < 3 * n - 2)
                        expect = false;
                    if (!d.has_arc(z, x) &&
                        base + d.in_degree(x) + d.out_degree(z) < 3 * n - 2)
                        expect = false;
                }
            }
        }
        CHECK(check_A0(d, y).holds == expect);
    }
}
