#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclab/families.hpp"
#include "cyclab/oracle.hpp"
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

TEST_CASE("oracle basics") {
    Digraph c5 = directed_cycle(5);
    OracleResult r = max_Y_cycle(c5, Bitset::full(5));
    CHECK(r.max_y_length == 5);
    CHECK(r.exhausted);
    REQUIRE(r.best_cycle.has_value());
    CHECK(r.best_cycle->length() == 5);

    Digraph acyclic(3);
    acyclic.add_arc(0, 1);
    acyclic.add_arc(1, 2);
    acyclic.freeze();
    OracleResult a = max_Y_cycle(acyclic, Bitset::full(3));
    CHECK_FALSE(a.best_cycle.has_value());
    CHECK(a.max_y_length == 0);
}

TEST_CASE("oracle respects the cap") {
    Digraph big(15);
    big.add_arc(0, 1);
    big.freeze();
    CHECK_THROWS_AS(max_Y_cycle(big, Bitset::full(15)), CapExceeded);
    CHECK_THROWS_AS(max_Y_length(big, Bitset::full(15)), CapExceeded);
    CHECK_THROWS_AS(is_hamiltonian(big), CapExceeded);
    // a raised cap admits it
    CHECK_FALSE(is_hamiltonian(big, 15));
}

TEST_CASE("oracle ties break to shortest then lexicographically smallest") {
    // two triangles and a 2-cycle all through Y = {0}; the 2-cycle {0,1} wins
    Digraph d(4);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    d.add_arc(0, 3);
    d.add_arc(3, 1);
    d.freeze();
    OracleResult r = max_Y_cycle(d, Bitset::of(4, {0}));
    CHECK(r.max_y_length == 1);
    REQUIRE(r.best_cycle.has_value());
    CHECK(r.best_cycle->vertices() == std::vector<int>{0, 1});
}

TEST_CASE("oracle picks the Y-rich cycle over the long one") {
    // long cycle 0..4 misses Y = {5,6}; short cycle 5 <-> 6 covers it
    Digraph d(7);
    for (int i = 0; i < 5; ++i) d.add_arc(i, (i + 1) % 5);
    d.add_arc(5, 6);
    d.add_arc(6, 5);
    d.freeze();
    OracleResult r = max_Y_cycle(d, Bitset::of(7, {5, 6}));
    CHECK(r.max_y_length == 2);
    REQUIRE(r.best_cycle.has_value());
    CHECK(r.best_cycle->vertices() == std::vector<int>{5, 6});
}

TEST_CASE("hamiltonicity on fixtures") {
    CHECK(is_hamiltonian(gen_k_star(5)));
    CHECK(is_hamiltonian(directed_cycle(7)));
    CHECK_FALSE(is_hamiltonian(gen_d6()));

    Digraph p(3);
    p.add_arc(0, 1);
    p.add_arc(1, 2);
    p.freeze();
    CHECK_FALSE(is_hamiltonian(p));
}

TEST_CASE("maximum cycle length of the order-6 exceptions is 5") {
    for (const Digraph& d : {gen_d6(), gen_d6_prime()}) {
        int best_len = 0;
        OracleResult r = max_Y_cycle(d, Bitset::full(6));
        CHECK(r.max_y_length == 5);
        REQUIRE(r.best_cycle.has_value());
        best_len = r.best_cycle->length();
        CHECK(best_len == 5);
    }
}

TEST_CASE("is_cyclable") {
    Digraph d(5);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    d.add_arc(3, 4);
    d.add_arc(4, 3);
    d.freeze();
    CHECK(is_cyclable(d, Bitset::of(5, {0, 1, 2})));
    CHECK(is_cyclable(d, Bitset::of(5, {3, 4})));
    CHECK_FALSE(is_cyclable(d, Bitset::of(5, {0, 3})));
    CHECK_THROWS_AS(is_cyclable(d, Bitset(5)), std::invalid_argument);
}

TEST_CASE("the sharpness instance is not cyclable on its triple") {
    auto inst = gen_remark1(10, 4);
    CHECK_FALSE(is_cyclable(inst.digraph, inst.y));
    // dropping y or z leaves a cyclable pair; {y,z} stays uncyclable since
    // every crossing arc is incident to x
    for (int drop : {inst.yv, inst.z}) {
        Bitset s = inst.y;
        s.reset(drop);
        CHECK(is_cyclable(inst.digraph, s));
    }
    Bitset yz = inst.y;
    yz.reset(inst.x);
    CHECK_FALSE(is_cyclable(inst.digraph, yz));
}

TEST_CASE("oracle agrees with naive enumeration on random digraphs") {
    naive::SplitMix64 rng(97);
    for (int t = 0; t < 600; ++t) {
        int n = 2 + rng.below(5);
        Digraph d = naive::random_digraph(n, rng, 0.4);
        Bitset y = naive::random_subset(n, 1, rng);
        naive::BestCycle ref = naive::best_y_cycle(d, y);
        OracleResult r = max_Y_cycle(d, y);
        CHECK(r.max_y_length == ref.max_y_length);
        CHECK(max_Y_length(d, y) == ref.max_y_length);
        CHECK(r.best_cycle.has_value() == !ref.cycle.empty());
        if (r.best_cycle) CHECK(r.best_cycle->vertices() == ref.cycle);
    }
}

TEST_CASE("max_Y_length equals the witness's Y-count") {
    naive::SplitMix64 rng(131);
    for (int t = 0; t < 200; ++t) {
        Digraph d = naive::random_digraph(6, rng, 0.5);
        Bitset y = naive::random_subset(6, 1, rng);
        OracleResult r = max_Y_cycle(d, y);
        if (r.best_cycle) CHECK(r.best_cycle->vertex_set().and_count(y) == r.max_y_length);
    }
}
