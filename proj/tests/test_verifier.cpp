#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cyclab/conditions.hpp"
#include "cyclab/families.hpp"
#include "cyclab/verifier.hpp"
#include "naive.hpp"

using namespace cyclab;

TEST_CASE("arc bitmask encoding round-trips") {
    CHECK(arc_bit_count(2) == 2);
    CHECK(arc_bit_count(4) == 12);
    CHECK(arc_bit_count(5) == 20);

    naive::SplitMix64 rng(7);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + rng.below(5);
        Digraph d = naive::random_digraph(n, rng);
        ArcMask m = mask_from_digraph(d);
        Digraph back = digraph_from_mask(n, m);
        CHECK(back.arc_count() == d.arc_count());
        for (auto [u, v] : d.arcs()) CHECK(back.has_arc(u, v));
    }

    // empty and full masks
    Digraph empty(3);
    empty.freeze();
    CHECK(mask_to_hex(mask_from_digraph(empty)) == mask_to_hex(ArcMask{0}));
    CHECK(digraph_from_mask(4, mask_from_digraph(gen_k_star(4))).arc_count() == 12);
}

TEST_CASE("Y policy parsing") {
    CHECK(YPolicy::parse("all").kind == YPolicy::Kind::AllSubsets);
    CHECK(YPolicy::parse("V").kind == YPolicy::Kind::YEqualsV);
    YPolicy s = YPolicy::parse("sampled-6");
    CHECK(s.kind == YPolicy::Kind::SampledK);
    CHECK(s.k == 6);
    CHECK(YPolicy::parse(YPolicy::sampled(3).to_string()).k == 3);
    CHECK(YPolicy::all_subsets().to_string() == "all");
    CHECK_THROWS(YPolicy::parse("bogus"));
    CHECK_THROWS(YPolicy::parse("sampled-0"));
}

TEST_CASE("property registry") {
    auto names = property_names();
    for (const char* want :
         {"main-theorem", "manoussakis", "theorem-f", "lemma-3.1", "lemma-3.2", "lemma-3.5",
          "lemma-3.7", "lemma-3.8", "lemma-3.10", "lemma-3.11", "conjecture-i", "conjecture-ii",
          "conjecture-iii"}) {
        CAPTURE(want);
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
        CHECK(property_exists(want));
    }
    CHECK_FALSE(property_exists("lemma-9.9"));
    CHECK(property_is_open("conjecture-i"));
    CHECK(property_is_open("conjecture-iii"));
    CHECK_FALSE(property_is_open("main-theorem"));
}

TEST_CASE("exhaustive scan covers the whole instance space") {
    ScanReport r = exhaustive_scan(3, "manoussakis", YPolicy::y_equals_v());
    CHECK(r.examined == 64);  // 2^(3*2)
    CHECK(r.violations.empty());
    CHECK(r.hypothesis_hits == 0);  // the theorem starts at order 4
    CHECK(r.n == 3);
    CHECK(r.property == "manoussakis");

    CHECK_THROWS(exhaustive_scan(6, "manoussakis", YPolicy::y_equals_v()));
    CHECK_THROWS(exhaustive_scan(4, "no-such-prop", YPolicy::y_equals_v()));
}

TEST_CASE("manoussakis holds exhaustively at order 4") {
    ScanReport r = exhaustive_scan(4, "manoussakis", YPolicy::y_equals_v());
    CHECK(r.examined == 4096);
    CHECK(r.violations.empty());
}

TEST_CASE("main theorem holds for all Y subsets at order 4") {
    ScanReport r = exhaustive_scan(4, "main-theorem", YPolicy::all_subsets());
    CHECK(r.examined == 4096);
    CHECK(r.violations.empty());
    CHECK(r.hypothesis_hits > 0);
}

TEST_CASE("lemma suites are clean at order 4") {
    for (const char* prop : {"lemma-3.1", "lemma-3.2", "lemma-3.5", "lemma-3.7", "lemma-3.8",
                             "lemma-3.10", "lemma-3.11"}) {
        CAPTURE(prop);
        ScanReport r = exhaustive_scan(4, prop, YPolicy::y_equals_v());
        CHECK(r.examined == 4096);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("merged report does not depend on the worker count") {
    for (const char* prop : {"manoussakis", "main-theorem"}) {
        ScanReport one = exhaustive_scan(4, prop, YPolicy::sampled(3), 42, 1);
        ScanReport four = exhaustive_scan(4, prop, YPolicy::sampled(3), 42, 4);
        CHECK(one.examined == four.examined);
        CHECK(one.hypothesis_hits == four.hypothesis_hits);
        CHECK(one.violations.size() == four.violations.size());
    }
}

TEST_CASE("random scans are deterministic in the seed") {
    ScanReport a = random_scan(6, 500, 99, "main-theorem", YPolicy::sampled(3));
    ScanReport b = random_scan(6, 500, 99, "main-theorem", YPolicy::sampled(3));
    CHECK(a.examined == 500);
    CHECK(a.hypothesis_hits == b.hypothesis_hits);
    CHECK(a.violations.size() == b.violations.size());
    CHECK(a.seed == 99);
    CHECK(a.seeded);

    ScanReport c = random_scan(6, 500, 99, "main-theorem", YPolicy::sampled(3), 0.5, 2);
    CHECK(c.hypothesis_hits == a.hypothesis_hits);  // worker-count invariant

    CHECK(a.violations.empty());  // the theorem holds
}

TEST_CASE("theorem-f random scan is clean") {
    ScanReport r = random_scan(7, 2000, 1234, "theorem-f", YPolicy::sampled(3));
    CHECK(r.violations.empty());
    CHECK(r.hypothesis_hits > 0);
}

TEST_CASE("conjecture scans record but never assert") {
    ScanReport r = conjecture_scan(5, "i", 300, 2024);
    CHECK(r.property_is_open);
    CHECK(r.examined == 300);
    // the conjecture is open: whatever was found is a candidate, not an error
    CHECK_THROWS(conjecture_scan(5, "iv", 10, 0));
}

TEST_CASE("sharpness instances never qualify for conjecture variant i") {
    // 2-strong is part of variant i's hypothesis and x is a cut vertex
    // separating {y} from the rest once its clique is bypassed
    for (auto [n, m] : {std::pair{6, 2}, {8, 3}, {10, 4}}) {
        auto inst = gen_remark1(n, m);
        CHECK_FALSE(is_2_strong(inst.digraph));
    }
}

TEST_CASE("scan report serialization") {
    ScanReport r = exhaustive_scan(3, "manoussakis", YPolicy::y_equals_v());
    std::ostringstream os;
    write_scan_report(os, r);
    std::string text = os.str();
    CHECK(text.find("scan manoussakis n=3 policy=V") != std::string::npos);
    CHECK(text.find("examined 64") != std::string::npos);
    CHECK(text.find("violations 0") != std::string::npos);
    CHECK(text.find("hits ") != std::string::npos);
}
