#include "unisplit/gen.hpp"

#include "unisplit/errors.hpp"
#include "unisplit/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace unisplit;
using namespace unisplit::gen;

TEST_CASE("gen_random is deterministic per seed") {
    GenSpec spec;
    spec.dist = Distribution::uniform;
    spec.m = 13;
    spec.bits = 16;
    spec.n = 4;
    spec.seed = 42;
    Instance a = gen_random(spec);
    Instance b = gen_random(spec);
    CHECK(a.jobs == b.jobs);
    CHECK(a.machine_count() == 4);
    CHECK(a.identical_speeds());

    spec.seed = 43;
    CHECK(gen_random(spec).jobs != a.jobs);
}

TEST_CASE("uniform draws respect the ratio window") {
    GenSpec spec;
    spec.dist = Distribution::uniform;
    spec.ratio = parse_rational("0.99");
    spec.m = 10000;
    spec.bits = 16;
    spec.n = 1;
    spec.seed = 7;
    Instance inst = gen_random(spec);
    const Int low = ceil_rat(spec.ratio * Rational(65535));
    for (const Int& x : inst.jobs) {
        CHECK(x >= low);
        CHECK(x <= 65535);
    }

    spec.ratio = 0;
    spec.m = 2000;
    spec.bits = 4;  // tiny range makes zero re-rolls likely
    Instance small = gen_random(spec);
    for (const Int& x : small.jobs) {
        CHECK(x >= 1);
        CHECK(x <= 15);
    }
}

TEST_CASE("exponential draws are positive and deterministic") {
    GenSpec spec;
    spec.dist = Distribution::exponential;
    spec.m = 1000;
    spec.bits = 16;
    spec.n = 2;
    spec.seed = 11;
    Instance a = gen_random(spec);
    Instance b = gen_random(spec);
    CHECK(a.jobs == b.jobs);
    for (const Int& x : a.jobs) {
        CHECK(x >= 1);
    }
}

TEST_CASE("generator rejects bad specs") {
    GenSpec spec;
    spec.m = 0;
    CHECK_THROWS_AS(gen_random(spec), input_error);
    spec.m = 3;
    spec.ratio = 1;
    CHECK_THROWS_AS(gen_random(spec), input_error);
}

TEST_CASE("gadget soundness on hand-picked lists") {
    SUBCASE("partitionable list gives a d-possible gadget") {
        GadgetResult res = gen_hard_gadget({1, 2, 3, 4}, 3, Rational(1, 2));
        REQUIRE(res.kind == GadgetResult::Kind::instance);
        CHECK(oracle::oracle_decide_interval(*res.instance, Rational(1, 2)));
    }
    SUBCASE("oversized entry short-circuits to no") {
        GadgetResult res = gen_hard_gadget({1, 1, 1, 5}, 3, Rational(1, 2));
        CHECK(res.kind == GadgetResult::Kind::trivially_no);
        CHECK_FALSE(testutil::brute_eq_card_partition({1, 1, 1, 5}));
    }
    SUBCASE("odd total cannot partition; the gadget agrees") {
        GadgetResult res = gen_hard_gadget({1, 2, 3, 5}, 3, Rational(1, 2));
        REQUIRE(res.kind == GadgetResult::Kind::instance);
        CHECK_FALSE(oracle::oracle_decide_interval(*res.instance, Rational(1, 2)));
    }
    SUBCASE("two equal entries answer yes directly") {
        CHECK(gen_hard_gadget({4, 4}, 3, Rational(1, 2)).kind ==
              GadgetResult::Kind::trivially_yes);
        CHECK(gen_hard_gadget({4, 5}, 3, Rational(1, 2)).kind ==
              GadgetResult::Kind::trivially_no);
    }
    SUBCASE("regime check") {
        CHECK_THROWS_AS(gen_hard_gadget({1, 2, 3, 4}, 3, Rational(1)), input_error);
        CHECK_THROWS_AS(gen_hard_gadget({1, 2, 3}, 3, Rational(1, 2)), input_error);
    }
}

TEST_CASE("gadget equivalence on random even lists") {
    std::mt19937_64 rng(127);
    const Rational ds[] = {Rational(1, 2), Rational(3, 4)};
    for (int round = 0; round < 40; ++round) {
        const int half = 2 + static_cast<int>(rng() % 2);  // m' in {2,3}
        std::vector<Int> list;
        for (int j = 0; j < 2 * half; ++j) {
            list.emplace_back(1 + rng() % 12);
        }
        const Rational& d = ds[round % 2];
        GadgetResult res = gen_hard_gadget(list, 3, d);
        bool expected = testutil::brute_eq_card_partition(list);
        if (res.kind == GadgetResult::Kind::trivially_no) {
            CHECK_FALSE(expected);
            continue;
        }
        REQUIRE(res.kind == GadgetResult::Kind::instance);
        CHECK(oracle::oracle_decide_interval(*res.instance, d) == expected);
    }
}
