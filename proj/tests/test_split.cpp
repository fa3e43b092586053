#include "unisplit/split.hpp"

#include "unisplit/dp.hpp"
#include "unisplit/errors.hpp"
#include "unisplit/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace unisplit;
using namespace unisplit::split;
using testutil::make_inst;

TEST_CASE("interval_to_split appends copies of the longest job") {
    Instance inst = make_inst({2, 2, 2}, {1, 1, 1});
    CHECK(interval_to_split(inst, 0).jobs == inst.jobs);

    Instance plus = interval_to_split(inst, 1);
    CHECK(plus.jobs == std::vector<Int>{2, 2, 2, 2});  // A*M = 2

    Instance skew = interval_to_split(make_inst({6, 1, 1}, {1, 1, 1}), 1);
    CHECK(skew.jobs == std::vector<Int>{6, 1, 1, 6});

    CHECK_THROWS_AS(interval_to_split(make_inst({4}, {2, 1}), 1), input_error);
}

TEST_CASE("interval_to_split round trip through the oracles") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 60; ++round) {
        Instance inst = testutil::random_instance(rng, 2, 6, 3, 4, 12, true);
        const Int d(round % 3);
        Instance gadget = interval_to_split(inst, d);
        bool interval_yes = oracle::oracle_decide_interval(inst, Rational(d));
        Rational with_splits =
            oracle::oracle_minmax_split(gadget, static_cast<int>(d.convert_to<long>())).makespan;
        CHECK(interval_yes == (with_splits == gadget.perfect_time));
    }
}

TEST_CASE("split_to_interval formula") {
    Instance inst = make_inst({22, 7, 4, 3}, {2, 1, 1});
    auto [reduced, d] = split_to_interval(inst, 1, 0);
    CHECK(reduced.jobs == std::vector<Int>{7, 4, 3});
    CHECK(reduced.perfect_time == Rational(14, 4));
    CHECK(reduced.max_share == Rational(7, 4));
    CHECK(d == Rational(22, 7));

    auto [same, d0] = split_to_interval(inst, 0, Rational(1, 2));
    CHECK(same.jobs == inst.jobs);
    CHECK(d0 == Rational(1, 2) * inst.perfect_time / inst.max_share);  // t*S/M

    CHECK_THROWS_AS(split_to_interval(inst, 4, 0), input_error);  // s = m
}

TEST_CASE("split_to_interval equivalence against the oracles") {
    std::mt19937_64 rng(71);
    const Rational ts[] = {Rational(0), Rational(1, 7), Rational(1, 2)};
    for (int round = 0; round < 60; ++round) {
        Instance inst = testutil::random_instance(rng, 3, 7, 3, 3, 15, round % 2 == 0);
        const int s = 1 + static_cast<int>(rng() % 2);
        if (s >= inst.job_count()) {
            continue;
        }
        const Rational& t = ts[round % 3];
        auto [reduced, d] = split_to_interval(inst, s, t);
        CHECK(d >= s);
        bool left = oracle::oracle_minmax_split(inst, s).makespan <=
                    (Rational(1) + t) * inst.perfect_time;
        bool right = oracle::oracle_decide_interval(reduced, d);
        CHECK(left == right);
    }
}

TEST_CASE("decide_split on the worked example") {
    Instance inst = make_inst({22, 7, 4, 3}, {2, 1, 1});
    interval::Decision dec = decide_split(inst, 1, 0);
    REQUIRE(dec.yes);
    PartitionView view = evaluate(inst, *dec.witness);
    CHECK(view.makespan == Rational(9));
    CHECK(view.split_jobs <= 1);

    CHECK(decide_split(inst, 1, Rational(1, 3)).yes);  // monotone in t
}

TEST_CASE("decide_split refuses and accepts the right regimes") {
    Instance inst = make_inst({6, 1, 1, 6}, {1, 1, 1});
    CHECK_FALSE(decide_split(inst, 1, 0).yes);

    Instance two = make_inst({3, 3, 3}, {1, 1});
    CHECK(decide_split(two, 1, 0).yes);  // line-cut with one split
    CHECK_THROWS_AS(decide_split(two, 0, 0), regime_error);
    CHECK_FALSE(decide_split(two, 0, Rational(1, 10)).yes);
    CHECK(decide_split(two, 0, Rational(1, 3)).yes);

    Instance five = make_inst({9, 9, 9, 9, 9, 9}, {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(decide_split(five, 2, 0), regime_error);  // s < n-2

    Instance one = make_inst({5, 4}, {3});
    CHECK(decide_split(one, 0, 0).yes);  // single machine sits at S
}

TEST_CASE("decide_split witnesses stay within budget and cap") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 80; ++round) {
        Instance inst = testutil::random_instance(rng, 3, 8, 3, 3, 20, round % 2 == 0);
        const int s = 1 + static_cast<int>(rng() % 2);
        const Rational t(rng() % 3, 5);
        interval::Decision dec = decide_split(inst, s, t);
        bool expected = oracle::oracle_minmax_split(inst, s).makespan <=
                        (Rational(1) + t) * inst.perfect_time;
        CHECK(dec.yes == expected);
        if (dec.yes) {
            PartitionView view = evaluate(inst, *dec.witness);
            CHECK(view.makespan <= (Rational(1) + t) * inst.perfect_time);
            CHECK(view.split_jobs <= s);
        }
    }
}

TEST_CASE("solve_split golden values") {
    Instance inst = make_inst({22, 7, 4, 3}, {2, 1, 1});
    CHECK(solve_split(inst, 0).makespan == Rational(11));
    SolveResult one = solve_split(inst, 1);
    CHECK(one.makespan == Rational(9));
    CHECK(one.split_jobs_used <= 1);
    CHECK(solve_split(inst, 2).makespan == Rational(9));  // cannot beat S

    Instance triple = make_inst({5, 5, 5, 3}, {1, 1, 1});
    CHECK(solve_split(triple, 1).makespan == Rational(6));
}

TEST_CASE("solve_split matches the oracle and the candidate-value form") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 60; ++round) {
        Instance inst = testutil::random_instance(rng, 3, 8, 3, 3, 20, round % 2 == 0);
        Rational previous;
        for (int s = 1; s <= 2; ++s) {
            SolveResult sol = solve_split(inst, s);
            CHECK(sol.makespan == oracle::oracle_minmax_split(inst, s).makespan);
            CHECK(sol.split_jobs_used <= s);
            CHECK(evaluate(inst, sol.assignment).makespan == sol.makespan);
            if (s > 1) {
                CHECK(sol.makespan <= previous);  // monotone in s
            }
            previous = sol.makespan;

            // OPT is S or q/r_i with q an integer
            bool member = sol.makespan == inst.perfect_time;
            for (const Int& r : inst.speeds) {
                member = member || denominator(sol.makespan * Rational(r)) == 1;
            }
            CHECK(member);
        }
        CHECK(solve_split(inst, inst.machine_count() - 1).makespan == inst.perfect_time);
    }
}

TEST_CASE("fptas_split bounds and degenerate cases") {
    Instance inst = make_inst({22, 7, 4, 3}, {2, 1, 1});
    SolveResult approx = fptas_split(inst, 1, Rational(1, 10));
    CHECK(approx.makespan >= Rational(9));
    CHECK(approx.makespan <= Rational(99, 10));
    CHECK(approx.split_jobs_used <= 1);

    // s >= n-1 yields a perfect partition outright
    SolveResult perfect = fptas_split(inst, 2, Rational(1, 10));
    CHECK(perfect.makespan == inst.perfect_time);

    // s = 0 coincides with the plain makespan fptas
    SolveResult none = fptas_split(inst, 0, Rational(1, 10));
    dp::DpOutcome plain = dp::fptas_uniminmax(inst, Rational(1, 10));
    CHECK(none.makespan == plain.objective);

    CHECK_THROWS_AS(fptas_split(inst, 1, Rational(0)), input_error);
}

TEST_CASE("fptas_split honors the approximation contract") {
    std::mt19937_64 rng(83);
    const Rational eps[] = {Rational(1, 2), Rational(1, 10)};
    for (int round = 0; round < 60; ++round) {
        Instance inst = testutil::random_instance(rng, 2, 8, 2, 4, 25, false);
        const int s = static_cast<int>(rng() % (inst.job_count() + 1));
        Rational opt = oracle::oracle_minmax_split(inst, s).makespan;
        for (const Rational& e : eps) {
            SolveResult sol = fptas_split(inst, s, e);
            CHECK(sol.makespan >= opt);
            CHECK(sol.makespan <= (Rational(1) + e) * opt);
            PartitionView view = evaluate(inst, sol.assignment);
            CHECK(view.makespan == sol.makespan);
            CHECK(view.split_jobs <= s);
        }
    }
}
