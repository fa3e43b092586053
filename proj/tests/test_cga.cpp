#include "unisplit/cga.hpp"

#include "unisplit/errors.hpp"
#include "unisplit/oracle.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace unisplit;
using namespace unisplit::cga;
using testutil::make_inst;

namespace {

Int brute_minmax_load(const std::vector<Int>& jobs, int n) {
    Int best = -1;
    testutil::for_each_assignment(static_cast<int>(jobs.size()), n,
                                  [&](const std::vector<int>& a) {
                                      std::vector<Int> loads(n, Int(0));
                                      for (std::size_t j = 0; j < jobs.size(); ++j) {
                                          loads[a[j]] += jobs[j];
                                      }
                                      Int top = *std::max_element(loads.begin(), loads.end());
                                      if (best < 0 || top < best) {
                                          best = top;
                                      }
                                  });
    return best;
}

}  // namespace

TEST_CASE("cga_minmax small goldens") {
    CHECK(cga_minmax({4, 5, 6, 7, 8}, 2, {}).best_load == 15);
    CHECK(cga_minmax({4, 5, 6, 7, 9}, 2, {}).best_load == 16);
    CHECK(cga_minmax({22, 7, 4, 3}, 1, {}).best_load == 36);
}

TEST_CASE("cga_minmax equals brute force") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 60; ++round) {
        const int m = 1 + static_cast<int>(rng() % 10);
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Int> jobs;
        for (int j = 0; j < m; ++j) {
            jobs.emplace_back(1 + rng() % 30);
        }
        CgaResult got = cga_minmax(jobs, n, {});
        CHECK(got.best_load == brute_minmax_load(jobs, n));
        // the assignment realizes the reported value
        std::vector<Int> loads(n, Int(0));
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            loads[got.machine_of[j]] += jobs[j];
        }
        CHECK(*std::max_element(loads.begin(), loads.end()) == got.best_load);
    }
}

TEST_CASE("pruning toggles never change the answer") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 25; ++round) {
        const int m = 1 + static_cast<int>(rng() % 9);
        const int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Int> jobs;
        for (int j = 0; j < m; ++j) {
            jobs.emplace_back(1 + rng() % 40);
        }
        CgaOptions off;
        off.prune_symmetry = false;
        off.prune_bound = false;
        off.greedy_completion = false;
        CHECK(cga_minmax(jobs, n, {}, off).best_load == cga_minmax(jobs, n, {}).best_load);
    }
}

TEST_CASE("early stop returns the first partition under the bound") {
    std::vector<Int> jobs{8, 7, 6, 5, 4};
    CgaResult res = cga_minmax(jobs, 2, Rational(16));
    CHECK(res.stopped_early);
    CHECK(res.best_load <= 16);
}

TEST_CASE("solve_split_cga goldens") {
    Instance inst = make_inst({4, 5, 6, 7, 9}, {1, 1});
    CHECK(solve_split_cga(inst, 0).makespan == Rational(16));
    split::SolveResult one = solve_split_cga(inst, 1);
    CHECK(one.makespan == Rational(31, 2));  // = S
    CHECK(one.split_jobs_used <= 1);

    Instance single = make_inst({22, 7, 4, 3}, {1});
    CHECK(solve_split_cga(single, 0).makespan == Rational(36));
    CHECK(solve_split_cga(single, 2).makespan == Rational(36));

    CHECK_THROWS_AS(solve_split_cga(make_inst({4}, {2, 1}), 0), input_error);
}

TEST_CASE("solve_split_cga matches the oracle") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 50; ++round) {
        Instance inst = testutil::random_instance(rng, 2, 10, 1, 4, 25, true);
        for (int s = 0; s <= std::min(inst.machine_count(), inst.job_count()); ++s) {
            split::SolveResult sol = solve_split_cga(inst, s);
            CHECK(sol.makespan == oracle::oracle_minmax_split(inst, s).makespan);
            PartitionView view = evaluate(inst, sol.assignment);
            CHECK(view.makespan == sol.makespan);
            CHECK(view.split_jobs <= s);
            if (sol.makespan == inst.perfect_time && s >= 1) {
                CHECK(sol.makespan >= inst.perfect_time);  // lower bound is tight
            }
        }
    }
}

TEST_CASE("early stop soundness inside solve_split_cga") {
    // removing the longest job leaves a partition under S, so the result is
    // exactly the perfect time
    Instance inst = make_inst({9, 7, 6, 5, 4}, {1, 1});
    split::SolveResult sol = solve_split_cga(inst, 1);
    CHECK(sol.makespan == inst.perfect_time);
}

TEST_CASE("cga deadline raises budget_error") {
    std::mt19937_64 rng(103);
    std::vector<Int> jobs;
    for (int j = 0; j < 34; ++j) {
        jobs.emplace_back(1 + rng() % 1000000);
    }
    CgaOptions opts;
    opts.deadline = std::chrono::steady_clock::now();  // already expired
    CHECK_THROWS_AS(cga_minmax(jobs, 6, {}, opts), budget_error);
}
