#pragma once

#include "unisplit/instance.hpp"

#include <array>
#include <optional>
#include <vector>

namespace unisplit {
namespace interval {

enum class Branch {
    none,
    trivial,
    brute_force,     // m <= n
    preschedule,     // a cheap constructive schedule met the cap
    greedy_large_t,  // t >= 1 greedy
    cc_fptas,        // one critical-coordinate run met the cap
    medium_jobs,     // medium jobs rule out the two-almost-full structure
    pair,            // explicit almost-full pair found
    exhausted,       // every pair failed
};

struct Decision {
    bool yes = false;
    std::optional<FractionalAssignment> witness;  // present on yes
    Branch branch = Branch::none;
};

struct IntervalParams {
    Rational t;
    Rational d;
    Rational epsilon;               // t / (4*A*n^2*m^2)
    Rational almost_full_threshold;  // (1+t)*S / (1+epsilon)
};

IntervalParams make_params(const Instance& instance, const Rational& d);

struct JobClasses {
    std::vector<int> big;
    std::vector<int> medium;
    std::vector<int> small;
    int big_count = 0;
};

// big: x > (t/(n-2) - 2*eps) * A*S; small: x < 2*eps*A*S; medium: the rest.
JobClasses classify_jobs(const Instance& instance, const Rational& t, const Rational& epsilon);

struct TopPairPlan {
    int machine1 = -1;  // plays role 1
    int machine2 = -1;  // plays role 2
    long m1 = 0;        // big jobs required on machine1
    long m2 = 0;
    std::vector<int> chosen;    // job ids of B_{1:2}, the m1+m2 smallest big jobs
    Rational pair_avg;          // S_{1:2} = (sum over chosen)/(r1+r2)
    Rational pair_max_share;    // M_{1:2} = (max over chosen)/A
    std::vector<Int> inverted;  // A*M_{1:2} - x, aligned with chosen
    Rational inverted_avg;      // S-bar_{1:2}
    std::optional<Rational> t1_bar, t2_bar;  // absent when inverted_avg == 0
};

// Returns nullopt (skip) when r_i*(m_b+n-2) or r_j*(m_b+n-2) is not a
// multiple of A, or when B does not hold m1+m2 jobs.
std::optional<TopPairPlan> plan_top_pair(const Instance& instance, const JobClasses& classes,
                                         int machine_i, int machine_j, const Rational& t);

// t >= 1: brute-force the jobs of length >= S over the machines, then fill
// greedily; linear-time decidable regime.
Decision greedy_large_t(const Instance& instance, const Rational& t,
                        std::size_t brute_budget = 20'000'000);

// n = 2, t > 0. Two critical-coordinate FPTAS runs with eps = t/2.
Decision decide_t_two(const Instance& instance, const Rational& t);

// Exact-cardinality two-machine decision with per-machine caps (1+t_q)*S,
// S = (sum of jobs)/(r1+r2). Requires r1*t1 + r2*t2 > 0.
Decision decide_tt(const std::vector<Int>& jobs, const std::array<Int, 2>& speeds,
                   const Rational& t1, const Rational& t2, long m1, long m2);

struct DecideDOptions {
    bool use_preschedule = true;  // cheap constructive yes before the FPTAS stage
    bool use_cc_fptas = true;     // disabled only by white-box tests
    std::size_t brute_budget = 20'000'000;
};

// Complete decision procedure for n >= 3, d >= n-2: is there a whole-job
// partition with makespan <= S + d*M?
Decision decide_d(const Instance& instance, const Rational& d, const DecideDOptions& = {});

}  // namespace interval
}  // namespace unisplit
