#pragma once

#include "unisplit/instance.hpp"

#include <cstddef>
#include <utility>

namespace unisplit {
namespace oracle {

struct OracleBudget {
    std::size_t max_assignments = 20'000'000;
};

struct OracleSolution {
    Rational makespan;
    FractionalAssignment assignment;
};

// Exact optimum of makespan minimization with at most s split jobs: fixes the
// s longest jobs as the splittable set, enumerates every whole-job assignment
// of the rest, water-fills the splittable mass over each and takes the best.
// Throws budget_error when n^(m-s) exceeds the budget.
OracleSolution oracle_minmax_split(const Instance& instance, int s,
                                   const OracleBudget& budget = {});

// True iff some whole-job partition has makespan <= S + d*M.
bool oracle_decide_interval(const Instance& instance, const Rational& d,
                            const OracleBudget& budget = {});

// Audit variant that does not assume the split set is the s longest jobs:
// enumerates every subset of size <= s as the split set. Desk scale only.
OracleSolution oracle_minmax_split_doubly_brute(const Instance& instance, int s,
                                                const OracleBudget& budget = {});

}  // namespace oracle
}  // namespace unisplit
