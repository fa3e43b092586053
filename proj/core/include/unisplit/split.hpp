#pragma once

#include "unisplit/instance.hpp"
#include "unisplit/interval.hpp"

#include <utility>

namespace unisplit {
namespace split {

struct SolveResult {
    Rational makespan;
    FractionalAssignment assignment;
    int split_jobs_used = 0;
};

// Interval-to-split gadget for identical machines: appends d copies of the
// longest job. The original instance is d-possible iff the new instance has a
// perfect partition with at most d split jobs.
Instance interval_to_split(const Instance& instance, const Int& d);

// Split-to-interval reduction: drops the s longest jobs (ties to the lower
// index) and returns the reduced instance together with d = (S+tS-S')/M';
// always d >= s. Requires s < m.
std::pair<Instance, Rational> split_to_interval(const Instance& instance, int s,
                                                const Rational& t);

// Is there a partition with at most s split jobs and makespan <= (1+t)*S?
// Guaranteed regimes: n >= 3 with s >= n-2; n = 2 with s >= 1, or s = 0 and
// t > 0; n = 1. Witness reconstructed by water-filling the removed jobs.
interval::Decision decide_split(const Instance& instance, int s, const Rational& t);

// Exact optimum via binary search over the candidate values {S} union
// {q/r_i with q an integer}; no other value can be optimal. Polynomial in
// the decide_split regime; smaller s falls back to the exact epsilon=0
// dynamic program (exponential worst case, still exact).
SolveResult solve_split(const Instance& instance, int s);

// FPTAS for any n >= 1 and 0 <= s <= m: remove the s longest jobs, run the
// makespan FPTAS on the rest, water-fill the removed mass back.
SolveResult fptas_split(const Instance& instance, int s, const Rational& epsilon);

}  // namespace split
}  // namespace unisplit
