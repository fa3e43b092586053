#pragma once

#include "unisplit/instance.hpp"
#include "unisplit/split.hpp"

#include <chrono>
#include <optional>
#include <vector>

namespace unisplit {
namespace cga {

struct CgaOptions {
    // The three search accelerations; the differential tests toggle them.
    bool prune_symmetry = true;      // skip placements into equal-load machines
    bool prune_bound = true;         // cut subtrees that cannot beat the incumbent
    bool greedy_completion = true;   // finish each node greedily to tighten the incumbent
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CgaResult {
    std::vector<int> machine_of;  // aligned with the input job order
    Int best_load;                // maximum machine load of the returned partition
    bool stopped_early = false;   // the stop bound was reached
};

// Complete Greedy Algorithm on identical machines (speed 1): depth-first over
// all partitions, longest job first, machines in ascending load order.
// Returns the first partition whose makespan is at most stop_bound when one
// is given, otherwise the exact min-max partition.
CgaResult cga_minmax(const std::vector<Int>& jobs, int n,
                     const std::optional<Rational>& stop_bound, const CgaOptions& options = {});

// Exact solver for identical machines and any 0 <= s <= m: removes the s
// longest jobs, runs CGA on the rest with stop bound S, water-fills the
// removed mass back.
split::SolveResult solve_split_cga(const Instance& instance, int s,
                                   const CgaOptions& options = {});

}  // namespace cga
}  // namespace unisplit
