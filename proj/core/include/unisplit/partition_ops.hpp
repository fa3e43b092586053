#pragma once

#include "unisplit/instance.hpp"

#include <vector>

namespace unisplit {

// Exchange argument: returns an assignment with the same completion-time
// vector in which every split job is among the k longest jobs, k being the
// input's split-job count. Ties in "longest" go to the lower job index.
FractionalAssignment normalize_splits(const Instance& instance, FractionalAssignment assignment);

// Lays the jobs on a line (descending length, index tie-break), cuts at the
// prefix sums r_i * S. Every completion time equals S and at most n-1 jobs
// are split.
FractionalAssignment line_cut(const Instance& instance);

struct FillResult {
    std::vector<Rational> completions;  // in the input's machine order
    Rational makespan;
    Rational level;  // final water level; completions[i] = max(base[i], level)
};

// Water-filling: raises the lowest completion times level by level until the
// work budget is spent; whatever remains at the top level is spread per unit
// speed over the machines sitting at it. budget is in work units.
FillResult fill_to_target(const std::vector<Rational>& base_completions,
                          const std::vector<Int>& speeds, const Rational& budget);

// Pours the given jobs, in order, into per-machine work gaps (consecutive
// line-cut style, so each gap boundary splits at most one job). The poured
// jobs must have empty support in `base`; the gaps must absorb their total
// length exactly.
FractionalAssignment pour_into_gaps(const Instance& instance, FractionalAssignment base,
                                    const std::vector<int>& jobs_to_pour,
                                    std::vector<Rational> gaps_work);

// Longest-processing-time list schedule on uniform machines; each job goes to
// the machine where it finishes earliest (ties to the lower machine index).
// Returns machine_of in original job order.
std::vector<int> lpt_schedule(const Instance& instance);

}  // namespace unisplit
