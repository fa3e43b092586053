#pragma once

#include "unisplit/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace unisplit {

// A scheduling instance: m jobs with positive integer lengths on n uniform
// machines with positive integer speeds. Derived aggregates are computed once:
// A = sum of speeds, W = sum of job lengths, S = W/A (perfect completion
// time), M = (longest job)/A.
struct Instance {
    std::vector<Int> jobs;
    std::vector<Int> speeds;

    Int total_speed;        // A
    Int total_work;         // W = A*S
    Rational perfect_time;  // S
    Rational max_share;     // M (0 when there are no jobs)

    int job_count() const { return static_cast<int>(jobs.size()); }
    int machine_count() const { return static_cast<int>(speeds.size()); }
    bool identical_speeds() const;
};

struct LoadOptions {
    bool allow_empty_jobs = false;
};

// Validates and derives aggregates. Throws input_error on empty speeds, a
// non-positive job length or speed, or (by default) an empty job list.
Instance load_instance(std::vector<Int> jobs, std::vector<Int> speeds,
                       const LoadOptions& options = {});

// Per-job distribution of fractions across machines. Only positive fractions
// are stored; a job allocated whole has a single share of 1.
class FractionalAssignment {
public:
    using Share = std::pair<int, Rational>;  // (machine, fraction)

    FractionalAssignment() = default;
    explicit FractionalAssignment(std::size_t job_count) : shares_(job_count) {}

    static FractionalAssignment whole(const std::vector<int>& machine_of);

    // Accumulates; merges with an existing share on the same machine and
    // drops the entry if the total becomes zero. Negative fractions are kept
    // so that evaluate() can reject them.
    void add_share(std::size_t job, int machine, const Rational& fraction);
    void set_whole(std::size_t job, int machine);
    void clear_job(std::size_t job);

    const std::vector<Share>& shares(std::size_t job) const { return shares_[job]; }
    std::size_t job_count() const { return shares_.size(); }

private:
    std::vector<std::vector<Share>> shares_;
};

struct PartitionView {
    std::vector<Rational> loads;        // work assigned to each machine
    std::vector<Rational> completions;  // load / speed
    Rational makespan;
    int split_jobs;   // jobs with two or more machines in support
    int splittings;   // sum over jobs of (support size - 1)
};

// Exact evaluation. Throws input_error if the assignment does not cover
// exactly the instance's jobs, a fraction is negative, some job's fractions
// do not sum to 1, or a job has empty support.
PartitionView evaluate(const Instance& instance, const FractionalAssignment& assignment);

// Job indices ordered by (length descending, index ascending). The first k
// entries are "the k longest jobs" everywhere a solver needs them.
std::vector<int> jobs_by_length(const Instance& instance);

}  // namespace unisplit
