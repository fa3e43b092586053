#include "unisplit/oracle.hpp"

#include "unisplit/errors.hpp"
#include "unisplit/partition_ops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace unisplit {
namespace oracle {

namespace {

void check_budget(int n, int free_jobs, const OracleBudget& budget) {
    Int count = 1;
    for (int k = 0; k < free_jobs; ++k) {
        count *= n;
        if (count > Int(budget.max_assignments)) {
            throw budget_error("oracle enumeration budget exceeded");
        }
    }
}

// Depth-first enumeration of whole-job assignments, minimizing the maximum
// completion time. Completions are compared as integer loads scaled by
// lcm(speeds)/r_i. Subtrees whose partial maximum already matches the
// incumbent are skipped; loads only grow, so this never changes the optimum.
struct Enumerator {
    const Instance& inst;
    const std::vector<int>& free_jobs;
    Int scale;                  // lcm of speeds
    std::vector<Int> weight;    // scale / r_i
    std::vector<Int> loads;
    std::vector<int> current;
    std::vector<int> best_assign;
    Int best_scaled;
    bool found = false;

    Enumerator(const Instance& instance, const std::vector<int>& jobs)
        : inst(instance), free_jobs(jobs), loads(instance.machine_count(), Int(0)),
          current(jobs.size(), 0) {
        scale = 1;
        for (const Int& r : inst.speeds) {
            scale = lcm(scale, r);
        }
        for (const Int& r : inst.speeds) {
            weight.push_back(scale / r);
        }
    }

    void run(std::size_t depth, const Int& top_scaled) {
        if (depth == free_jobs.size()) {
            if (!found || top_scaled < best_scaled) {
                best_scaled = top_scaled;
                best_assign = current;
                found = true;
            }
            return;
        }
        const Int& x = inst.jobs[free_jobs[depth]];
        for (int i = 0; i < inst.machine_count(); ++i) {
            loads[i] += x;
            Int scaled = loads[i] * weight[i];
            Int child_top = std::max(top_scaled, scaled);
            if (!found || child_top < best_scaled) {
                current[depth] = i;
                run(depth + 1, child_top);
            }
            loads[i] -= x;
        }
    }
};

OracleSolution solve_with_split_set(const Instance& inst, std::vector<int> split_set,
                                    const OracleBudget& budget) {
    const int m = inst.job_count();
    std::vector<bool> removed(m, false);
    for (int j : split_set) {
        removed[j] = true;
    }
    std::vector<int> rest;
    for (int j = 0; j < m; ++j) {
        if (!removed[j]) {
            rest.push_back(j);
        }
    }
    check_budget(inst.machine_count(), static_cast<int>(rest.size()), budget);

    Enumerator en(inst, rest);
    en.run(0, Int(0));
    assert(en.found);

    Rational mass = 0;
    for (int j : split_set) {
        mass += Rational(inst.jobs[j]);
    }

    std::vector<Int> loads(inst.machine_count(), Int(0));
    for (std::size_t p = 0; p < rest.size(); ++p) {
        loads[en.best_assign[p]] += inst.jobs[rest[p]];
    }
    std::vector<Rational> base(inst.machine_count());
    for (int i = 0; i < inst.machine_count(); ++i) {
        base[i] = make_rational(loads[i], inst.speeds[i]);
    }

    FillResult fill = fill_to_target(base, inst.speeds, mass);
    FractionalAssignment fa(inst.jobs.size());
    for (std::size_t p = 0; p < rest.size(); ++p) {
        fa.set_whole(rest[p], en.best_assign[p]);
    }
    std::vector<Rational> gaps(inst.machine_count());
    for (int i = 0; i < inst.machine_count(); ++i) {
        gaps[i] = (fill.completions[i] - base[i]) * Rational(inst.speeds[i]);
    }
    fa = pour_into_gaps(inst, std::move(fa), split_set, std::move(gaps));
    return {fill.makespan, std::move(fa)};
}

}  // namespace

OracleSolution oracle_minmax_split(const Instance& inst, int s, const OracleBudget& budget) {
    if (s < 0 || s > inst.job_count()) {
        throw input_error("oracle_minmax_split: s out of range");
    }
    std::vector<int> order = jobs_by_length(inst);
    std::vector<int> split_set(order.begin(), order.begin() + s);
    std::sort(split_set.begin(), split_set.end());
    return solve_with_split_set(inst, std::move(split_set), budget);
}

bool oracle_decide_interval(const Instance& inst, const Rational& d,
                            const OracleBudget& budget) {
    OracleSolution base = oracle_minmax_split(inst, 0, budget);
    return base.makespan <= inst.perfect_time + d * inst.max_share;
}

OracleSolution oracle_minmax_split_doubly_brute(const Instance& inst, int s,
                                                const OracleBudget& budget) {
    const int m = inst.job_count();
    if (s < 0 || s > m) {
        throw input_error("doubly brute oracle: s out of range");
    }
    if (m > 20) {
        throw budget_error("doubly brute oracle is desk-scale only (m <= 20)");
    }
    bool have = false;
    OracleSolution best;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) > s) {
            continue;
        }
        std::vector<int> split_set;
        for (int j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                split_set.push_back(j);
            }
        }
        OracleSolution sol = solve_with_split_set(inst, std::move(split_set), budget);
        if (!have || sol.makespan < best.makespan) {
            best = std::move(sol);
            have = true;
        }
    }
    return best;
}

}  // namespace oracle
}  // namespace unisplit
