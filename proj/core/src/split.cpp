#include "unisplit/split.hpp"

#include "unisplit/dp.hpp"
#include "unisplit/errors.hpp"
#include "unisplit/partition_ops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace unisplit {
namespace split {

namespace {

// The s longest job ids (length desc, index asc), ascending by index.
std::vector<int> longest_ids(const Instance& inst, int s) {
    std::vector<int> order = jobs_by_length(inst);
    std::vector<int> ids(order.begin(), order.begin() + s);
    std::sort(ids.begin(), ids.end());
    return ids;
}

// Assemble a split witness: whole-job base on the reduced jobs, removed jobs
// water-filled into the gaps up to the fill level.
SolveResult rebuild_with_fill(const Instance& inst, const std::vector<int>& removed,
                              const std::vector<int>& rest_ids,
                              const std::vector<int>& rest_machine_of) {
    const int n = inst.machine_count();
    std::vector<Int> loads(n, Int(0));
    FractionalAssignment fa(inst.jobs.size());
    for (std::size_t p = 0; p < rest_ids.size(); ++p) {
        loads[rest_machine_of[p]] += inst.jobs[rest_ids[p]];
        fa.set_whole(rest_ids[p], rest_machine_of[p]);
    }
    std::vector<Rational> base(n);
    for (int i = 0; i < n; ++i) {
        base[i] = make_rational(loads[i], inst.speeds[i]);
    }
    Rational mass = 0;
    for (int j : removed) {
        mass += Rational(inst.jobs[j]);
    }
    FillResult fill = fill_to_target(base, inst.speeds, mass);
    std::vector<Rational> gaps(n);
    for (int i = 0; i < n; ++i) {
        gaps[i] = (fill.completions[i] - base[i]) * Rational(inst.speeds[i]);
    }
    fa = pour_into_gaps(inst, std::move(fa), removed, std::move(gaps));
    fa = normalize_splits(inst, std::move(fa));

    SolveResult result;
    result.makespan = fill.makespan;
    PartitionView view = evaluate(inst, fa);
    assert(view.makespan == fill.makespan);
    result.split_jobs_used = view.split_jobs;
    result.assignment = std::move(fa);
    return result;
}

SolveResult line_cut_result(const Instance& inst) {
    SolveResult result;
    result.assignment = line_cut(inst);
    PartitionView view = evaluate(inst, result.assignment);
    result.makespan = view.makespan;
    result.split_jobs_used = view.split_jobs;
    return result;
}

}  // namespace

Instance interval_to_split(const Instance& inst, const Int& d) {
    if (!inst.identical_speeds()) {
        throw input_error("interval_to_split is defined for identical machines");
    }
    if (d < 0) {
        throw input_error("interval_to_split needs d >= 0");
    }
    std::vector<Int> jobs = inst.jobs;
    const Int longest = *std::max_element(jobs.begin(), jobs.end());  // = A*M
    for (Int k = 0; k < d; ++k) {
        jobs.push_back(longest);
    }
    return load_instance(std::move(jobs), inst.speeds);
}

std::pair<Instance, Rational> split_to_interval(const Instance& inst, int s,
                                                const Rational& t) {
    if (s < 0 || s >= inst.job_count()) {
        throw input_error("split_to_interval needs 0 <= s < m");
    }
    if (t < 0) {
        throw input_error("split_to_interval needs t >= 0");
    }
    std::vector<int> removed = longest_ids(inst, s);
    std::vector<bool> gone(inst.jobs.size(), false);
    for (int j : removed) {
        gone[j] = true;
    }
    std::vector<Int> jobs;
    for (int j = 0; j < inst.job_count(); ++j) {
        if (!gone[j]) {
            jobs.push_back(inst.jobs[j]);
        }
    }
    Instance reduced = load_instance(std::move(jobs), inst.speeds);
    // d = (S + tS - S') / M'
    Rational d = (inst.perfect_time + t * inst.perfect_time - reduced.perfect_time) /
                 reduced.max_share;
    assert(d >= s);
    return {std::move(reduced), std::move(d)};
}

interval::Decision decide_split(const Instance& inst, int s, const Rational& t) {
    const int n = inst.machine_count();
    const int m = inst.job_count();
    if (s < 0 || s > m) {
        throw input_error("decide_split needs 0 <= s <= m");
    }
    if (t < 0) {
        throw input_error("decide_split needs t >= 0");
    }

    interval::Decision dec;
    if (s >= std::min(m, n - 1)) {
        // line-cutting gives a perfect partition with at most n-1 splits
        dec.yes = true;
        dec.witness = line_cut(inst);
        dec.branch = interval::Branch::trivial;
        return dec;
    }
    if (n == 1) {
        dec.yes = true;  // single machine always sits exactly at S
        std::vector<int> zeros(m, 0);
        dec.witness = FractionalAssignment::whole(zeros);
        dec.branch = interval::Branch::trivial;
        return dec;
    }
    if (n == 2) {
        // here s = 0; the perfect-partition test (t = 0) has no guarantee
        if (t == 0) {
            throw regime_error("decide_split with n=2, s=0, t=0 has no polynomial guarantee");
        }
        return interval::decide_t_two(inst, t);
    }
    if (s < n - 2) {
        throw regime_error("decide_split guarantees require s >= n-2; use fptas_split or cga");
    }

    auto [reduced, d] = split_to_interval(inst, s, t);
    interval::Decision inner = interval::decide_d(reduced, d);
    if (!inner.yes) {
        return inner;
    }

    // map the reduced witness back to original job ids, then fill the removed
    // jobs up to the (1+t)S levels
    std::vector<int> removed = longest_ids(inst, s);
    std::vector<bool> gone(inst.jobs.size(), false);
    for (int j : removed) {
        gone[j] = true;
    }
    std::vector<int> rest_ids;
    for (int j = 0; j < m; ++j) {
        if (!gone[j]) {
            rest_ids.push_back(j);
        }
    }
    std::vector<int> rest_machine_of(rest_ids.size());
    for (std::size_t p = 0; p < rest_ids.size(); ++p) {
        rest_machine_of[p] = inner.witness->shares(p).front().first;
    }
    SolveResult rebuilt = rebuild_with_fill(inst, removed, rest_ids, rest_machine_of);
    assert(rebuilt.makespan <= (Rational(1) + t) * inst.perfect_time);
    assert(rebuilt.split_jobs_used <= s);

    dec.yes = true;
    dec.witness = std::move(rebuilt.assignment);
    dec.branch = inner.branch;
    return dec;
}

namespace {

// Exact solver outside the polynomial regime (s < n-2): the split set may be
// fixed to the s longest jobs; the water-fill of any base partition peaks at
// max(base makespan, S), so the exact min-max DP on the rest is optimal.
SolveResult solve_exact_dp(const Instance& inst, int s) {
    std::vector<int> removed = longest_ids(inst, s);
    std::vector<bool> gone(inst.jobs.size(), false);
    for (int j : removed) {
        gone[j] = true;
    }
    std::vector<Int> rest_jobs;
    std::vector<int> rest_ids;
    for (int j = 0; j < inst.job_count(); ++j) {
        if (!gone[j]) {
            rest_jobs.push_back(inst.jobs[j]);
            rest_ids.push_back(j);
        }
    }
    dp::DpOutcome base = dp::fptas_uniminmax_raw(rest_jobs, inst.speeds, Rational(0));
    std::vector<int> rest_machine_of(rest_ids.size());
    for (std::size_t p = 0; p < rest_ids.size(); ++p) {
        rest_machine_of[p] = base.assignment.shares(p).front().first;
    }
    return rebuild_with_fill(inst, removed, rest_ids, rest_machine_of);
}

}  // namespace

SolveResult solve_split(const Instance& inst, int s) {
    const int n = inst.machine_count();
    const int m = inst.job_count();
    if (s < 0 || s > m) {
        throw input_error("solve_split needs 0 <= s <= m");
    }

    if (s >= std::min(m, n - 1) || n == 1) {
        if (n == 1) {
            std::vector<int> zeros(m, 0);
            SolveResult result;
            result.assignment = FractionalAssignment::whole(zeros);
            result.makespan = inst.perfect_time;
            result.split_jobs_used = 0;
            return result;
        }
        return line_cut_result(inst);  // exact: OPT = S for s >= n-1
    }
    if (s < n - 2 || (n == 2 && s == 0)) {
        // below the polynomial regime; still exact via the epsilon=0 DP
        return solve_exact_dp(inst, s);
    }

    // t = 0 first: a yes means OPT = S
    {
        interval::Decision perfect = decide_split(inst, s, Rational(0));
        if (perfect.yes) {
            SolveResult result;
            result.makespan = inst.perfect_time;
            PartitionView view = evaluate(inst, *perfect.witness);
            assert(view.makespan == inst.perfect_time);
            result.split_jobs_used = view.split_jobs;
            result.assignment = std::move(*perfect.witness);
            return result;
        }
    }

    // OPT > S, so OPT = q/r_i for an integer q: a non-perfect optimum whose
    // value came from a split job could shave its peak. All such values lie
    // on the grid with denominator lcm(speeds); binary search the grid for
    // the least yes, seeded with a cheap constructive upper bound.
    Int grid = 1;
    for (const Int& r : inst.speeds) {
        grid = lcm(grid, r);
    }
    Int lo = floor_rat(inst.perfect_time * Rational(grid)) + 1;  // first grid point > S

    std::vector<int> removed = longest_ids(inst, s);
    std::vector<bool> gone(inst.jobs.size(), false);
    for (int j : removed) {
        gone[j] = true;
    }
    std::vector<int> rest_ids;
    for (int j = 0; j < m; ++j) {
        if (!gone[j]) {
            rest_ids.push_back(j);
        }
    }
    std::vector<int> lpt_machine(rest_ids.size());
    {
        std::vector<Int> rest_jobs;
        for (int j : rest_ids) {
            rest_jobs.push_back(inst.jobs[j]);
        }
        Instance rest_inst = load_instance(rest_jobs, inst.speeds, {true});
        std::vector<int> lpt = lpt_schedule(rest_inst);
        lpt_machine = lpt;
    }
    SolveResult upper = rebuild_with_fill(inst, removed, rest_ids, lpt_machine);
    Int hi = ceil_rat(upper.makespan * Rational(grid));
    assert(hi >= lo);

    auto feasible = [&](const Int& p) {
        Rational value = make_rational(p, grid);
        Rational t = value / inst.perfect_time - 1;
        return decide_split(inst, s, t);
    };

    // the constructive schedule is itself a witness for hi
    interval::Decision best;
    best.yes = true;
    best.witness = std::move(upper.assignment);
    Int best_p = hi;
    while (lo < best_p) {
        Int mid = (lo + best_p) / 2;
        interval::Decision dec = feasible(mid);
        if (dec.yes) {
            best = std::move(dec);
            best_p = mid;
        } else {
            lo = mid + 1;
        }
    }

    SolveResult result;
    result.makespan = make_rational(best_p, grid);
    PartitionView view = evaluate(inst, *best.witness);
    assert(view.makespan <= result.makespan);
    result.makespan = view.makespan;
    result.split_jobs_used = view.split_jobs;
    result.assignment = std::move(*best.witness);
    return result;
}

SolveResult fptas_split(const Instance& inst, int s, const Rational& epsilon) {
    const int n = inst.machine_count();
    const int m = inst.job_count();
    if (s < 0 || s > m) {
        throw input_error("fptas_split needs 0 <= s <= m");
    }
    if (epsilon <= 0) {
        throw input_error("fptas_split needs epsilon > 0");
    }
    if (s >= std::min(m, n - 1)) {
        return line_cut_result(inst);  // perfect; trivially within every bound
    }

    std::vector<int> removed = longest_ids(inst, s);
    std::vector<bool> gone(inst.jobs.size(), false);
    for (int j : removed) {
        gone[j] = true;
    }
    std::vector<Int> rest_jobs;
    std::vector<int> rest_ids;
    for (int j = 0; j < m; ++j) {
        if (!gone[j]) {
            rest_jobs.push_back(inst.jobs[j]);
            rest_ids.push_back(j);
        }
    }
    dp::DpOutcome base = dp::fptas_uniminmax_raw(rest_jobs, inst.speeds, epsilon);
    std::vector<int> rest_machine_of(rest_ids.size());
    for (std::size_t p = 0; p < rest_ids.size(); ++p) {
        rest_machine_of[p] = base.assignment.shares(p).front().first;
    }
    return rebuild_with_fill(inst, removed, rest_ids, rest_machine_of);
}

}  // namespace split
}  // namespace unisplit
