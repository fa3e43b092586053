#include "unisplit/cga.hpp"

#include "unisplit/errors.hpp"
#include "unisplit/partition_ops.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace unisplit {
namespace cga {

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max();

struct Search {
    const std::vector<std::int64_t>& jobs;  // descending
    int n;
    std::int64_t stop_load;  // kNoBound when absent
    const CgaOptions& opts;

    std::vector<std::int64_t> loads;
    std::vector<int> current;
    std::vector<int> best_assign;
    std::int64_t best = kNoBound;
    bool done = false;  // stop bound reached
    std::uint64_t ticks = 0;

    Search(const std::vector<std::int64_t>& jobs_desc, int machines, std::int64_t stop,
           const CgaOptions& options)
        : jobs(jobs_desc), n(machines), stop_load(stop), opts(options),
          loads(machines, 0), current(jobs_desc.size(), 0) {}

    void record(std::int64_t makespan, const std::vector<int>& assign) {
        if (makespan < best) {
            best = makespan;
            best_assign = assign;
            if (stop_load != kNoBound && best <= stop_load) {
                done = true;
            }
        }
    }

    void check_deadline() {
        if (opts.deadline && (++ticks & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > *opts.deadline) {
            throw budget_error("cga search deadline expired");
        }
    }

    // Finish the current prefix greedily (each job to the least-loaded
    // machine); tightens the incumbent early.
    void greedy_finish(std::size_t depth) {
        std::vector<std::int64_t> g = loads;
        std::vector<int> assign = current;
        for (std::size_t k = depth; k < jobs.size(); ++k) {
            int pick = static_cast<int>(std::min_element(g.begin(), g.end()) - g.begin());
            g[pick] += jobs[k];
            assign[k] = pick;
        }
        record(*std::max_element(g.begin(), g.end()), assign);
    }

    void dfs(std::size_t depth, std::int64_t top) {
        if (done) {
            return;
        }
        check_deadline();
        if (depth == jobs.size()) {
            record(top, current);
            return;
        }
        if (opts.greedy_completion) {
            greedy_finish(depth);
            if (done) {
                return;
            }
        }
        if (opts.prune_bound && top >= best) {
            return;
        }

        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return loads[a] < loads[b]; });

        std::int64_t prev_load = -1;
        for (int i : order) {
            if (done) {
                return;
            }
            if (opts.prune_symmetry && loads[i] == prev_load) {
                continue;
            }
            prev_load = loads[i];
            std::int64_t child_top = std::max(top, loads[i] + jobs[depth]);
            if (opts.prune_bound && child_top >= best) {
                // machines are in ascending load order; later ones only get worse
                break;
            }
            loads[i] += jobs[depth];
            current[depth] = i;
            dfs(depth + 1, child_top);
            loads[i] -= jobs[depth];
        }
    }
};

}  // namespace

CgaResult cga_minmax(const std::vector<Int>& jobs, int n,
                     const std::optional<Rational>& stop_bound, const CgaOptions& options) {
    if (n < 1) {
        throw input_error("cga_minmax needs n >= 1");
    }
    Int total = std::accumulate(jobs.begin(), jobs.end(), Int(0));
    if (total > Int(std::numeric_limits<std::int64_t>::max() / 4)) {
        throw budget_error("cga_minmax: job lengths exceed the 64-bit search range");
    }

    std::vector<int> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return jobs[a] > jobs[b]; });
    std::vector<std::int64_t> sorted;
    sorted.reserve(jobs.size());
    for (int j : order) {
        sorted.push_back(jobs[j].convert_to<std::int64_t>());
    }

    std::int64_t stop = kNoBound;
    if (stop_bound) {
        // makespan <= bound with integer loads and speed 1: load <= floor(bound)
        Int f = floor_rat(*stop_bound);
        stop = f < 0 ? -1 : f.convert_to<std::int64_t>();
    }

    Search search(sorted, n, stop, options);
    // without the bound prune, an explicit incumbent is still needed to
    // detect the stop bound; seed with one level above any reachable makespan
    search.dfs(0, 0);
    assert(!search.best_assign.empty() || jobs.empty());

    CgaResult result;
    result.machine_of.assign(jobs.size(), 0);
    for (std::size_t p = 0; p < order.size(); ++p) {
        result.machine_of[order[p]] = jobs.empty() ? 0 : search.best_assign[p];
    }
    result.best_load = jobs.empty() ? Int(0) : Int(search.best);
    result.stopped_early = search.done;
    return result;
}

split::SolveResult solve_split_cga(const Instance& inst, int s, const CgaOptions& options) {
    if (!inst.identical_speeds()) {
        throw input_error("solve_split_cga is defined for identical machines");
    }
    const int m = inst.job_count();
    if (s < 0 || s > m) {
        throw input_error("solve_split_cga needs 0 <= s <= m");
    }

    std::vector<int> order = jobs_by_length(inst);
    std::vector<int> removed(order.begin(), order.begin() + s);
    std::sort(removed.begin(), removed.end());
    std::vector<bool> gone(m, false);
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

    // stop as soon as some partition of the rest fits under S: the removed
    // mass then fills every machine to exactly S
    Rational stop = inst.perfect_time * Rational(inst.speeds.front());
    CgaResult base = cga_minmax(rest_jobs, inst.machine_count(), stop, options);

    const int n = inst.machine_count();
    std::vector<Int> loads(n, Int(0));
    FractionalAssignment fa(inst.jobs.size());
    for (std::size_t p = 0; p < rest_ids.size(); ++p) {
        loads[base.machine_of[p]] += rest_jobs[p];
        fa.set_whole(rest_ids[p], base.machine_of[p]);
    }
    std::vector<Rational> completions(n);
    for (int i = 0; i < n; ++i) {
        completions[i] = make_rational(loads[i], inst.speeds[i]);
    }
    Rational mass = 0;
    for (int j : removed) {
        mass += Rational(inst.jobs[j]);
    }
    FillResult fill = fill_to_target(completions, inst.speeds, mass);
    std::vector<Rational> gaps(n);
    for (int i = 0; i < n; ++i) {
        gaps[i] = (fill.completions[i] - completions[i]) * Rational(inst.speeds[i]);
    }
    fa = pour_into_gaps(inst, std::move(fa), removed, std::move(gaps));

    split::SolveResult result;
    result.makespan = fill.makespan;
    PartitionView view = evaluate(inst, fa);
    assert(view.makespan == fill.makespan);
    result.split_jobs_used = view.split_jobs;
    result.assignment = std::move(fa);
    return result;
}

}  // namespace cga
}  // namespace unisplit
