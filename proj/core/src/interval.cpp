#include "unisplit/interval.hpp"

#include "unisplit/dp.hpp"
#include "unisplit/errors.hpp"
#include "unisplit/partition_ops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace unisplit {
namespace interval {

namespace {

Rational cap_value(const Instance& inst, const Rational& t) {
    return (Rational(1) + t) * inst.perfect_time;
}

std::vector<Int> loads_of(const Instance& inst, const std::vector<int>& machine_of) {
    std::vector<Int> loads(inst.machine_count(), Int(0));
    for (std::size_t j = 0; j < machine_of.size(); ++j) {
        loads[machine_of[j]] += inst.jobs[j];
    }
    return loads;
}

bool within_cap(const Instance& inst, const std::vector<Int>& loads, const Rational& cap) {
    for (int i = 0; i < inst.machine_count(); ++i) {
        if (make_rational(loads[i], inst.speeds[i]) > cap) {
            return false;
        }
    }
    return true;
}

// Minimum-makespan whole-job assignment by exhaustive search (used for the
// m <= n corner of decide_d; kept local so the oracle module stays a pure
// validation tool).
struct BruteResult {
    Rational makespan;
    std::vector<int> machine_of;
};

BruteResult brute_minmax(const Instance& inst, std::size_t budget) {
    Int count = 1;
    for (int j = 0; j < inst.job_count(); ++j) {
        count *= inst.machine_count();
        if (count > Int(budget)) {
            throw budget_error("decide_d brute-force budget exceeded");
        }
    }
    Int scale = 1;
    for (const Int& r : inst.speeds) {
        scale = lcm(scale, r);
    }
    std::vector<Int> weight;
    for (const Int& r : inst.speeds) {
        weight.push_back(scale / r);
    }
    std::vector<Int> loads(inst.machine_count(), Int(0));
    std::vector<int> current(inst.jobs.size(), 0);
    BruteResult best;
    bool found = false;
    Int best_scaled;

    auto dfs = [&](auto&& self, std::size_t depth, const Int& top) -> void {
        if (depth == inst.jobs.size()) {
            if (!found || top < best_scaled) {
                best_scaled = top;
                best.machine_of = current;
                found = true;
            }
            return;
        }
        for (int i = 0; i < inst.machine_count(); ++i) {
            loads[i] += inst.jobs[depth];
            Int scaled = loads[i] * weight[i];
            Int child = std::max(top, scaled);
            if (!found || child < best_scaled) {
                current[depth] = i;
                self(self, depth + 1, child);
            }
            loads[i] -= inst.jobs[depth];
        }
    };
    dfs(dfs, 0, Int(0));
    best.makespan = make_rational(best_scaled, scale);
    return best;
}

}  // namespace

IntervalParams make_params(const Instance& inst, const Rational& d) {
    IntervalParams p;
    p.d = d;
    p.t = d * inst.max_share / inst.perfect_time;
    const int n = inst.machine_count();
    const int m = inst.job_count();
    p.epsilon = p.t / (Rational(4) * Rational(inst.total_speed) * Rational(n) * Rational(n) *
                       Rational(m) * Rational(m));
    p.almost_full_threshold = (Rational(1) + p.t) * inst.perfect_time / (Rational(1) + p.epsilon);
    return p;
}

JobClasses classify_jobs(const Instance& inst, const Rational& t, const Rational& epsilon) {
    if (inst.machine_count() < 3) {
        throw input_error("job classification needs n >= 3");
    }
    const Rational work(inst.total_work);  // A*S
    const Rational big_thr = work * (t / Rational(inst.machine_count() - 2) - 2 * epsilon);
    const Rational small_thr = work * 2 * epsilon;

    JobClasses classes;
    for (int j = 0; j < inst.job_count(); ++j) {
        const Rational x(inst.jobs[j]);
        if (x > big_thr) {
            classes.big.push_back(j);
        } else if (x < small_thr) {
            classes.small.push_back(j);
        } else {
            classes.medium.push_back(j);
        }
    }
    classes.big_count = static_cast<int>(classes.big.size());
    return classes;
}

std::optional<TopPairPlan> plan_top_pair(const Instance& inst, const JobClasses& classes,
                                         int machine_i, int machine_j, const Rational& t) {
    const int n = inst.machine_count();
    const Int factor = Int(classes.big_count) + (n - 2);
    const Int q1 = inst.speeds[machine_i] * factor;
    const Int q2 = inst.speeds[machine_j] * factor;
    if (q1 % inst.total_speed != 0 || q2 % inst.total_speed != 0) {
        return std::nullopt;
    }
    const long m1 = static_cast<long>(q1 / inst.total_speed);
    const long m2 = static_cast<long>(q2 / inst.total_speed);
    if (m1 + m2 > classes.big_count) {
        return std::nullopt;
    }

    std::vector<int> bigs = classes.big;
    std::stable_sort(bigs.begin(), bigs.end(),
                     [&](int a, int b) { return inst.jobs[a] < inst.jobs[b]; });

    TopPairPlan plan;
    plan.machine1 = machine_i;
    plan.machine2 = machine_j;
    plan.m1 = m1;
    plan.m2 = m2;
    plan.chosen.assign(bigs.begin(), bigs.begin() + (m1 + m2));

    Int sum = 0, longest = 0;
    for (int j : plan.chosen) {
        sum += inst.jobs[j];
        longest = std::max<Int>(longest, inst.jobs[j]);
    }
    const Int pair_speed = inst.speeds[machine_i] + inst.speeds[machine_j];
    plan.pair_avg = make_rational(sum, pair_speed);
    plan.pair_max_share = make_rational(longest, inst.total_speed);
    Int inv_sum = 0;
    for (int j : plan.chosen) {
        plan.inverted.push_back(longest - inst.jobs[j]);
        inv_sum += plan.inverted.back();
    }
    plan.inverted_avg = make_rational(inv_sum, pair_speed);

    if (plan.inverted_avg != 0) {
        const Rational r1(inst.speeds[machine_i]);
        const Rational r2(inst.speeds[machine_j]);
        const Rational max_len(longest);  // = A * M_{1:2}
        const Rational slack = inst.perfect_time + t * inst.perfect_time - plan.pair_avg;
        plan.t1_bar = ((r2 * m1 - r1 * m2) / (r1 + r2) * max_len + r2 * slack) /
                      (r1 * plan.inverted_avg);
        plan.t2_bar = ((r1 * m2 - r2 * m1) / (r1 + r2) * max_len + r1 * slack) /
                      (r2 * plan.inverted_avg);
    }
    return plan;
}

Decision greedy_large_t(const Instance& inst, const Rational& t, std::size_t brute_budget) {
    if (t < 1) {
        throw input_error("greedy_large_t needs t >= 1");
    }
    const int n = inst.machine_count();
    const Rational cap = cap_value(inst, t);

    // jobs of length >= S; there are at most A of them
    std::vector<int> big, rest;
    for (int j = 0; j < inst.job_count(); ++j) {
        if (Rational(inst.jobs[j]) >= inst.perfect_time) {
            big.push_back(j);
        } else {
            rest.push_back(j);
        }
    }
    Int count = 1;
    for (std::size_t k = 0; k < big.size(); ++k) {
        count *= n;
        if (count > Int(brute_budget)) {
            throw budget_error("greedy_large_t brute-force budget exceeded");
        }
    }

    std::vector<Int> loads(n, Int(0));
    std::vector<int> placement(big.size(), 0);
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (found) {
            return;
        }
        if (depth == big.size()) {
            found = true;
            return;
        }
        const Int& x = inst.jobs[big[depth]];
        for (int i = 0; i < n && !found; ++i) {
            // skip placements symmetric to an earlier machine
            bool dup = false;
            for (int k = 0; k < i; ++k) {
                if (inst.speeds[k] == inst.speeds[i] && loads[k] == loads[i]) {
                    dup = true;
                    break;
                }
            }
            if (dup) {
                continue;
            }
            loads[i] += x;
            if (make_rational(loads[i], inst.speeds[i]) <= cap) {
                placement[depth] = i;
                self(self, depth + 1);
            }
            if (!found) {
                loads[i] -= x;
            }
        }
    };
    dfs(dfs, 0);

    Decision dec;
    dec.branch = Branch::greedy_large_t;
    if (!found) {
        return dec;
    }

    std::vector<int> machine_of(inst.jobs.size(), 0);
    for (std::size_t k = 0; k < big.size(); ++k) {
        machine_of[big[k]] = placement[k];
    }
    // place the remaining (< S) jobs greedily: some machine with completion
    // at most (2 - 1/r_i)*S always exists, and adding a job there keeps its
    // completion at most 2S <= (1+t)*S
    for (int j : rest) {
        int pick = -1;
        Rational pick_completion;
        for (int i = 0; i < n; ++i) {
            Rational limit =
                (Rational(2) - make_rational(Int(1), inst.speeds[i])) * inst.perfect_time;
            Rational completion = make_rational(loads[i], inst.speeds[i]);
            if (completion <= limit && (pick == -1 || completion < pick_completion)) {
                pick = i;
                pick_completion = completion;
            }
        }
        if (pick < 0) {
            throw std::logic_error("greedy placement invariant violated");
        }
        loads[pick] += inst.jobs[j];
        machine_of[j] = pick;
    }
    assert(within_cap(inst, loads, cap));

    dec.yes = true;
    dec.witness = FractionalAssignment::whole(machine_of);
    return dec;
}

Decision decide_t_two(const Instance& inst, const Rational& t) {
    if (inst.machine_count() != 2) {
        throw input_error("decide_t_two needs exactly two machines");
    }
    if (t <= 0) {
        throw regime_error("decide_t_two needs t > 0");
    }
    if (t >= 1) {
        return greedy_large_t(inst, t);
    }
    const Rational cap = cap_value(inst, t);
    for (int i = 0; i < 2; ++i) {
        dp::DpOutcome out = dp::fptas_uniminmax_cc(inst, i, t, t / 2);
        if (out.objective <= cap) {
            Decision dec;
            dec.yes = true;
            dec.witness = std::move(out.assignment);
            dec.branch = Branch::cc_fptas;
            return dec;
        }
    }
    Decision dec;
    dec.branch = Branch::exhausted;
    return dec;
}

Decision decide_tt(const std::vector<Int>& jobs, const std::array<Int, 2>& speeds,
                   const Rational& t1, const Rational& t2, long m1, long m2) {
    if (m1 < 0 || m2 < 0 || m1 + m2 != static_cast<long>(jobs.size())) {
        throw input_error("decide_tt: cardinalities must be non-negative and sum to m");
    }
    const Rational weighted = Rational(speeds[0]) * t1 + Rational(speeds[1]) * t2;
    if (weighted <= 0) {
        throw input_error("decide_tt needs r1*t1 + r2*t2 > 0");
    }
    const Rational epsilon = weighted / Rational(speeds[0] + speeds[1]);
    Int total = std::accumulate(jobs.begin(), jobs.end(), Int(0));
    const Rational s = make_rational(total, speeds[0] + speeds[1]);

    for (int i = 0; i < 2; ++i) {
        auto out = dp::fptas_cc_card(jobs, speeds, t1, t2, i, static_cast<int>(m1),
                                     static_cast<int>(m2), epsilon);
        if (!out) {
            continue;
        }
        const int j = 1 - i;
        Int load_j = 0;
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            if (out->assignment.shares(k).front().first == j) {
                load_j += jobs[k];
            }
        }
        const Rational tj = (j == 0) ? t1 : t2;
        if (make_rational(load_j, speeds[j]) <= (Rational(1) + tj) * s) {
            Decision dec;
            dec.yes = true;
            dec.witness = std::move(out->assignment);
            return dec;
        }
    }
    Decision dec;
    dec.branch = Branch::exhausted;
    return dec;
}

Decision decide_d(const Instance& inst, const Rational& d, const DecideDOptions& options) {
    const int n = inst.machine_count();
    const int m = inst.job_count();
    if (n < 3) {
        throw input_error("decide_d needs n >= 3");
    }
    if (d < n - 2) {
        throw regime_error("decide_d guarantees require d >= n-2; use cga or fptas_split");
    }

    const Rational bound = inst.perfect_time + d * inst.max_share;

    if (m <= n) {
        BruteResult brute = brute_minmax(inst, options.brute_budget);
        Decision dec;
        dec.branch = Branch::brute_force;
        if (brute.makespan <= bound) {
            dec.yes = true;
            dec.witness = FractionalAssignment::whole(brute.machine_of);
        }
        return dec;
    }

    IntervalParams params = make_params(inst, d);
    const Rational cap = cap_value(inst, params.t);  // == bound

    if (options.use_preschedule) {
        std::vector<int> machine_of = lpt_schedule(inst);
        if (within_cap(inst, loads_of(inst, machine_of), cap)) {
            Decision dec;
            dec.yes = true;
            dec.witness = FractionalAssignment::whole(machine_of);
            dec.branch = Branch::preschedule;
            return dec;
        }
    }

    if (params.t >= 1) {
        return greedy_large_t(inst, params.t, options.brute_budget);
    }

    if (options.use_cc_fptas) {
        for (int i = 0; i < n; ++i) {
            dp::DpOutcome out = dp::fptas_uniminmax_cc(inst, i, params.t, params.epsilon);
            if (out.objective <= cap) {
                Decision dec;
                dec.yes = true;
                dec.witness = std::move(out.assignment);
                dec.branch = Branch::cc_fptas;
                return dec;
            }
        }
    }

    JobClasses classes = classify_jobs(inst, params.t, params.epsilon);
    if (!classes.medium.empty()) {
        // the two-almost-full structure admits only big and small jobs
        Decision dec;
        dec.branch = Branch::medium_jobs;
        return dec;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            auto plan = plan_top_pair(inst, classes, i, j, params.t);
            if (!plan) {
                continue;
            }

            std::vector<bool> chosen_mask(m, false);
            for (int job : plan->chosen) {
                chosen_mask[job] = true;
            }
            std::vector<Int> rest_jobs;
            std::vector<int> rest_ids;
            for (int job = 0; job < m; ++job) {
                if (!chosen_mask[job]) {
                    rest_jobs.push_back(inst.jobs[job]);
                    rest_ids.push_back(job);
                }
            }
            std::vector<Int> rest_speeds;
            std::vector<int> rest_machines;
            for (int k = 0; k < n; ++k) {
                if (k != i && k != j) {
                    rest_speeds.push_back(inst.speeds[k]);
                    rest_machines.push_back(k);
                }
            }

            dp::DpOutcome sub = dp::fptas_uniminmax_raw(rest_jobs, rest_speeds, params.epsilon);
            if (sub.objective > cap) {
                continue;
            }

            // partition of B_{1:2}: role 0 -> machine i, role 1 -> machine j
            std::vector<int> pair_role(plan->chosen.size(), 1);
            if (plan->inverted_avg == 0) {
                // all chosen jobs equal the pair maximum; check the two caps directly
                const Int len = numerator(plan->pair_max_share * Rational(inst.total_speed));
                if (make_rational(Int(plan->m1) * len, inst.speeds[i]) > cap ||
                    make_rational(Int(plan->m2) * len, inst.speeds[j]) > cap) {
                    continue;
                }
                std::fill(pair_role.begin(), pair_role.begin() + plan->m1, 0);
            } else {
                const Rational weighted = Rational(inst.speeds[i]) * *plan->t1_bar +
                                          Rational(inst.speeds[j]) * *plan->t2_bar;
                if (weighted <= 0) {
                    continue;  // certifies no feasible pair partition
                }
                Decision tt = decide_tt(plan->inverted, {inst.speeds[i], inst.speeds[j]},
                                        *plan->t1_bar, *plan->t2_bar, plan->m1, plan->m2);
                if (!tt.yes) {
                    continue;
                }
                for (std::size_t p = 0; p < plan->chosen.size(); ++p) {
                    pair_role[p] = tt.witness->shares(p).front().first;
                }
            }

            std::vector<int> machine_of(m, -1);
            for (std::size_t p = 0; p < plan->chosen.size(); ++p) {
                machine_of[plan->chosen[p]] = pair_role[p] == 0 ? i : j;
            }
            for (std::size_t p = 0; p < rest_ids.size(); ++p) {
                machine_of[rest_ids[p]] =
                    rest_machines[sub.assignment.shares(p).front().first];
            }
            std::vector<Int> loads = loads_of(inst, machine_of);
            // tt-feasibility maps back exactly through the inversion; a miss
            // here would mean the thresholds were computed wrong
            assert(within_cap(inst, loads, cap));
            if (!within_cap(inst, loads, cap)) {
                continue;
            }

            Decision dec;
            dec.yes = true;
            dec.witness = FractionalAssignment::whole(machine_of);
            dec.branch = Branch::pair;
            return dec;
        }
    }

    Decision dec;
    dec.branch = Branch::exhausted;
    return dec;
}

}  // namespace interval
}  // namespace unisplit
