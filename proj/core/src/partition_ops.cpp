#include "unisplit/partition_ops.hpp"

#include "unisplit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace unisplit {

namespace {

bool is_whole(const FractionalAssignment& fa, int job) {
    return fa.shares(job).size() == 1 && fa.shares(job).front().second == 1;
}

}  // namespace

FractionalAssignment normalize_splits(const Instance& instance, FractionalAssignment fa) {
    const int m = instance.job_count();
    auto split = [&](int j) { return fa.shares(j).size() >= 2; };

    int k = 0;
    for (int j = 0; j < m; ++j) {
        k += split(j) ? 1 : 0;
    }
    if (k == 0) {
        return fa;
    }

    std::vector<int> order = jobs_by_length(instance);
    std::vector<bool> in_top(m, false);
    for (int p = 0; p < k; ++p) {
        in_top[order[p]] = true;
    }

    // Repeatedly exchange a split job outside the top-k with a whole top-k
    // job; the whole job must be at least as long, so a fraction x/y of it
    // can take over the split pattern without changing any load.
    for (;;) {
        int x = -1;  // split, outside top-k; take the shortest such
        for (int p = m - 1; p >= k; --p) {
            if (split(order[p])) {
                x = order[p];
                break;
            }
        }
        if (x == -1) {
            break;
        }
        int y = -1;  // whole, inside top-k; take the longest such
        for (int p = 0; p < k; ++p) {
            if (is_whole(fa, order[p])) {
                y = order[p];
                break;
            }
        }
        assert(y != -1);

        const int home = fa.shares(y).front().first;
        const Rational ratio = Rational(instance.jobs[x]) / Rational(instance.jobs[y]);
        std::vector<FractionalAssignment::Share> pattern = fa.shares(x);

        fa.set_whole(x, home);
        fa.clear_job(y);
        Rational home_frac = 1 - ratio;
        for (const auto& [machine, fraction] : pattern) {
            if (machine == home) {
                home_frac += ratio * fraction;
            } else {
                fa.add_share(y, machine, ratio * fraction);
            }
        }
        fa.add_share(y, home, home_frac);
    }
    return fa;
}

FractionalAssignment line_cut(const Instance& instance) {
    if (instance.job_count() < 1) {
        throw input_error("line_cut needs at least one job");
    }
    const int n = instance.machine_count();
    const std::vector<int> order = jobs_by_length(instance);

    FractionalAssignment fa(instance.jobs.size());
    Rational pos = 0;       // start of the current job on the line
    Rational boundary = 0;  // end of the current machine's segment
    Int speed_prefix = 0;
    int machine = -1;
    auto advance_machine = [&]() {
        ++machine;
        speed_prefix += instance.speeds[machine];
        boundary = Rational(speed_prefix) * instance.perfect_time;
    };
    advance_machine();

    for (int j : order) {
        const Rational len(instance.jobs[j]);
        Rational end = pos + len;
        Rational cursor = pos;
        while (cursor < end) {
            while (boundary <= cursor && machine + 1 < n) {
                advance_machine();
            }
            Rational take = std::min(end, boundary) - cursor;
            if (machine == n - 1) {
                take = end - cursor;  // last machine absorbs the tail
            }
            if (take > 0) {
                fa.add_share(j, machine, take / len);
            }
            cursor += take;
        }
        pos = end;
    }
    return fa;
}

FillResult fill_to_target(const std::vector<Rational>& base_completions,
                          const std::vector<Int>& speeds, const Rational& budget) {
    if (base_completions.size() != speeds.size() || speeds.empty()) {
        throw input_error("fill_to_target: completions and speeds must match");
    }
    if (budget < 0) {
        throw input_error("fill_to_target: negative budget");
    }
    const int n = static_cast<int>(speeds.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return base_completions[a] < base_completions[b];
    });

    FillResult result;
    result.completions = base_completions;
    Rational top = base_completions[order.back()];
    if (budget == 0) {
        result.level = base_completions[order.front()];
        result.makespan = top;
        return result;
    }

    Rational remaining = budget;
    Int group_speed = 0;
    Rational level;
    for (int p = 0; p < n; ++p) {
        group_speed += speeds[order[p]];
        const Rational here = base_completions[order[p]];
        const Rational next = (p + 1 < n) ? base_completions[order[p + 1]] : Rational(0);
        if (p + 1 < n) {
            Rational step = (next - here) * Rational(group_speed);
            if (step < remaining) {
                remaining -= step;
                continue;
            }
        }
        level = here + remaining / Rational(group_speed);
        break;
    }

    for (int i = 0; i < n; ++i) {
        result.completions[i] = std::max(base_completions[i], level);
    }
    result.level = level;
    result.makespan = std::max(top, level);
    return result;
}

FractionalAssignment pour_into_gaps(const Instance& instance, FractionalAssignment base,
                                    const std::vector<int>& jobs_to_pour,
                                    std::vector<Rational> gaps_work) {
    const int n = instance.machine_count();
    int cursor = 0;
    for (int j : jobs_to_pour) {
        assert(base.shares(j).empty());
        const Rational len(instance.jobs[j]);
        Rational mass = len;
        while (mass > 0) {
            while (cursor < n && gaps_work[cursor] == 0) {
                ++cursor;
            }
            if (cursor >= n) {
                throw input_error("pour_into_gaps: gaps cannot absorb the poured jobs");
            }
            Rational take = std::min(gaps_work[cursor], mass);
            base.add_share(j, cursor, take / len);
            gaps_work[cursor] -= take;
            mass -= take;
        }
    }
    return base;
}

std::vector<int> lpt_schedule(const Instance& instance) {
    const int n = instance.machine_count();
    std::vector<Int> loads(n, Int(0));
    std::vector<int> machine_of(instance.jobs.size(), 0);
    for (int j : jobs_by_length(instance)) {
        int best = 0;
        // completion after placing = (load + x)/r; compare by cross product
        Int best_num = loads[0] + instance.jobs[j];
        for (int i = 1; i < n; ++i) {
            Int num = loads[i] + instance.jobs[j];
            if (num * instance.speeds[best] < best_num * instance.speeds[i]) {
                best = i;
                best_num = num;
            }
        }
        loads[best] += instance.jobs[j];
        machine_of[j] = best;
    }
    return machine_of;
}

}  // namespace unisplit
