#include "unisplit/instance.hpp"

#include "unisplit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace unisplit {

bool Instance::identical_speeds() const {
    return std::all_of(speeds.begin(), speeds.end(),
                       [&](const Int& r) { return r == speeds.front(); });
}

Instance load_instance(std::vector<Int> jobs, std::vector<Int> speeds,
                       const LoadOptions& options) {
    if (speeds.empty()) {
        throw input_error("instance needs at least one machine");
    }
    if (jobs.empty() && !options.allow_empty_jobs) {
        throw input_error("instance has no jobs");
    }
    for (const Int& r : speeds) {
        if (r < 1) {
            throw input_error("machine speeds must be positive integers");
        }
    }
    for (const Int& x : jobs) {
        if (x < 1) {
            throw input_error("job lengths must be positive integers");
        }
    }

    Instance inst;
    inst.total_speed = std::accumulate(speeds.begin(), speeds.end(), Int(0));
    inst.total_work = std::accumulate(jobs.begin(), jobs.end(), Int(0));
    inst.perfect_time = make_rational(inst.total_work, inst.total_speed);
    Int longest = jobs.empty() ? Int(0) : *std::max_element(jobs.begin(), jobs.end());
    inst.max_share = make_rational(longest, inst.total_speed);
    inst.jobs = std::move(jobs);
    inst.speeds = std::move(speeds);
    return inst;
}

FractionalAssignment FractionalAssignment::whole(const std::vector<int>& machine_of) {
    FractionalAssignment fa(machine_of.size());
    for (std::size_t j = 0; j < machine_of.size(); ++j) {
        fa.set_whole(j, machine_of[j]);
    }
    return fa;
}

void FractionalAssignment::add_share(std::size_t job, int machine, const Rational& fraction) {
    if (fraction == 0) {
        return;
    }
    auto& list = shares_[job];
    for (auto it = list.begin(); it != list.end(); ++it) {
        if (it->first == machine) {
            it->second += fraction;
            if (it->second == 0) {
                list.erase(it);
            }
            return;
        }
    }
    list.emplace_back(machine, fraction);
}

void FractionalAssignment::set_whole(std::size_t job, int machine) {
    shares_[job].clear();
    shares_[job].emplace_back(machine, Rational(1));
}

void FractionalAssignment::clear_job(std::size_t job) {
    shares_[job].clear();
}

PartitionView evaluate(const Instance& instance, const FractionalAssignment& assignment) {
    const int n = instance.machine_count();
    if (assignment.job_count() != instance.jobs.size()) {
        throw input_error("assignment does not cover the instance's jobs");
    }

    PartitionView view;
    view.loads.assign(n, Rational(0));
    view.split_jobs = 0;
    view.splittings = 0;

    for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
        const auto& shares = assignment.shares(j);
        if (shares.empty()) {
            throw input_error("job has empty support");
        }
        Rational sum = 0;
        for (const auto& [machine, fraction] : shares) {
            if (machine < 0 || machine >= n) {
                throw input_error("share references a machine outside the instance");
            }
            if (fraction < 0) {
                throw input_error("negative fraction in assignment");
            }
            sum += fraction;
            view.loads[machine] += fraction * Rational(instance.jobs[j]);
        }
        if (sum != 1) {
            throw input_error("fractions of a job do not sum to 1");
        }
        if (shares.size() >= 2) {
            ++view.split_jobs;
            view.splittings += static_cast<int>(shares.size()) - 1;
        }
    }

    view.completions.reserve(n);
    for (int i = 0; i < n; ++i) {
        view.completions.push_back(view.loads[i] / Rational(instance.speeds[i]));
    }
    view.makespan = *std::max_element(view.completions.begin(), view.completions.end());
    return view;
}

std::vector<int> jobs_by_length(const Instance& instance) {
    std::vector<int> order(instance.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return instance.jobs[a] > instance.jobs[b];
    });
    return order;
}

}  // namespace unisplit
