#include "unisplit/dp.hpp"

#include "unisplit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace unisplit {
namespace dp {

namespace {

// Geometric trim grid with step 1 + eps/(2*g*m) (g = 1). Cells are intervals
// of integer loads whose endpoints stay within one step factor, so states
// merged into one cell are [D,Delta]-close; after m transitions the
// accumulated factor is (1 + eps/(2m))^m <= 1 + eps. Load 0 is its own cell.
class TrimGrid {
public:
    TrimGrid(const Rational& epsilon, int m, const Int& max_load) {
        if (epsilon == 0 || m == 0 || max_load <= 1) {
            exact_ = true;
            return;
        }
        Rational eps = epsilon > 1 ? Rational(1) : epsilon;
        const Int two_gm = Int(2) * m;
        // first load where a cell can hold two integers: v >= 2gm/eps
        if (two_gm * denominator(eps) >= numerator(eps) * max_load) {
            exact_ = true;  // grid finer than the integers; merging impossible
            return;
        }
        const Int step_num = two_gm * denominator(eps) + numerator(eps);  // 1 + eps/2gm
        const Int step_den = two_gm * denominator(eps);
        Int v = 1;
        while (v <= max_load) {
            starts_.push_back(v);
            Int end = (v * step_num) / step_den;  // largest value within ratio
            v = (end >= v) ? end + 1 : v + 1;
        }
    }

    bool exact() const { return exact_; }
    std::size_t cell_count() const { return starts_.size() + 1; }

    // 0 is reserved for load 0; interval k maps to k+1.
    std::int64_t cell_of(const Int& v) const {
        if (v == 0) {
            return 0;
        }
        auto it = std::upper_bound(starts_.begin(), starts_.end(), v);
        return static_cast<std::int64_t>(it - starts_.begin());
    }

private:
    bool exact_ = false;
    std::vector<Int> starts_;
};

struct EngineConfig {
    std::vector<Int> jobs;
    std::vector<Int> speeds;
    Rational epsilon;
    int critical = -1;               // -1: no cap
    Rational cap_load;               // max load on the critical machine (work units)
    bool with_counts = false;        // track per-machine job counts (2 machines)
    std::array<int, 2> targets{0, 0};
    bool objective_excludes_critical = false;
    std::size_t max_layer_states = kDefaultMaxLayerStates;
};

struct Node {
    std::vector<Int> loads;
    std::array<std::int32_t, 2> counts{0, 0};
    std::int32_t parent = -1;
    std::int8_t machine = -1;
};

struct EngineResult {
    bool feasible = false;
    Rational objective;
    std::vector<int> machine_of;
    DpStats stats;
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto v : key) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class Engine {
public:
    explicit Engine(EngineConfig cfg) : cfg_(std::move(cfg)), n_(static_cast<int>(cfg_.speeds.size())) {
        Int total = std::accumulate(cfg_.jobs.begin(), cfg_.jobs.end(), Int(0));
        grid_.emplace(cfg_.epsilon, static_cast<int>(cfg_.jobs.size()), total);
        if (cfg_.critical >= 0) {
            cap_num_ = numerator(cfg_.cap_load);
            cap_den_ = denominator(cfg_.cap_load);
        }
    }

    EngineResult run() {
        const int m = static_cast<int>(cfg_.jobs.size());
        layers_.clear();
        layers_.reserve(m + 1);

        Node root;
        root.loads.assign(n_, Int(0));
        layers_.push_back({root});

        DpStats stats;
        stats.trimming_active = !grid_->exact();
#ifndef NDEBUG
        Int cell_bound = 0;
        if (stats.trimming_active) {
            Int total = std::accumulate(cfg_.jobs.begin(), cfg_.jobs.end(), Int(0));
            cell_bound = trimming_cell_bound(m, cfg_.epsilon, total);
        }
#endif

        for (int k = 0; k < m; ++k) {
            const Int& x = cfg_.jobs[k];
            std::vector<Node> next;
            std::unordered_map<std::vector<std::int64_t>, std::int32_t, KeyHash> cells;
            next.reserve(layers_.back().size());

            for (std::size_t idx = 0; idx < layers_.back().size(); ++idx) {
                const Node& node = layers_.back()[idx];
                for (int i = 0; i < n_; ++i) {
                    if (i == cfg_.critical && !fits_cap(node.loads[i], x)) {
                        continue;
                    }
                    Node child;
                    child.loads = node.loads;
                    child.loads[i] += x;
                    child.counts = node.counts;
                    if (cfg_.with_counts) {
                        ++child.counts[i];
                    }
                    child.parent = static_cast<std::int32_t>(idx);
                    child.machine = static_cast<std::int8_t>(i);
                    insert(next, cells, std::move(child));
                }
            }
            stats.max_layer_states = std::max(stats.max_layer_states, next.size());
            track_cells(stats, next);
#ifndef NDEBUG
            if (stats.trimming_active) {
                assert(Int(stats.max_cells_per_coordinate) <= cell_bound);
            }
#endif
            layers_.push_back(std::move(next));
        }

        return finish(stats);
    }

private:
    bool fits_cap(const Int& load, const Int& x) const {
        return (load + x) * cap_den_ <= cap_num_;
    }

    // Objective value of a node, in completion-time units.
    Rational objective_of(const Node& node) const {
        Rational top = 0;
        for (int i = 0; i < n_; ++i) {
            if (cfg_.objective_excludes_critical && i == cfg_.critical) {
                continue;
            }
            Rational completion = make_rational(node.loads[i], cfg_.speeds[i]);
            top = std::max(top, completion);
        }
        return top;
    }

    // Representative priority inside one trim cell: smallest critical load
    // first (keeps every continuation the merged states had), then smallest
    // objective, then lexicographically smallest loads.
    bool better_rep(const Node& a, const Node& b) const {
        if (cfg_.critical >= 0 && a.loads[cfg_.critical] != b.loads[cfg_.critical]) {
            return a.loads[cfg_.critical] < b.loads[cfg_.critical];
        }
        Rational oa = objective_of(a);
        Rational ob = objective_of(b);
        if (oa != ob) {
            return oa < ob;
        }
        return a.loads < b.loads;
    }

    void insert(std::vector<Node>& next,
                std::unordered_map<std::vector<std::int64_t>, std::int32_t, KeyHash>& cells,
                Node child) {
        std::vector<std::int64_t> key;
        key.reserve(n_ + 2);
        if (grid_->exact()) {
            // exact dedup: encode each load as 62-bit limbs with a separator
            for (const Int& v : child.loads) {
                Int rest = v;
                while (rest > 0) {
                    key.push_back(static_cast<std::int64_t>(rest & 0x3fffffffffffffff));
                    rest >>= 62;
                }
                key.push_back(-1);
            }
        } else {
            for (const Int& v : child.loads) {
                key.push_back(grid_->cell_of(v));
            }
        }
        if (cfg_.with_counts) {
            key.push_back(child.counts[0]);
            key.push_back(child.counts[1]);
        }
        auto [it, inserted] = cells.try_emplace(std::move(key), static_cast<std::int32_t>(next.size()));
        if (inserted) {
            next.push_back(std::move(child));
            if (next.size() > cfg_.max_layer_states) {
                throw budget_error("dp state budget exceeded; use a larger epsilon");
            }
            return;
        }
        Node& held = next[it->second];
        if (grid_->exact()) {
            return;  // identical state
        }
        if (better_rep(child, held)) {
            held = std::move(child);
        }
    }

    void track_cells(DpStats& stats, const std::vector<Node>& layer) const {
        if (grid_->exact()) {
            return;
        }
        for (int i = 0; i < n_; ++i) {
            std::vector<std::int64_t> seen;
            seen.reserve(layer.size());
            for (const Node& node : layer) {
                seen.push_back(grid_->cell_of(node.loads[i]));
            }
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            stats.max_cells_per_coordinate =
                std::max(stats.max_cells_per_coordinate, seen.size());
        }
    }

    EngineResult finish(DpStats stats) {
        EngineResult result;
        result.stats = stats;
        const std::vector<Node>& last = layers_.back();
        const Node* best = nullptr;
        Rational best_obj;
        for (const Node& node : last) {
            if (cfg_.with_counts &&
                (node.counts[0] != cfg_.targets[0] || node.counts[1] != cfg_.targets[1])) {
                continue;
            }
            Rational obj = objective_of(node);
            if (best == nullptr || obj < best_obj) {
                best = &node;
                best_obj = obj;
            }
        }
        if (best == nullptr) {
            return result;
        }
        result.feasible = true;
        result.objective = best_obj;
        result.machine_of.assign(cfg_.jobs.size(), 0);
        const Node* cursor = best;
        for (int k = static_cast<int>(cfg_.jobs.size()); k > 0; --k) {
            result.machine_of[k - 1] = cursor->machine;
            cursor = &layers_[k - 1][cursor->parent];
        }
        return result;
    }

    EngineConfig cfg_;
    int n_;
    std::optional<TrimGrid> grid_;
    Int cap_num_, cap_den_;
    std::vector<std::vector<Node>> layers_;
};

DpOutcome to_outcome(EngineResult res) {
    DpOutcome out;
    out.objective = std::move(res.objective);
    out.assignment = FractionalAssignment::whole(res.machine_of);
    out.stats = res.stats;
    return out;
}

}  // namespace

DpOutcome fptas_uniminmax_raw(const std::vector<Int>& jobs, const std::vector<Int>& speeds,
                              const Rational& epsilon, std::size_t max_layer_states) {
    if (epsilon < 0) {
        throw input_error("epsilon must be >= 0");
    }
    EngineConfig cfg;
    cfg.jobs = jobs;
    cfg.speeds = speeds;
    cfg.epsilon = epsilon;
    cfg.max_layer_states = max_layer_states;
    Engine engine(std::move(cfg));
    EngineResult res = engine.run();
    assert(res.feasible);
    return to_outcome(std::move(res));
}

DpOutcome fptas_uniminmax(const Instance& instance, const Rational& epsilon,
                          std::size_t max_layer_states) {
    return fptas_uniminmax_raw(instance.jobs, instance.speeds, epsilon, max_layer_states);
}

DpOutcome fptas_uniminmax_cc(const Instance& instance, int critical, const Rational& t,
                             const Rational& epsilon, std::size_t max_layer_states) {
    if (epsilon < 0) {
        throw input_error("epsilon must be >= 0");
    }
    if (critical < 0 || critical >= instance.machine_count() || instance.machine_count() < 2) {
        throw input_error("invalid critical coordinate");
    }
    if (t < 0) {
        throw input_error("critical cap needs t >= 0");
    }
    EngineConfig cfg;
    cfg.jobs = instance.jobs;
    cfg.speeds = instance.speeds;
    cfg.epsilon = epsilon;
    cfg.critical = critical;
    cfg.cap_load = (Rational(1) + t) * instance.perfect_time * Rational(instance.speeds[critical]);
    cfg.objective_excludes_critical = true;
    cfg.max_layer_states = max_layer_states;
    Engine engine(std::move(cfg));
    EngineResult res = engine.run();
    assert(res.feasible);  // every job can avoid the critical machine
    return to_outcome(std::move(res));
}

std::optional<DpOutcome> fptas_cc_card(const std::vector<Int>& jobs,
                                       const std::array<Int, 2>& speeds, const Rational& t1,
                                       const Rational& t2, int critical, int m1, int m2,
                                       const Rational& epsilon, std::size_t max_layer_states) {
    if (epsilon < 0) {
        throw input_error("epsilon must be >= 0");
    }
    if (m1 < 0 || m2 < 0 || m1 + m2 != static_cast<int>(jobs.size())) {
        throw input_error("cardinality targets must be non-negative and sum to the job count");
    }
    if (critical != 0 && critical != 1) {
        throw input_error("critical coordinate must be 0 or 1");
    }
    for (const Int& x : jobs) {
        if (x < 0) {
            throw input_error("job lengths must be non-negative");
        }
    }
    Int total = std::accumulate(jobs.begin(), jobs.end(), Int(0));
    Rational s = make_rational(total, speeds[0] + speeds[1]);
    const Rational& t_crit = critical == 0 ? t1 : t2;

    Rational cap_load = (Rational(1) + t_crit) * s * Rational(speeds[critical]);
    if (cap_load < 0) {
        return std::nullopt;  // even an empty critical machine violates the cap
    }

    EngineConfig cfg;
    cfg.jobs = jobs;
    cfg.speeds = {speeds[0], speeds[1]};
    cfg.epsilon = epsilon;
    cfg.critical = critical;
    cfg.cap_load = cap_load;
    cfg.with_counts = true;
    cfg.targets = {m1, m2};
    cfg.max_layer_states = max_layer_states;
    Engine engine(std::move(cfg));
    EngineResult res = engine.run();
    if (!res.feasible) {
        return std::nullopt;
    }
    return to_outcome(std::move(res));
}

Int trimming_cell_bound(int m, const Rational& epsilon, const Int& total_work) {
    if (epsilon <= 0) {
        throw input_error("cell bound needs epsilon > 0");
    }
    Int log2_total = 1;
    Int p = 2;
    while (p < total_work) {
        p *= 2;
        ++log2_total;
    }
    // ceil((1 + 2m/eps) * log2_total)
    Rational bound = (Rational(1) + Rational(2 * m) / epsilon) * Rational(log2_total);
    return ceil_rat(bound);
}

}  // namespace dp
}  // namespace unisplit
