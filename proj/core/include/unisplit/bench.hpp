#pragma once

#include "unisplit/gen.hpp"
#include "unisplit/rational.hpp"

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace unisplit {
namespace bench {

struct BenchConfig {
    struct Dist {
        gen::Distribution dist;
        Rational ratio;
    };
    std::vector<Dist> distributions;
    std::vector<int> m_values{10, 13, 15};
    std::vector<int> bits_values{16, 32};
    int n_min = 2;
    int n_max = 10;
    int seeds = 7;
    int workers = 1;
    std::chrono::milliseconds row_timeout{600000};
};

// The experiment grid: every distribution, m in {10,13,15}, 16/32-bit jobs,
// n in 2..10, s in 0..n-1, seven seeds per combination.
BenchConfig default_config();
BenchConfig read_config_file(const std::string& path);

struct BenchSummary {
    int settings = 0;             // (distribution, m, bits, n) combinations
    int half_split_perfect = 0;   // settings where s = ceil(n/2) reaches mean gap 0
    int timeouts = 0;             // timed-out rows
    int monotonicity_violations = 0;  // cells whose mean gap increases in s
};

// Runs the grid with solve_split_cga, writes one CSV row per (setting, s,
// seed) plus a mean row per (setting, s); emits one SVG chart per
// (distribution, m, bits) when svg_dir is non-empty. Output is byte-stable
// for a fixed config, independent of the worker count.
BenchSummary run_bench(const BenchConfig& config, std::ostream& csv, const std::string& svg_dir);

}  // namespace bench
}  // namespace unisplit
