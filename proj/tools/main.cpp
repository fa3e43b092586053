#include "unisplit/bench.hpp"
#include "unisplit/cga.hpp"
#include "unisplit/errors.hpp"
#include "unisplit/gen.hpp"
#include "unisplit/interval.hpp"
#include "unisplit/io.hpp"
#include "unisplit/oracle.hpp"
#include "unisplit/split.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace unisplit;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitRegime = 3;
constexpr int kExitBudget = 4;

void print_value(const char* label, const Rational& v) {
    std::cout << label << " " << fraction_string(v) << " (" << decimal_string(v) << ")\n";
}

void print_witness(const Instance& inst, const FractionalAssignment& fa) {
    PartitionView view = evaluate(inst, fa);
    for (int i = 0; i < inst.machine_count(); ++i) {
        std::cout << "  machine " << i + 1 << " (speed " << inst.speeds[i] << "):";
        bool empty = true;
        for (std::size_t j = 0; j < fa.job_count(); ++j) {
            for (const auto& [machine, fraction] : fa.shares(j)) {
                if (machine != i) {
                    continue;
                }
                empty = false;
                std::cout << " job" << j + 1;
                if (fraction != 1) {
                    std::cout << "[" << fraction_string(fraction * Rational(inst.jobs[j]))
                              << " of " << inst.jobs[j] << "]";
                }
            }
        }
        if (empty) {
            std::cout << " (idle)";
        }
        std::cout << "  | completion " << fraction_string(view.completions[i]) << " ("
                  << decimal_string(view.completions[i]) << ")\n";
    }
    std::cout << "  split jobs " << view.split_jobs << ", splittings " << view.splittings
              << "\n";
}

int report_solution(const Instance& inst, const split::SolveResult& sol) {
    print_value("makespan", sol.makespan);
    print_value("perfect", inst.perfect_time);
    std::cout << "split jobs used " << sol.split_jobs_used << "\n";
    print_witness(inst, sol.assignment);
    return kExitYes;
}

int report_decision(const Instance& inst, const interval::Decision& dec) {
    if (!dec.yes) {
        std::cout << "no\n";
        return kExitNo;
    }
    std::cout << "yes\n";
    print_witness(inst, *dec.witness);
    return kExitYes;
}

int run(int argc, char** argv) {
    CLI::App app{"uniform-machine makespan solver with a bounded number of split jobs"};
    app.require_subcommand(1);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "minimize makespan with at most S split jobs");
    std::string solve_instance;
    int solve_splits = 0;
    bool solve_exact = false, solve_cga = false;
    std::string solve_eps;
    solve->add_option("--instance", solve_instance, "instance JSON file")->required();
    solve->add_option("--splits", solve_splits, "maximum number of split jobs")->required();
    auto* exact_flag = solve->add_flag("--exact", solve_exact, "exact binary-search solver");
    auto* fptas_opt = solve->add_option("--fptas", solve_eps, "FPTAS with this epsilon");
    auto* cga_flag = solve->add_flag("--cga", solve_cga, "complete greedy search (identical machines)");
    exact_flag->excludes(fptas_opt)->excludes(cga_flag);
    fptas_opt->excludes(cga_flag);

    // ---- decide-interval ----
    auto* dint = app.add_subcommand("decide-interval",
                                    "is some whole-job makespan within the interval?");
    std::string dint_instance, dint_d, dint_t;
    dint->add_option("--instance", dint_instance, "instance JSON file")->required();
    auto* d_opt = dint->add_option("--d", dint_d, "absolute slack: cap S + d*M");
    auto* t_opt = dint->add_option("--t", dint_t, "relative slack: cap (1+t)*S");
    d_opt->excludes(t_opt);

    // ---- decide-split ----
    auto* dsplit = app.add_subcommand("decide-split",
                                      "is makespan <= (1+t)*S reachable with <= S split jobs?");
    std::string dsplit_instance, dsplit_t;
    int dsplit_splits = 0;
    dsplit->add_option("--instance", dsplit_instance, "instance JSON file")->required();
    dsplit->add_option("--splits", dsplit_splits, "maximum number of split jobs")->required();
    dsplit->add_option("--t", dsplit_t, "relative slack")->required();

    // ---- gen ----
    auto* gencmd = app.add_subcommand("gen", "generate a random or gadget instance");
    std::string gen_uniform, gen_gadget, gen_d, gen_out;
    bool gen_exponential = false;
    int gen_m = 13, gen_bits = 16, gen_n = 3;
    std::uint64_t gen_seed = 0;
    auto* uni_opt = gencmd->add_option("--uniform", gen_uniform, "uniform with ratio R");
    auto* exp_flag = gencmd->add_flag("--exponential", gen_exponential, "exponential lengths");
    auto* gadget_opt = gencmd->add_option("--gadget", gen_gadget,
                                          "equal-cardinality list file for the hardness gadget");
    auto* gend_opt = gencmd->add_option("--d", gen_d, "gadget slack d < n-2");
    gencmd->add_option("--m", gen_m, "number of jobs");
    gencmd->add_option("--bits", gen_bits, "bits per job length");
    gencmd->add_option("--n", gen_n, "number of machines");
    gencmd->add_option("--seed", gen_seed, "random seed");
    gencmd->add_option("--out", gen_out, "output instance file")->required();
    uni_opt->excludes(exp_flag)->excludes(gadget_opt);
    exp_flag->excludes(gadget_opt);
    gadget_opt->needs(gend_opt);

    // ---- bench ----
    auto* bench_cmd = app.add_subcommand("bench", "run the experiment grid");
    std::string bench_config, bench_out, bench_svg;
    int bench_workers = 0;
    bench_cmd->add_option("--config", bench_config, "bench config JSON file");
    bench_cmd->add_option("--out", bench_out, "output CSV file")->required();
    bench_cmd->add_option("--svg", bench_svg, "directory for SVG charts");
    bench_cmd->add_option("--workers", bench_workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        Instance inst = io::read_instance_file(solve_instance);
        if (!solve_exact && solve_eps.empty() && !solve_cga) {
            solve_exact = true;
        }
        if (solve_exact) {
            return report_solution(inst, split::solve_split(inst, solve_splits));
        }
        if (solve_cga) {
            return report_solution(inst, cga::solve_split_cga(inst, solve_splits));
        }
        return report_solution(inst,
                               split::fptas_split(inst, solve_splits, parse_rational(solve_eps)));
    }

    if (dint->parsed()) {
        Instance inst = io::read_instance_file(dint_instance);
        if (d_opt->count() == 0 && t_opt->count() == 0) {
            throw input_error("decide-interval needs --d or --t");
        }
        Rational d;
        if (d_opt->count() > 0) {
            d = parse_rational(dint_d);
        } else {
            // t*S = d*M
            Rational t = parse_rational(dint_t);
            if (t < 0) {
                throw input_error("--t must be >= 0");
            }
            d = t * inst.perfect_time / inst.max_share;
        }
        if (d < 0) {
            throw input_error("--d must be >= 0");
        }
        const int n = inst.machine_count();
        interval::Decision dec;
        if (n == 1) {
            dec.yes = true;  // the single machine finishes exactly at S
            dec.witness = FractionalAssignment::whole(std::vector<int>(inst.job_count(), 0));
        } else if (n == 2) {
            Rational t = d * inst.max_share / inst.perfect_time;
            dec = interval::decide_t_two(inst, t);
        } else {
            dec = interval::decide_d(inst, d);
        }
        return report_decision(inst, dec);
    }

    if (dsplit->parsed()) {
        Instance inst = io::read_instance_file(dsplit_instance);
        Rational t = parse_rational(dsplit_t);
        return report_decision(inst, split::decide_split(inst, dsplit_splits, t));
    }

    if (gencmd->parsed()) {
        if (gadget_opt->count() > 0) {
            std::vector<Int> list = io::read_int_list_file(gen_gadget);
            gen::GadgetResult gadget = gen::gen_hard_gadget(list, gen_n, parse_rational(gen_d));
            if (gadget.kind != gen::GadgetResult::Kind::instance) {
                std::cout << (gadget.kind == gen::GadgetResult::Kind::trivially_no
                                  ? "trivially-no: an entry reaches half the total\n"
                                  : "trivially-yes: the two entries are equal\n");
                return gadget.kind == gen::GadgetResult::Kind::trivially_no ? kExitNo : kExitYes;
            }
            io::write_instance_file(gen_out, *gadget.instance);
            std::cout << "gadget instance with " << gadget.instance->job_count() << " jobs on "
                      << gen_n << " machines -> " << gen_out << "\n";
            return kExitYes;
        }
        gen::GenSpec spec;
        spec.m = gen_m;
        spec.bits = gen_bits;
        spec.n = gen_n;
        spec.seed = gen_seed;
        if (gen_exponential) {
            spec.dist = gen::Distribution::exponential;
        } else {
            spec.dist = gen::Distribution::uniform;
            spec.ratio = gen_uniform.empty() ? Rational(0) : parse_rational(gen_uniform);
        }
        Instance inst = gen_random(spec);
        io::write_instance_file(gen_out, inst);
        std::cout << gen::distribution_tag(spec.dist, spec.ratio) << " instance with " << spec.m
                  << " jobs on " << spec.n << " machines -> " << gen_out << "\n";
        return kExitYes;
    }

    if (bench_cmd->parsed()) {
        bench::BenchConfig cfg =
            bench_config.empty() ? bench::default_config() : bench::read_config_file(bench_config);
        if (bench_workers > 0) {
            cfg.workers = bench_workers;
        }
        std::ofstream csv(bench_out);
        if (!csv) {
            throw input_error("cannot open CSV output: " + bench_out);
        }
        bench::BenchSummary summary = bench::run_bench(cfg, csv, bench_svg);
        std::cout << "settings " << summary.settings << ", timeouts " << summary.timeouts
                  << ", monotonicity violations " << summary.monotonicity_violations << "\n";
        std::cout << "fraction of settings where s = ceil(n/2) reaches a perfect partition: "
                  << summary.half_split_perfect << "/" << summary.settings << "\n";
        return kExitYes;
    }

    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const unisplit::regime_error& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const unisplit::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const unisplit::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
