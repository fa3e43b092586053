#include "unisplit/bench.hpp"

#include "unisplit/cga.hpp"
#include "unisplit/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace unisplit {
namespace bench {

namespace {

struct Setting {
    BenchConfig::Dist dist;
    int m;
    int bits;
    int n;
};

struct Row {
    bool timeout = false;
    Rational opt;
    Rational perfect;
    Rational gap;  // 100 * (opt - perfect) / perfect
};

struct CellResult {                 // one (setting, s)
    std::vector<Row> per_seed;
    bool mean_valid = false;
    Rational mean_opt, mean_gap, mean_perfect;
};

std::string rational_cols(const Rational& v) {
    return numerator(v).str() + "," + denominator(v).str() + "," + decimal_string(v);
}

void emit_row(std::ostream& csv, const Setting& st, int s, const std::string& seed,
              const Row* row, const CellResult* mean) {
    csv << gen::distribution_tag(st.dist.dist, st.dist.ratio) << "," << st.m << "," << st.bits
        << "," << st.n << "," << s << "," << seed << ",";
    if (row != nullptr) {
        if (row->timeout) {
            csv << ",,timeout," << rational_cols(row->perfect) << ",,,timeout\n";
        } else {
            csv << rational_cols(row->opt) << "," << rational_cols(row->perfect) << ","
                << rational_cols(row->gap) << "\n";
        }
        return;
    }
    if (!mean->mean_valid) {
        csv << ",,timeout,,,timeout,,,timeout\n";
    } else {
        csv << rational_cols(mean->mean_opt) << "," << rational_cols(mean->mean_perfect) << ","
            << rational_cols(mean->mean_gap) << "\n";
    }
}

void write_svg(const std::string& path, const Setting& base, int n_min, int n_max,
               const std::vector<std::vector<CellResult>>& cells_by_n) {
    const int width = 720, height = 480;
    const int left = 70, right = 30, top = 40, bottom = 60;
    double max_gap = 0.0;
    int max_s = 1;
    for (const auto& per_s : cells_by_n) {
        for (std::size_t s = 0; s < per_s.size(); ++s) {
            if (per_s[s].mean_valid) {
                max_gap = std::max(max_gap, numerator(per_s[s].mean_gap).convert_to<double>() /
                                                denominator(per_s[s].mean_gap).convert_to<double>());
            }
        }
        max_s = std::max(max_s, static_cast<int>(per_s.size()) - 1);
    }
    if (max_gap <= 0.0) {
        max_gap = 1.0;
    }

    static const char* palette[] = {"#04589b", "#d55e00", "#009e73", "#cc79a7",
                                    "#b8a000", "#56b4e9", "#808080", "#9a3ac4", "#203020"};
    std::ofstream svg(path);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto sx = [&](double s) { return left + s / std::max(1, max_s) * (width - left - right); };
    auto sy = [&](double g) { return height - bottom - g / max_gap * (height - top - bottom); };

    svg << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
        << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << (width / 2) << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"14\">number of split jobs s</text>\n";
    svg << "<text x=\"18\" y=\"" << (height / 2)
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << (height / 2) << ")\">mean gap percent</text>\n";
    svg << "<text x=\"" << (width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << gen::distribution_tag(base.dist.dist, base.dist.ratio) << ", m=" << base.m << ", "
        << base.bits << "-bit</text>\n";
    for (int s = 0; s <= max_s; ++s) {
        svg << "<text x=\"" << sx(s) << "\" y=\"" << height - bottom + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << s << "</text>\n";
    }
    std::ostringstream ylab;
    ylab << std::fixed << std::setprecision(2) << max_gap;
    svg << "<text x=\"" << left - 8 << "\" y=\"" << sy(max_gap) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << ylab.str() << "</text>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << sy(0) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";

    for (std::size_t k = 0; k < cells_by_n.size(); ++k) {
        const auto& per_s = cells_by_n[k];
        const char* color = palette[k % 9];
        std::ostringstream pts;
        for (std::size_t s = 0; s < per_s.size(); ++s) {
            if (!per_s[s].mean_valid) {
                continue;
            }
            double g = numerator(per_s[s].mean_gap).convert_to<double>() /
                       denominator(per_s[s].mean_gap).convert_to<double>();
            pts << sx(static_cast<double>(s)) << "," << sy(g) << " ";
        }
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
            << pts.str() << "\"/>\n";
        svg << "<text x=\"" << width - right - 4 << "\" y=\"" << top + 16 * (k + 1)
            << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">n="
            << (n_min + static_cast<int>(k)) << "</text>\n";
    }
    svg << "</svg>\n";
}

}  // namespace

BenchConfig default_config() {
    BenchConfig cfg;
    for (const char* r : {"0", "0.5", "0.9", "0.99"}) {
        cfg.distributions.push_back({gen::Distribution::uniform, parse_rational(r)});
    }
    cfg.distributions.push_back({gen::Distribution::exponential, Rational(0)});
    return cfg;
}

BenchConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open bench config: " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed bench config: ") + e.what());
    }

    BenchConfig cfg;
    if (doc.contains("distributions")) {
        for (const auto& tag : doc["distributions"]) {
            const std::string name = tag.get<std::string>();
            if (name == "exponential") {
                cfg.distributions.push_back({gen::Distribution::exponential, Rational(0)});
            } else if (name.rfind("uniform-", 0) == 0) {
                cfg.distributions.push_back(
                    {gen::Distribution::uniform, parse_rational(name.substr(8))});
            } else {
                throw input_error("unknown distribution tag: " + name);
            }
        }
    } else {
        cfg.distributions = default_config().distributions;
    }
    if (doc.contains("m")) {
        cfg.m_values = doc["m"].get<std::vector<int>>();
    }
    if (doc.contains("bits")) {
        cfg.bits_values = doc["bits"].get<std::vector<int>>();
    }
    cfg.n_min = doc.value("n_min", cfg.n_min);
    cfg.n_max = doc.value("n_max", cfg.n_max);
    cfg.seeds = doc.value("seeds", cfg.seeds);
    cfg.workers = doc.value("workers", cfg.workers);
    cfg.row_timeout = std::chrono::milliseconds(
        doc.value("cell_timeout_ms", static_cast<std::int64_t>(cfg.row_timeout.count())));
    return cfg;
}

BenchSummary run_bench(const BenchConfig& config, std::ostream& csv, const std::string& svg_dir) {
    std::vector<Setting> settings;
    for (const auto& dist : config.distributions) {
        for (int m : config.m_values) {
            for (int bits : config.bits_values) {
                for (int n = config.n_min; n <= config.n_max; ++n) {
                    settings.push_back({dist, m, bits, n});
                }
            }
        }
    }

    // validate the grid up front; worker threads only ever see budget errors
    for (const auto& dist : config.distributions) {
        for (int m : config.m_values) {
            for (int bits : config.bits_values) {
                gen::gen_random({dist.dist, dist.ratio, m, bits, std::max(1, config.n_min), 0});
            }
        }
    }
    if (config.seeds < 1 || config.n_min < 1 || config.n_min > config.n_max) {
        throw input_error("bench config: seeds >= 1 and 1 <= n_min <= n_max required");
    }

    // results[setting][s] holds the per-seed rows for that cell
    std::vector<std::vector<CellResult>> results(settings.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= settings.size()) {
                return;
            }
            const Setting& st = settings[idx];
            auto& cells = results[idx];
            cells.resize(st.n);
            for (int s = 0; s < st.n; ++s) {
                CellResult& cell = cells[s];
                cell.per_seed.resize(config.seeds);
                int ok = 0;
                Rational opt_sum = 0, gap_sum = 0, perfect_sum = 0;
                for (int seed = 0; seed < config.seeds; ++seed) {
                    gen::GenSpec spec{st.dist.dist, st.dist.ratio, st.m, st.bits, st.n,
                                      static_cast<std::uint64_t>(seed)};
                    Instance inst = gen_random(spec);
                    Row& row = cell.per_seed[seed];
                    row.perfect = inst.perfect_time;
                    cga::CgaOptions opts;
                    opts.deadline = std::chrono::steady_clock::now() + config.row_timeout;
                    try {
                        split::SolveResult sol = cga::solve_split_cga(inst, s, opts);
                        row.opt = sol.makespan;
                        row.gap = Rational(100) * (sol.makespan - inst.perfect_time) /
                                  inst.perfect_time;
                        opt_sum += row.opt;
                        gap_sum += row.gap;
                        perfect_sum += row.perfect;
                        ++ok;
                    } catch (const budget_error&) {
                        row.timeout = true;
                    }
                }
                if (ok > 0) {
                    cell.mean_valid = true;
                    cell.mean_opt = opt_sum / ok;
                    cell.mean_gap = gap_sum / ok;
                    cell.mean_perfect = perfect_sum / ok;
                }
            }
        }
    };

    const int workers = std::max(1, config.workers);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& th : pool) {
        th.join();
    }

    csv << "distribution,m,bits,n,s,seed,opt_num,opt_den,opt_dec,"
           "perfect_num,perfect_den,perfect_dec,"
           "gap_percent_num,gap_percent_den,gap_percent_dec\n";
    BenchSummary summary;
    summary.settings = static_cast<int>(settings.size());
    for (std::size_t idx = 0; idx < settings.size(); ++idx) {
        const Setting& st = settings[idx];
        const auto& cells = results[idx];
        const int s_half = (st.n + 1) / 2;
        bool monotone = true;
        for (int s = 0; s < st.n; ++s) {
            const CellResult& cell = cells[s];
            for (int seed = 0; seed < config.seeds; ++seed) {
                emit_row(csv, st, s, std::to_string(seed), &cell.per_seed[seed], nullptr);
                summary.timeouts += cell.per_seed[seed].timeout ? 1 : 0;
            }
            emit_row(csv, st, s, "mean", nullptr, &cell);
            if (s > 0 && cell.mean_valid && cells[s - 1].mean_valid &&
                cell.mean_gap > cells[s - 1].mean_gap) {
                monotone = false;
            }
        }
        if (!monotone) {
            ++summary.monotonicity_violations;
        }
        if (s_half < st.n && cells[s_half].mean_valid && cells[s_half].mean_gap == 0) {
            ++summary.half_split_perfect;
        }
    }

    if (!svg_dir.empty()) {
        // one chart per (distribution, m, bits); curves indexed by n
        std::map<std::string, std::vector<std::size_t>> charts;
        for (std::size_t idx = 0; idx < settings.size(); ++idx) {
            const Setting& st = settings[idx];
            std::string key = gen::distribution_tag(st.dist.dist, st.dist.ratio) + "_m" +
                              std::to_string(st.m) + "_bits" + std::to_string(st.bits);
            charts[key].push_back(idx);
        }
        for (const auto& [key, members] : charts) {
            std::vector<std::vector<CellResult>> by_n;
            for (std::size_t idx : members) {
                by_n.push_back(results[idx]);
            }
            write_svg(svg_dir + "/gap_" + key + ".svg", settings[members.front()], config.n_min,
                      config.n_max, by_n);
        }
    }
    return summary;
}

}  // namespace bench
}  // namespace unisplit
