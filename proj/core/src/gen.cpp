#include "unisplit/gen.hpp"

#include "unisplit/errors.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace unisplit {
namespace gen {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(const GenSpec& spec) {
    std::uint64_t h = spec.seed;
    h = mix64(h ^ static_cast<std::uint64_t>(spec.dist));
    h = mix64(h ^ static_cast<std::uint64_t>(spec.m));
    h = mix64(h ^ static_cast<std::uint64_t>(spec.bits));
    h = mix64(h ^ numerator(spec.ratio).convert_to<std::uint64_t>());
    h = mix64(h ^ denominator(spec.ratio).convert_to<std::uint64_t>());
    return h;
}

// Unbiased draw in [lo, hi] by rejection; stable across platforms, unlike
// std::uniform_int_distribution.
std::uint64_t draw_range(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + v % span;
}

}  // namespace

Instance gen_random(const GenSpec& spec) {
    if (spec.m < 1) {
        throw input_error("generator needs m >= 1");
    }
    if (spec.n < 1) {
        throw input_error("generator needs n >= 1");
    }
    if (spec.bits < 2 || spec.bits > 48) {
        throw input_error("generator supports 2..48 bit job lengths");
    }
    if (spec.ratio < 0 || spec.ratio >= 1) {
        throw input_error("uniform ratio must lie in [0, 1)");
    }

    std::mt19937_64 rng(stream_seed(spec));
    const std::uint64_t max_value = (std::uint64_t(1) << spec.bits) - 1;

    std::vector<Int> jobs;
    jobs.reserve(spec.m);
    if (spec.dist == Distribution::uniform) {
        const Rational low_exact = spec.ratio * Rational(max_value);
        const std::uint64_t low = ceil_rat(low_exact).convert_to<std::uint64_t>();
        for (int j = 0; j < spec.m; ++j) {
            std::uint64_t v;
            do {
                v = draw_range(rng, low, max_value);  // re-roll zero draws
            } while (v == 0);
            jobs.emplace_back(v);
        }
    } else {
        const double mean = std::ldexp(1.0, spec.bits - 1);
        for (int j = 0; j < spec.m; ++j) {
            double u;
            do {
                u = std::ldexp(static_cast<double>(rng() >> 11), -53);
            } while (u <= 0.0);
            double v = std::ceil(-mean * std::log(u));
            jobs.emplace_back(static_cast<std::uint64_t>(std::max(1.0, v)));
        }
    }
    return load_instance(std::move(jobs), std::vector<Int>(spec.n, Int(1)));
}

GadgetResult gen_hard_gadget(const std::vector<Int>& list, int n, const Rational& d) {
    if (n < 3) {
        throw input_error("gadget needs n >= 3");
    }
    if (d < 0 || d >= n - 2) {
        throw input_error("gadget needs 0 <= d < n-2");
    }
    if (list.empty() || list.size() % 2 != 0) {
        throw input_error("gadget input must be a non-empty even-length list");
    }
    for (const Int& x : list) {
        if (x < 1) {
            throw input_error("gadget input entries must be positive integers");
        }
    }

    const std::size_t half = list.size() / 2;  // m'
    const Int total = std::accumulate(list.begin(), list.end(), Int(0));

    if (half == 1) {
        GadgetResult out;
        out.kind = list[0] == list[1] ? GadgetResult::Kind::trivially_yes
                                      : GadgetResult::Kind::trivially_no;
        return out;
    }
    for (const Int& x : list) {
        // an entry at or above half the total cannot sit in a bin with m'-1 >= 1
        // further positive entries
        if (2 * x >= total) {
            GadgetResult out;
            out.kind = GadgetResult::Kind::trivially_no;
            return out;
        }
    }

    // scale so that filler = total_scaled * (n-2) * q / (2 * (q(n-2) - p))
    // is integral, d = p/q in lowest terms
    const Int p = numerator(d);
    const Int q = denominator(d);
    const Int divisor = 2 * (q * (n - 2) - p);
    const Int scale = divisor / gcd(divisor, total * (n - 2) * q);
    const Int filler = scale * total * (n - 2) * q / divisor;  // n*M of the gadget

    std::vector<Int> jobs;
    for (const Int& x : list) {
        jobs.push_back(filler - scale * x);  // inverted entries
    }
    const std::size_t fill_count = static_cast<std::size_t>(n - 2) * (half - 1);
    for (std::size_t k = 0; k < fill_count; ++k) {
        jobs.push_back(filler);
    }

    GadgetResult out;
    out.kind = GadgetResult::Kind::instance;
    out.instance = load_instance(std::move(jobs), std::vector<Int>(n, Int(1)));
    return out;
}

std::string distribution_tag(Distribution dist, const Rational& ratio) {
    if (dist == Distribution::exponential) {
        return "exponential";
    }
    return "uniform-" + decimal_string(ratio, 4);
}

}  // namespace gen
}  // namespace unisplit
