#pragma once

#include "unisplit/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unisplit {
namespace gen {

enum class Distribution { uniform, exponential };

struct GenSpec {
    Distribution dist = Distribution::uniform;
    Rational ratio = 0;  // uniform draws from [ceil(ratio*Max), Max], Max = 2^bits - 1
    int m = 0;
    int bits = 16;
    int n = 1;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed spec; identical machines (speed 1). The job
// stream depends on (dist, ratio, m, bits, seed) but not on n, so the same
// jobs can be scheduled onto different machine counts.
Instance gen_random(const GenSpec& spec);

struct GadgetResult {
    enum class Kind { instance, trivially_no, trivially_yes } kind;
    std::optional<Instance> instance;  // present for Kind::instance
};

// Hardness gadget: scales the input list so all constructed lengths are
// integral, inverts each entry against the longest constructed job and pads
// with filler jobs. The gadget is d-possible iff the input list admits an
// equal-sum equal-cardinality partition. Lists where one entry reaches half
// the total are answered directly (trivially_no / trivially_yes).
GadgetResult gen_hard_gadget(const std::vector<Int>& eq_card_list, int n, const Rational& d);

std::string distribution_tag(Distribution dist, const Rational& ratio);

}  // namespace gen
}  // namespace unisplit
