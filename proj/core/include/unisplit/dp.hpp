#pragma once

#include "unisplit/instance.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace unisplit {
namespace dp {

struct DpStats {
    std::size_t max_layer_states = 0;
    std::size_t max_cells_per_coordinate = 0;  // distinct trim cells seen on one load coordinate
    bool trimming_active = false;              // false when the grid is finer than the integers
};

struct DpOutcome {
    Rational objective;  // completion-time units
    FractionalAssignment assignment;
    DpStats stats;
};

inline constexpr std::size_t kDefaultMaxLayerStates = 4'000'000;

// Makespan minimization over whole jobs; epsilon = 0 runs the exact DP.
DpOutcome fptas_uniminmax(const Instance& instance, const Rational& epsilon,
                          std::size_t max_layer_states = kDefaultMaxLayerStates);
DpOutcome fptas_uniminmax_raw(const std::vector<Int>& jobs, const std::vector<Int>& speeds,
                              const Rational& epsilon,
                              std::size_t max_layer_states = kDefaultMaxLayerStates);

// Critical-coordinate variant: minimize the maximum completion over machines
// other than `critical`, subject to b_critical <= (1+t)*S. The cap is
// enforced exactly; it is never approximated.
DpOutcome fptas_uniminmax_cc(const Instance& instance, int critical, const Rational& t,
                             const Rational& epsilon,
                             std::size_t max_layer_states = kDefaultMaxLayerStates);

// Two machines, exact cardinalities: machine q must process exactly m_q jobs,
// b_critical <= (1+t_critical)*S with S = (sum of jobs)/(r1+r2); minimize
// max(b1, b2). Jobs of length zero are allowed (inverted instances produce
// them). Returns nullopt when no state survives the caps.
std::optional<DpOutcome> fptas_cc_card(const std::vector<Int>& jobs,
                                       const std::array<Int, 2>& speeds, const Rational& t1,
                                       const Rational& t2, int critical, int m1, int m2,
                                       const Rational& epsilon,
                                       std::size_t max_layer_states = kDefaultMaxLayerStates);

// Trimmed-state bound ceil((1 + 2*g*m/eps) * log2(total)) with g = 1; the
// cell count per load coordinate never exceeds it (eps > 0).
Int trimming_cell_bound(int m, const Rational& epsilon, const Int& total_work);

}  // namespace dp
}  // namespace unisplit
