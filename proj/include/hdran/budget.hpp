#ifndef HDRAN_BUDGET_HPP
#define HDRAN_BUDGET_HPP

#include <cstdint>

namespace hdran {

/// Size limits checked before any allocation-heavy work starts.
///
/// Environment overrides (read by `ResourceBudget::from_environment`):
///   HDRAN_MAX_ARENA_CELLS        clique-arena vertex slots per network
///   HDRAN_EXACT_DISTANCE_VERTICES vertex limit for exact all-pairs BFS
///   HDRAN_MAX_WORK_UNITS         per-experiment work limit (without --long)
struct ResourceBudget {
    /// Each step appends k cliques of k ids, so a network at time n holds
    /// k * (1 + k * n) ids. The default allows ~1.6 GB of arena.
    std::uint64_t max_arena_cells = 400'000'000;
    std::uint64_t exact_distance_vertices = 50'000;
    /// Rough operation count an experiment may spend without an explicit
    /// long-run opt-in. A Wiener replicate at n vertices costs ~n^2 units.
    std::uint64_t max_work_units = 200'000'000;

    static ResourceBudget from_environment();
};

}  // namespace hdran

#endif  // HDRAN_BUDGET_HPP
