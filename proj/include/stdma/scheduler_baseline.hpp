#ifndef STDMA_SCHEDULER_BASELINE_HPP
#define STDMA_SCHEDULER_BASELINE_HPP

#include <cstdint>

#include "stdma/scheduler_lgls.hpp"

namespace stdma {

/// Link processing order for the greedy first-fit baseline.
/// interference_degree sorts by descending count of other links whose
/// transmitter is within communication range of this link's receiver.
enum class GpOrdering {
    input,
    random,
    longest_link_first,
    interference_degree,
};

const char* to_string(GpOrdering ordering);

/// First-fit greedy baseline: walks the links in the configured order and
/// puts each one into the lowest slot where no endpoint node is shared and
/// the full SINR check still passes for everyone in the slot; opens a new
/// slot when none fits.  Output passes verification by construction.
/// seed is only consumed by the random ordering.
Schedule gp_schedule(const CommGraph& g, GpOrdering ordering = GpOrdering::interference_degree,
                     std::uint64_t seed = 0);

/// Exhaustive search is capped at this many links (Bell(10) = 115975
/// partitions); larger instances are refused.
inline constexpr int kOptimalLinkCap = 10;

/// Minimum-slot-count schedule by branch-and-bound over set partitions of
/// the links; every block must pass the SINR oracle and contain no
/// node-sharing pair.  Throws std::invalid_argument above kOptimalLinkCap.
Schedule optimal_schedule(const CommGraph& g);

}  // namespace stdma

#endif  // STDMA_SCHEDULER_BASELINE_HPP
