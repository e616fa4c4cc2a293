#ifndef STDMA_SCHEDULER_LGLS_HPP
#define STDMA_SCHEDULER_LGLS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stdma/line_graph.hpp"

namespace stdma {

/// An exhaustive slot assignment: every link gets exactly one slot, slot
/// indices are 1..num_slots with every slot non-empty.
struct Schedule {
    std::vector<int> slot;  ///< link id -> slot index (1-based)
    int num_slots = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
};

/// Line-graph link scheduler (LGLS).  Grows one color class at a time:
/// seeds each class with a pseudo-randomly chosen uncolored vertex, then
/// repeatedly takes the uncolored vertex maximizing the sum of
/// co-schedulability weights to/from the class and admits it only if every
/// class member v (incl. the candidate u) keeps
///     sum of incoming w' from the enlarged class  >  |class| + noise(v) - 1
/// closing the class on the first rejection.  Running weight sums are
/// maintained incrementally, so the whole loop is O(e^2).
///
/// deterministic=true replaces the random seed-vertex choice with the
/// lowest uncolored id (admission tests are unchanged).
Schedule lgls_schedule(const LineGraph& lg, std::uint64_t seed, bool deterministic = false);

/// Weight-space feasibility test for co-coloring a set of line-graph
/// vertices: true iff every member's incoming co-schedulability sum from
/// the rest exceeds |subset| + noise(member) - 2.  For pairwise
/// non-adjacent links with all pairwise w < 1 this is equivalent to strict
/// SINR feasibility at every receiver (the geometric route checked by
/// sinr_feasible).
bool feasible_by_weights(const LineGraph& lg, const std::vector<int>& subset);

/// Link ids grouped by slot; index s holds slot s+1.
std::vector<std::vector<int>> slot_classes(const Schedule& s);

/// Runs the SINR oracle on every slot class; element s reports slot s+1.
/// Throws std::invalid_argument when the schedule does not cover exactly
/// the graph's links with contiguous non-empty slots.
std::vector<SinrReport> verify_schedule(const CommGraph& g, const Schedule& s);

bool all_slots_feasible(const std::vector<SinrReport>& reports);

// Schedule CSV: header "link_id,tx,rx,slot" (plus a trailing "algo" column
// for non-LGLS schedules).  physical maps link ids through a load
// expansion when given.
std::string schedule_csv(const CommGraph& g, const Schedule& s,
                         const std::vector<int>* physical = nullptr);

}  // namespace stdma

#endif  // STDMA_SCHEDULER_LGLS_HPP
