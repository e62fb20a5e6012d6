#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecoand/fixed_horizon.hpp"
#include "ecoand/free_horizon.hpp"

namespace ecoand {

enum class plan_branch {
    free_green,        // free optimum already lands in a green window
    prev_green_end,    // repaired to the end of the previous green window
    next_green_start,  // repaired to the start of the next green window
};

const char* to_string(plan_branch b);

// One evaluated arrival candidate; weighted_cost is empty when the candidate
// was infeasible (note says why).
struct plan_candidate {
    double t_p = 0.0;
    std::optional<double> weighted_cost;
    std::string note;
};

struct plan_outcome {
    plan_branch branch = plan_branch::free_green;
    solution chosen;
    std::vector<plan_candidate> candidates;
    // Light-blind free optimum; lower-bounds the chosen cost.
    solution free_reference;
};

// Raised when every arrival candidate is infeasible: the red phase around
// the free optimum outlasts what slowing to v_min can absorb, and earlier
// arrivals are unreachable.
class no_feasible_plan : public std::runtime_error {
  public:
    explicit no_feasible_plan(const std::string& what) : std::runtime_error(what) {}
};

// rho_t*(t_p - t0) + rho_u*energy.
double total_cost(const weights& w, double t0, double t_p, double energy);

// Two-step plan: solve free, keep it if the arrival is green, otherwise
// compare the fixed-horizon repairs at the adjacent green-window boundaries
// and keep the cheaper (ties go to the earlier arrival).
plan_outcome plan(const scenario& s);

// Same, with pinned weights. This is the re-planning entry point: invoking
// it along a previously planned trajectory (with the same weights) leaves
// the arrival time unchanged.
plan_outcome plan(const scenario& s, const weights& w);

}  // namespace ecoand
