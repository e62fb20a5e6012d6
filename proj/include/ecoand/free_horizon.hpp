#pragma once

#include "ecoand/solution.hpp"
#include "ecoand/weights.hpp"

namespace ecoand {

// The four shapes the free-arrival optimum can take. Every optimal control
// here is non-negative and non-increasing: an optional full-throttle hold,
// an optional linear ramp to zero, an optional cruise.
enum class free_column {
    c1_full_ramp_cruise,  // hold(u_max), ramp, cruise at v_max
    c2_full_ramp,         // hold(u_max), ramp; v_max unreached
    c3_ramp_cruise,       // ramp, cruise at v_max
    c4_ramp_only,         // ramp; v_max unreached
};

const char* to_string(free_column c);

struct free_case {
    free_column column = free_column::c1_full_ramp_cruise;
    // Speed below which the optimum starts at full throttle.
    double threshold = 0.0;
    // Road-length margins for reaching v_max: f for full-throttle starts,
    // g for ramp starts. Negative means v_max stays unreached.
    double f_value = 0.0;
    double g_value = 0.0;
};

// Requires rho_t > 0 and rho_u > 0 (the degenerate weightings are handled
// inside solve_free).
free_case classify_free(const scenario& s, const weights& w);

// Terminal speed of the ramp-only optimum: the unique root v2 in
// (v0, v_max) of l = (2/3)(v0 + 2*v2)*sqrt((v2 - v0)*v2*rho_u/rho_t),
// found by bisection. Throws std::logic_error if the bracket fails
// (signals misclassification).
double solve_v2(const scenario& s, const weights& w);

// Optimal plan with the arrival time left free. rho_u = 0 gives full
// throttle then cruise; rho_t = 0 gives a pure coast.
solution solve_free(const scenario& s, const weights& w);

}  // namespace ecoand
