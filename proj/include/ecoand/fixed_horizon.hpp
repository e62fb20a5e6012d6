#pragma once

#include <optional>
#include <vector>

#include "ecoand/solution.hpp"
#include "ecoand/weights.hpp"

namespace ecoand {

// Minimum-energy plans with the arrival time pinned. Arrivals earlier than
// the free optimum need net acceleration (cases I-V, u in [0, u_max]);
// later arrivals cruise (VI) or decelerate (VII-X, u in [u_min, 0]).
enum class fixed_case_id {
    case_i,     // full throttle throughout (reachability boundary)
    case_ii,    // hold(u_max), ramp, cruise at v_max
    case_iii,   // hold(u_max), ramp to arrival; v_max unreached
    case_iv,    // ramp, cruise at v_max
    case_v,     // ramp only; v_max unreached
    case_vi,    // pure cruise at v0
    case_vii,   // hold(u_min), ramp, cruise at v_min
    case_viii,  // hold(u_min), ramp to arrival; v_min unreached
    case_ix,    // ramp, cruise at v_min
    case_x,     // ramp only; v_min unreached
};

const char* to_string(fixed_case_id id);

struct fixed_case {
    fixed_case_id id = fixed_case_id::case_v;
    profile prof;
    double energy = 0.0;
    double u0 = 0.0;    // control at departure
    double v_tp = 0.0;  // terminal speed
    double tau = 0.0;   // first time at the active speed bound, t_p if none
};

// Margin by which the pinned arrival is reachable: >= 0 iff the vehicle can
// cover l by t_p under u_max and v_max. Two branches split at whether full
// throttle saturates v_max before t_p.
double reachability_h(const scenario& s, double t_p);

// Latest achievable arrival: brake at u_min to v_min and cruise, or the
// braking-only quadratic when l is shorter than the braking distance.
double latest_arrival(const scenario& s);

// All feasible acceleration cases (I-V) for l > v0*(t_p - t0); assumes
// reachability_h(s, t_p) >= 0. Infeasible cases are omitted.
std::vector<fixed_case> solve_accel_cases(const scenario& s, double t_p);

// All feasible deceleration cases (VII-X) for l < v0*(t_p - t0); assumes
// t_p <= latest_arrival(s).
std::vector<fixed_case> solve_decel_cases(const scenario& s, double t_p);

enum class fixed_status {
    ok,
    unreachable,  // h < 0: t_p is too early to cover l
    too_late,     // t_p beyond latest_arrival: the vehicle cannot dawdle enough
};

struct fixed_result {
    fixed_status status = fixed_status::ok;
    std::optional<solution> sol;
};

// Minimum-energy plan arriving exactly at t_p. Routes on the sign of
// l - v0*(t_p - t0), enumerates the branch's cases and returns the cheapest;
// weighted_cost uses w. Errors are reported in the status, never thrown.
fixed_result solve_fixed(const scenario& s, const weights& w, double t_p);

}  // namespace ecoand
