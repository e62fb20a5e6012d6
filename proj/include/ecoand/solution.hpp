#pragma once

#include <string>

#include "ecoand/kinematics.hpp"

namespace ecoand {

// A fully materialized plan for one arrival: the control profile plus its
// scalar summary. tau is the first time the active speed bound is reached
// (v_max on acceleration plans, v_min on deceleration plans); it equals t_p
// when no bound becomes active.
struct solution {
    profile prof;
    double t_p = 0.0;
    double v_tp = 0.0;
    double tau = 0.0;
    double energy = 0.0;
    double weighted_cost = 0.0;
    std::string case_tag;
};

}  // namespace ecoand
