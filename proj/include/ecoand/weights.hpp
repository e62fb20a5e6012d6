#pragma once

#include "ecoand/model.hpp"

namespace ecoand {

// Normalized objective weights: cost = rho_t*(t_p - t0) + rho_u*J^u.
struct weights {
    double rho_t = 0.0;  // 1/s
    double rho_u = 0.0;  // s^3/m^2
};

// Road length above which a full v_min -> v_max acceleration fits within l;
// selects the rho_u normalization branch.
double long_road_threshold(const limits& lim);

// rho_t = rho * v_min / l.
// rho_u = (1-rho)/((v_max-v_min)*u_max) on long roads, otherwise
// (1-rho)/((sqrt(v_min^2 + 2*u_max*l) - v_min)*u_max). Both branches equal
// the reciprocal of the worst-case full-throttle energy.
weights compute_weights(double rho, const limits& lim, double l);

}  // namespace ecoand
