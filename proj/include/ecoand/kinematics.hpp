#pragma once

#include <vector>

#include "ecoand/model.hpp"

namespace ecoand {

enum class phase_kind {
    hold,          // u(s) = u_start on [0, dt]
    ramp_to_zero,  // u(s) = u_start * (dt - s) / dt on [0, dt]
};

// One control arc. The ramp is parameterized by its initial control and
// duration; the linear slope is u_start/dt, so a zero-duration phase is a
// well-defined no-op instead of a 0/0.
struct phase {
    phase_kind kind = phase_kind::hold;
    double u_start = 0.0;  // m/s^2
    double dt = 0.0;       // s, >= 0
};

struct propagation {
    vehicle_state state;
    double energy = 0.0;  // integral of u^2 over the arc
};

// Closed-form state update under constant control: dv = u*dt,
// dx = v*dt + u*dt^2/2, energy = u^2*dt.
propagation propagate_hold(const vehicle_state& s, double u, double dt);

// Closed-form update under the linear ramp to zero. With slope c = u_start/dt:
// dv = c*dt^2/2, dx = v*dt + c*dt^3/3, energy = c^2*dt^3/3.
propagation propagate_ramp(const vehicle_state& s, double u_start, double dt);

struct profile_sample {
    double x = 0.0;
    double v = 0.0;
    double u = 0.0;
};

// Piecewise profile made of the two primitive arcs, continuous in x and v.
struct profile {
    vehicle_state start;
    std::vector<phase> phases;

    double arrival_time() const;
    vehicle_state end_state() const;

    // Sum of per-phase closed-form energies.
    double energy() const;

    // State and control at time t in [start.t, arrival_time()]. Throws
    // std::out_of_range outside that window. At an interior phase boundary
    // the later phase's control applies; at arrival the last phase's
    // terminal control applies.
    profile_sample sample(double t) const;
};

}  // namespace ecoand
