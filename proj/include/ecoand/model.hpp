#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecoand {

// Speed and acceleration bounds for the vehicle. u_min is the strongest
// allowed deceleration (negative), u_max the strongest acceleration.
struct limits {
    double v_min = 0.0;  // m/s
    double v_max = 0.0;  // m/s
    double u_min = 0.0;  // m/s^2, < 0
    double u_max = 0.0;  // m/s^2, > 0
};

// Rectangular-pulse traffic signal. Green windows are
// [offset + k*period, offset + k*period + duty*period], both endpoints
// inclusive; everything else is red. The signal is periodic over all of
// time; the offset is normalized into [0, period) for window indexing.
struct light_schedule {
    double period = 60.0;      // s
    double duty = 2.0 / 3.0;   // green fraction, in (0,1)
    double offset = 0.0;       // s

    bool is_green(double t) const;

    double green_length() const { return duty * period; }
    double normalized_offset() const;

    // Bounds of the red window containing a red instant t. prev_green_end is
    // absent when t precedes the first nominal green window (the one starting
    // at the normalized offset).
    struct red_bounds {
        std::optional<double> prev_green_end;
        double next_green_start;
    };

    // std::nullopt when t is green.
    std::optional<red_bounds> red_window_bounds(double t) const;
};

struct scenario {
    double t0 = 0.0;   // start time, s
    double v0 = 0.0;   // initial speed, m/s
    double l = 0.0;    // distance to the stop line, m
    limits lim;
    double rho = 0.0;  // time/energy trade-off in [0,1]
    light_schedule light;
};

struct vehicle_state {
    double t = 0.0;  // s
    double x = 0.0;  // m
    double v = 0.0;  // m/s
};

// Carries every violated invariant, one message per violation.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

// Returns s unchanged if all invariants hold, throws validation_error
// listing every failed one otherwise.
scenario validate_scenario(const scenario& s);

}  // namespace ecoand
