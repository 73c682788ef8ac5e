#pragma once

#include <vector>

#include "qheat/errors.hpp"
#include "qheat/fields.hpp"

namespace qheat {

/// Uniform time ladder t_start + k*dt, k = 0..steps.
struct TimeGrid {
    double t_start = 0.0;
    double dt = 0.0;
    int steps = 0;  // number of steps; ladder has steps+1 levels

    int levels() const { return steps + 1; }
    double time_at(int k) const { return t_start + k * dt; }
    double horizon() const { return steps * dt; }
    double t_end() const { return t_start + steps * dt; }

    bool matches(const TimeGrid& other, double tol = 1e-12) const {
        return steps == other.steps && std::abs(dt - other.dt) <= tol * (1.0 + std::abs(dt)) &&
               std::abs(t_start - other.t_start) <= tol * (1.0 + std::abs(t_start));
    }
};

/// Builds a ladder covering [t_start, t_start+T]; requires T to be an integer
/// multiple of dt to float tolerance.
TimeGrid make_time_grid(double t_start, double dt, double T);

/// Time-indexed sequence of spatial fields (state or adjoint).
struct Trajectory {
    TimeGrid tg;
    std::vector<Field> states;  // states[k] at time tg.time_at(k)
    bool backward = false;      // true for adjoint (filled from the terminal level)

    const Field& at(int k) const { return states[static_cast<std::size_t>(k)]; }
    const Field& initial() const { return states.front(); }
    const Field& terminal() const { return states.back(); }
    int levels() const { return static_cast<int>(states.size()); }

    /// Sub-trajectory over ladder levels [k0, k1] (inclusive), keeping absolute times.
    Trajectory slice(int k0, int k1) const;
};

/// Control fields on the same ladder as the trajectory they drive.
/// Convention: fields[k] acts on the step from t_k to t_{k+1}; the terminal
/// field is padding kept so schedules and trajectories share one ladder
/// (it still counts toward the min/sup statistics).
struct ControlSchedule {
    TimeGrid tg;
    std::vector<Field> fields;
    double min_value = 0.0;
    double sup_norm_value = 0.0;

    void recompute_stats();
    const Field& at(int k) const { return fields[static_cast<std::size_t>(k)]; }
    int levels() const { return static_cast<int>(fields.size()); }

    static ControlSchedule zero(const TimeGrid& tg, int n);
    static ControlSchedule constant(const TimeGrid& tg, const Field& value);
    /// Pointwise sum; ladders must match.
    static ControlSchedule sum(const ControlSchedule& a, const ControlSchedule& b);

    ControlSchedule slice(int k0, int k1) const;
};

}  // namespace qheat
