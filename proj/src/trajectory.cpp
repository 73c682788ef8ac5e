#include "qheat/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qheat {

TimeGrid make_time_grid(double t_start, double dt, double T) {
    if (!(dt > 0.0)) throw InvalidParameterError("time grid: dt must be positive");
    if (!(T > 0.0)) throw InvalidParameterError("time grid: horizon must be positive");
    const int steps = static_cast<int>(std::lround(T / dt));
    if (steps < 1 || std::abs(steps * dt - T) > 1e-9 * std::max(1.0, std::abs(T))) {
        throw InvalidParameterError("time grid: horizon is not a multiple of dt");
    }
    return TimeGrid{t_start, dt, steps};
}

Trajectory Trajectory::slice(int k0, int k1) const {
    if (k0 < 0 || k1 >= levels() || k0 > k1) throw DimensionError("trajectory slice out of range");
    Trajectory out;
    out.tg = TimeGrid{tg.time_at(k0), tg.dt, k1 - k0};
    out.states.assign(states.begin() + k0, states.begin() + k1 + 1);
    out.backward = backward;
    return out;
}

void ControlSchedule::recompute_stats() {
    min_value = 0.0;
    sup_norm_value = 0.0;
    bool first = true;
    for (const auto& f : fields) {
        for (double v : f) {
            if (first) {
                min_value = v;
                first = false;
            }
            min_value = std::min(min_value, v);
            sup_norm_value = std::max(sup_norm_value, std::abs(v));
        }
    }
}

ControlSchedule ControlSchedule::zero(const TimeGrid& tg, int n) {
    ControlSchedule s;
    s.tg = tg;
    s.fields.assign(tg.levels(), Field(n, 0.0));
    s.recompute_stats();
    return s;
}

ControlSchedule ControlSchedule::constant(const TimeGrid& tg, const Field& value) {
    ControlSchedule s;
    s.tg = tg;
    s.fields.assign(tg.levels(), value);
    s.recompute_stats();
    return s;
}

ControlSchedule ControlSchedule::sum(const ControlSchedule& a, const ControlSchedule& b) {
    if (!a.tg.matches(b.tg) || a.fields.size() != b.fields.size()) {
        throw DimensionError("schedule sum: ladders differ");
    }
    ControlSchedule s;
    s.tg = a.tg;
    s.fields.resize(a.fields.size());
    for (std::size_t k = 0; k < a.fields.size(); ++k) {
        s.fields[k] = add(a.fields[k], b.fields[k]);
    }
    s.recompute_stats();
    return s;
}

ControlSchedule ControlSchedule::slice(int k0, int k1) const {
    if (k0 < 0 || k1 >= levels() || k0 > k1) throw DimensionError("schedule slice out of range");
    ControlSchedule out;
    out.tg = TimeGrid{tg.time_at(k0), tg.dt, k1 - k0};
    out.fields.assign(fields.begin() + k0, fields.begin() + k1 + 1);
    out.recompute_stats();
    return out;
}

}  // namespace qheat
