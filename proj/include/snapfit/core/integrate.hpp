#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "snapfit/core/errors.hpp"

namespace snapfit {

namespace detail {
inline bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}
} // namespace detail

// Classical fixed-step RK4 on a flat state vector. f must return a vector of
// the same length. Throws integration_fault (carrying the state) if any stage
// derivative or the result is non-finite.
template <class F>
std::vector<double> rk4_step(F&& f, const std::vector<double>& s, double dt) {
    const std::size_t n = s.size();
    std::vector<double> tmp(n);

    auto stage = [&](const std::vector<double>& at) {
        std::vector<double> d = f(at);
        if (d.size() != n || !detail::all_finite(d)) {
            throw integration_fault("rk4_step: non-finite derivative", at);
        }
        return d;
    };

    const std::vector<double> k1 = stage(s);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + 0.5 * dt * k1[i];
    const std::vector<double> k2 = stage(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + 0.5 * dt * k2[i];
    const std::vector<double> k3 = stage(tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + dt * k3[i];
    const std::vector<double> k4 = stage(tmp);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = s[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!detail::all_finite(out)) throw integration_fault("rk4_step: non-finite state", out);
    return out;
}

// Scalar convenience overload.
template <class F>
double rk4_step_scalar(F&& f, double s, double dt) {
    auto wrap = [&](const std::vector<double>& v) { return std::vector<double>{f(v[0])}; };
    return rk4_step(wrap, std::vector<double>{s}, dt)[0];
}

} // namespace snapfit
