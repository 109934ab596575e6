#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "snapfit/core/errors.hpp"

namespace snapfit {

// Central-difference gradient, (f(p + h e_i) - f(p - h e_i)) / 2h.
// This is the independent oracle used to validate every analytic gradient;
// it must stay free of any code path it is used to check.
template <class F>
std::vector<double> finite_diff_grad(F&& f, const std::vector<double>& p, double h) {
    if (!(h > 0.0)) throw oracle_fault("finite_diff_grad: step must be positive");
    std::vector<double> g(p.size());
    std::vector<double> q = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] = p[i] + h;
        const double fp = f(q);
        q[i] = p[i] - h;
        const double fm = f(q);
        q[i] = p[i];
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw oracle_fault("finite_diff_grad: non-finite function value");
        }
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

} // namespace snapfit
