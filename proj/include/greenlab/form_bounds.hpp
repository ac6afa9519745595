#pragma once
//
// greenlab/form_bounds
// Form-bound estimation: delta_hat as the top generalized eigenvalue of
// |V| w = theta (lambda - Delta) w over radial modes, computed by power
// iteration on |V|^{1/2} (lambda - Delta)^{-1} |V|^{1/2} (same nonzero
// spectrum, no operator square roots), and the local variant over
// B(0, radius) through the Newtonian transform.
//

#include <cmath>
#include <stdexcept>
#include <vector>

#include "greenlab/discrete_ops.hpp"
#include "greenlab/potentials.hpp"
#include "greenlab/radial_grid.hpp"
#include "greenlab/radial_solver.hpp"

namespace greenlab {

namespace form_detail {

inline std::vector<double> sqrt_abs_potential(const RadialGrid& g, const Potential& V) {
    std::vector<double> s(g.size());
    for (int i = 0; i < g.size(); ++i) s[i] = std::sqrt(std::fabs(V(g.r(i))));
    return s;
}

}  // namespace form_detail

// top eigenvalue of |V|^{1/2} (lambda - Delta_l)^{-1} |V|^{1/2} for one mode
inline double form_bound_mode(const Potential& V, double lambda, int l, GridPtr grid,
                              std::uint64_t seed = 12345) {
    const RadialGrid& g = *grid;
    const auto sv = form_detail::sqrt_abs_potential(g, V);
    Potential zero;  // free resolvent
    zero.d = V.d;
    RadialOp T;
    if (lambda > 0.0) {
        T = [grid, &V, sv, lambda, l, &zero](const std::vector<double>& x) {
            RadialFunction f;
            f.grid = grid;
            f.values.resize(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) f.values[i] = sv[i] * x[i];
            auto u = solve_mode(l, lambda, zero, f, grid);
            for (std::size_t i = 0; i < x.size(); ++i) u.values[i] *= sv[i];
            return u.values;
        };
    } else {
        if (l != 0)
            throw std::invalid_argument("form_bound_mode: lambda = 0 supports l = 0 only");
        T = [&g, sv](const std::vector<double>& x) {
            std::vector<double> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = sv[i] * x[i];
            y = newtonian_apply(g, y);
            for (std::size_t i = 0; i < x.size(); ++i) y[i] *= sv[i];
            return y;
        };
    }
    return power_iteration(g, T, seed).value;
}

// nu_hat = || 1_{B(0,radius)} |V|^{1/2} (-Delta)^{-1/2} ||^2 as the top
// eigenvalue of 1_R |V|^{1/2} (-Delta)^{-1} |V|^{1/2} 1_R
inline double local_form_bound(const Potential& V, double radius, GridPtr grid,
                               int /*l_max*/ = 0, std::uint64_t seed = 12345) {
    if (!(radius > 0.0)) throw std::invalid_argument("local_form_bound: radius > 0");
    const RadialGrid& g = *grid;
    auto sv = form_detail::sqrt_abs_potential(g, V);
    for (int i = 0; i < g.size(); ++i)
        if (g.r(i) > radius) sv[i] = 0.0;
    bool all_zero = true;
    for (double s : sv)
        if (s != 0.0) all_zero = false;
    if (all_zero) return 0.0;
    const RadialOp T = [&g, sv](const std::vector<double>& x) {
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = sv[i] * x[i];
        y = newtonian_apply(g, y);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] *= sv[i];
        return y;
    };
    return power_iteration(g, T, seed).value;
}

// delta_hat maximized over modes l <= l_max (the maximizer is l = 0 for
// radial V; the scan confirms it)
inline FormBoundReport form_bound_estimate(const Potential& V, double lambda, GridPtr grid,
                                           int l_max, std::uint64_t seed = 12345) {
    if (lambda < 0.0) throw std::invalid_argument("form_bound_estimate: lambda >= 0");
    FormBoundReport rep;
    rep.lambda = lambda;
    rep.l_max = l_max;
    rep.grid_r_min = grid->r_min();
    rep.grid_r_max = grid->r_max();
    rep.grid_n = grid->size();
    double best = 0.0;
    const int modes = lambda > 0.0 ? l_max : 0;
    for (int l = 0; l <= modes; ++l)
        best = std::max(best, form_bound_mode(V, lambda, l, grid, seed + l));
    rep.delta_hat = best;
    return rep;
}

}  // namespace greenlab
