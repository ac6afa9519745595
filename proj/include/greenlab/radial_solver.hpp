#pragma once
//
// greenlab/radial_solver
// Spherical-harmonic reduction of (mu + H) u = f to radial two-point
// boundary-value problems on the log grid, the Hardy-drift variant, and
// the exact Bessel-kernel oracle for pure inverse-square potentials.
//
// Mode equation, t = log r:
//   -(u_tt + u_t) + [l(l+1) + r^2 V(r) + mu r^2] u = r^2 f(r).
// Boundary rows are Robin conditions encoding the indicial exponent at
// r_min (u ~ r^{s_plus}) and the decaying tail u ~ exp(-sqrt(mu) r)/r at
// r_max; a ghost-node elimination keeps both rows second order.
//

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenlab/math/bessel.hpp"
#include "greenlab/math/legendre.hpp"
#include "greenlab/potentials.hpp"
#include "greenlab/radial_grid.hpp"

namespace greenlab {

struct IndicialExponents {
    double s_minus = 0.0;
    double s_plus = 0.0;
    bool regularized = false;  // epsilon > 0: exponents of the regular problem
};

inline IndicialExponents indicial_exponents(int l, const Potential& V) {
    if (V.d != 3) throw std::invalid_argument("indicial_exponents: d = 3 only");
    if (l < 0) throw std::invalid_argument("indicial_exponents: l >= 0");
    IndicialExponents out;
    if (V.epsilon > 0.0) {
        out.s_plus = static_cast<double>(l);
        out.s_minus = -static_cast<double>(l + 1);
        out.regularized = true;
        return out;
    }
    const double c = V.singular_coeff();
    const double halfl = l + 0.5;
    const double root = std::sqrt(halfl * halfl + c);
    out.s_plus = -0.5 + root;
    out.s_minus = -0.5 - root;
    return out;
}

namespace solver_detail {

// Thomas elimination; diagonal dominance holds for mu > 0, V >= 0
inline std::vector<double> tridiag_solve(std::vector<double> sub, std::vector<double> diag,
                                         std::vector<double> sup, std::vector<double> rhs) {
    const int n = static_cast<int>(diag.size());
    for (int i = 1; i < n; ++i) {
        if (std::fabs(diag[i - 1]) < 1e-300)
            throw std::runtime_error("tridiag_solve: singular system (unexpected for mu>0)");
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (std::fabs(diag[n - 1]) < 1e-300)
        throw std::runtime_error("tridiag_solve: singular system (unexpected for mu>0)");
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
    return x;
}

struct ModeMatrix {
    std::vector<double> sub, diag, sup;
};

// first-order coefficient a in -(u_tt) + a u_t + q(r) u = g; the plain
// mode equation has a = -1, the Hardy drift a = gamma - 1
inline ModeMatrix assemble(const RadialGrid& g, double first_order_coeff,
                           const std::function<double(double)>& q, double robin_left,
                           double robin_right) {
    const int n = g.size();
    const double h = g.dt();
    const double ih2 = 1.0 / (h * h);
    const double a = first_order_coeff;
    ModeMatrix m;
    m.sub.assign(n, 0.0);
    m.diag.assign(n, 0.0);
    m.sup.assign(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        m.sub[i] = -ih2 - a / (2.0 * h);
        m.sup[i] = -ih2 + a / (2.0 * h);
        m.diag[i] = 2.0 * ih2 + q(g.r(i));
    }
    // ghost elimination, centered Robin u_t = robin * u
    m.diag[0] = 2.0 * ih2 * (1.0 + h * robin_left) + a * robin_left + q(g.r(0));
    m.sup[0] = -2.0 * ih2;
    m.diag[n - 1] =
        2.0 * ih2 * (1.0 - h * robin_right) + a * robin_right + q(g.r(n - 1));
    m.sub[n - 1] = -2.0 * ih2;
    return m;
}

}  // namespace solver_detail

inline RadialFunction solve_mode(int l, double mu, const Potential& V,
                                 const RadialFunction& source, GridPtr grid) {
    if (!(mu > 0.0)) throw std::invalid_argument("solve_mode: mu > 0 required");
    const RadialGrid& g = *grid;
    if (static_cast<int>(source.values.size()) != g.size())
        throw std::invalid_argument("solve_mode: source not sampled on grid");

    const auto ind = indicial_exponents(l, V);
    const double robin_left = ind.s_plus;                       // u_t/u at r_min
    const double robin_right = -std::sqrt(mu) * g.r_max() - 1.0;  // u_t/u at r_max

    bool non_coercive = false;
    const auto q = [&](double r) {
        const double v = V(r);
        if (v < 0.0) non_coercive = true;
        return l * (l + 1.0) + r * r * (v + mu);
    };
    auto m = solver_detail::assemble(g, -1.0, q, robin_left, robin_right);

    std::vector<double> rhs(g.size());
    for (int i = 0; i < g.size(); ++i) rhs[i] = g.r(i) * g.r(i) * source.values[i];

    RadialFunction u;
    u.grid = grid;
    u.l = l;
    u.mu = mu;
    u.potential_id = V.id;
    u.values = solver_detail::tridiag_solve(std::move(m.sub), std::move(m.diag),
                                            std::move(m.sup), std::move(rhs));
    if (non_coercive) u.flags |= RadialFunction::kNonCoercive;
    if (ind.regularized) u.flags |= RadialFunction::kRegularizedIndicial;
    return u;
}

// resolvent applied to radial data (mode l = 0). With `theorem_scenario`
// set, f must vanish on B(0,1).
inline RadialFunction resolvent_apply(double mu, const Potential& V,
                                      const RadialFunction& f, GridPtr grid,
                                      bool theorem_scenario = false) {
    if (theorem_scenario) {
        for (int i = 0; i < grid->size() && grid->r(i) < 1.0; ++i)
            if (f.values[i] != 0.0)
                throw std::invalid_argument(
                    "resolvent_apply: f must vanish in B(0,1) for this scenario");
    }
    return solve_mode(0, mu, V, f, grid);
}

// Exact l = 0 Green function of -Delta + delta/(4 r^2) + mu in d = 3:
//   G_0(r, rho) = I_nu(k r_<) K_nu(k r_>) / sqrt(r rho),
// nu = sqrt(1+delta)/2, k = sqrt(mu). Normalized so (mu+H) G_0 = delta_rho
// in the mode-0 sense (Wronskian I K' - I' K = -1/x).
inline double bessel_hardy_oracle(double delta, double mu, double r, double rho) {
    if (!(delta >= 0.0) || !(mu > 0.0) || !(r > 0.0) || !(rho > 0.0))
        throw std::invalid_argument("bessel_hardy_oracle: need delta>=0, mu>0, r,rho>0");
    const double nu = 0.5 * std::sqrt(1.0 + delta);
    const double k = std::sqrt(mu);
    const double lo = std::min(r, rho), hi = std::max(r, rho);
    return bessel_i(nu, k * lo) * bessel_k(nu, k * hi) / std::sqrt(r * rho);
}

// (mu+H)^{-1} f for pure Hardy potentials through the Bessel kernel;
// the two cumulative integrals make this O(n) in the grid size.
inline RadialFunction oracle_resolvent_apply(double delta, double mu,
                                             const RadialFunction& f, GridPtr grid) {
    const RadialGrid& g = *grid;
    const int n = g.size();
    const double nu = 0.5 * std::sqrt(1.0 + delta);
    const double k = std::sqrt(mu);
    std::vector<double> iv(n), kv(n);
    for (int i = 0; i < n; ++i) {
        iv[i] = bessel_i(nu, k * g.r(i));
        kv[i] = bessel_k(nu, k * g.r(i));
    }
    // u(r) = K(r)/sqrt(r) * int_0^r I(s) s^{3/2} f ds
    //      + I(r)/sqrt(r) * int_r^inf K(s) s^{3/2} f ds   (trapezoid in t)
    std::vector<double> wi(n), wk(n);
    for (int i = 0; i < n; ++i) {
        const double w = std::pow(g.r(i), 1.5) * f.values[i] * g.r(i);  // Jacobian r
        wi[i] = iv[i] * w;
        wk[i] = kv[i] * w;
    }
    std::vector<double> pre(n, 0.0), suf(n, 0.0);
    for (int i = 1; i < n; ++i) pre[i] = pre[i - 1] + 0.5 * (wi[i - 1] + wi[i]) * g.dt();
    for (int i = n - 2; i >= 0; --i) suf[i] = suf[i + 1] + 0.5 * (wk[i] + wk[i + 1]) * g.dt();
    RadialFunction u;
    u.grid = grid;
    u.l = 0;
    u.mu = mu;
    u.potential_id = "hardy_oracle";
    u.values.resize(n);
    for (int i = 0; i < n; ++i)
        u.values[i] = (kv[i] * pre[i] + iv[i] * suf[i]) / std::sqrt(g.r(i));
    return u;
}

struct GreenSlice {
    double source_radius = 0.0;  // snapped to the nearest grid node
    double mu = 0.0;
    int l_max = 0;
    GridPtr grid;
    std::vector<std::vector<double>> modes;  // modes[l][i] = G_l(r_i, source_radius)

    double mode_at(int l, double r) const {
        return interp_loglog(*grid, modes[static_cast<std::size_t>(l)], r);
    }

    // G(x,y) = sum_l (2l+1)/(4 pi) G_l(|x|,|y|) P_l(cos theta)
    double reconstruct(double r, double cos_theta) const {
        LegendreSeq pl(cos_theta);
        double s = 0.0;
        for (int l = 0; l <= l_max; ++l)
            s += (2.0 * l + 1.0) * mode_at(l, r) * pl.next();
        return s / (4.0 * 3.14159265358979323846);
    }
};

inline GreenSlice green_radial(double mu, const Potential& V, double rho, int l_max,
                               GridPtr grid) {
    const RadialGrid& g = *grid;
    if (!(rho > g.r_min()) || !(rho < g.r_max()))
        throw std::invalid_argument("green_radial: rho must lie inside the grid");
    if (l_max < 0) throw std::invalid_argument("green_radial: l_max >= 0");
    const int j = g.nearest_index(rho);
    GreenSlice slice;
    slice.source_radius = g.r(j);
    slice.mu = mu;
    slice.l_max = l_max;
    slice.grid = grid;
    // ring source: unit mass against the r^2 dr measure on one cell,
    // i.e. (mu + H_l) G_l = delta(r - rho)/rho^2
    RadialFunction src;
    src.grid = grid;
    src.values.assign(g.size(), 0.0);
    const double cell = g.r(j) * g.dt();  // trapezoid weight dr at node j
    src.values[j] = 1.0 / (g.r(j) * g.r(j) * cell);
    slice.modes.reserve(l_max + 1);
    for (int l = 0; l <= l_max; ++l)
        slice.modes.push_back(solve_mode(l, mu, V, src, grid).values);
    return slice;
}

// Hardy-type drift resolvent, mode l = 0:
//   mu u - u'' - (2/r) u' + (sqrt(delta)/(2 r^2)) (u + r u') = f,
// log-grid form -(u_tt) + (gamma - 1) u_t + (gamma + mu r^2) u = r^2 f,
// gamma = sqrt(delta)/2 (also the regular indicial exponent at 0).
inline RadialFunction drift_mode_solve(double mu, double delta_drift,
                                       const RadialFunction& source, GridPtr grid) {
    if (!(mu > 0.0)) throw std::invalid_argument("drift_mode_solve: mu > 0 required");
    if (!(delta_drift >= 0.0))
        throw std::invalid_argument("drift_mode_solve: delta_drift >= 0");
    const RadialGrid& g = *grid;
    const double gamma = 0.5 * std::sqrt(delta_drift);
    const double robin_left = gamma;
    const double robin_right = -std::sqrt(mu) * g.r_max() - 1.0;
    const auto q = [&](double r) { return gamma + mu * r * r; };
    auto m = solver_detail::assemble(g, gamma - 1.0, q, robin_left, robin_right);
    std::vector<double> rhs(g.size());
    for (int i = 0; i < g.size(); ++i) rhs[i] = g.r(i) * g.r(i) * source.values[i];
    RadialFunction u;
    u.grid = grid;
    u.l = 0;
    u.mu = mu;
    u.potential_id = "hardy_drift";
    u.values = solver_detail::tridiag_solve(std::move(m.sub), std::move(m.diag),
                                            std::move(m.sup), std::move(rhs));
    return u;
}

}  // namespace greenlab
