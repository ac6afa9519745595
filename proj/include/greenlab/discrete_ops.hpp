#pragma once
//
// greenlab/discrete_ops
// Newtonian transform on radial profiles, discrete Laplacian residuals,
// probe-based lower bounds for p->p operator norms, power iteration, and
// the sharp-constant Hardy inequality check.
//

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenlab/potentials.hpp"
#include "greenlab/radial_grid.hpp"
#include "greenlab/rng.hpp"

namespace greenlab {

// ((-Delta)^{-1} f)(r) = (1/r) int_0^r s^2 f ds + int_r^inf s f ds.
// f is taken to vanish outside the grid except for the [0, r_min] stub,
// where it is frozen at f(r_min).
inline std::vector<double> newtonian_apply(const RadialGrid& g,
                                           const std::vector<double>& f) {
    const int n = g.size();
    std::vector<double> pre(n), suf(n);
    pre[0] = f[0] * g.r_min() * g.r_min() * g.r_min() / 3.0;
    for (int i = 1; i < n; ++i) {
        const double wa = g.r(i - 1) * g.r(i - 1) * g.r(i - 1) * f[i - 1];
        const double wb = g.r(i) * g.r(i) * g.r(i) * f[i];
        pre[i] = pre[i - 1] + 0.5 * (wa + wb) * g.dt();
    }
    suf[n - 1] = 0.0;
    for (int i = n - 2; i >= 0; --i) {
        const double wa = g.r(i) * g.r(i) * f[i];
        const double wb = g.r(i + 1) * g.r(i + 1) * f[i + 1];
        suf[i] = suf[i + 1] + 0.5 * (wa + wb) * g.dt();
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = pre[i] / g.r(i) + suf[i];
    return out;
}

inline RadialFunction newtonian_radial_apply(const RadialFunction& f) {
    RadialFunction out = f;
    out.values = newtonian_apply(*f.grid, f.values);
    out.potential_id.clear();
    return out;
}

// discrete radial Laplacian on the log grid: (u_tt + u_t)/r^2
// (interior nodes; endpoints copied from neighbours)
inline std::vector<double> radial_laplacian(const RadialGrid& g,
                                            const std::vector<double>& u) {
    const int n = g.size();
    const double h = g.dt();
    std::vector<double> out(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        const double utt = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
        const double ut = (u[i + 1] - u[i - 1]) / (2.0 * h);
        out[i] = (utt + ut) / (g.r(i) * g.r(i));
    }
    out[0] = out[1];
    out[n - 1] = out[n - 2];
    return out;
}

inline double lp_norm_values(const RadialGrid& g, const std::vector<double>& v, double p) {
    return lp_norm(g, v, p, 0.0, g.r_max());
}

using RadialOp = std::function<std::vector<double>(const std::vector<double>&)>;

struct ProbeOptions {
    int ascent_steps = 60;
    int ascent_top = 4;       // how many best probes get refined
    int max_bumps = 3;
    double interior_margin = 0.02;  // keep bump centers off the grid ends
};

namespace probe_detail {

struct BumpShape {
    double center;  // in t = log r
    double width;
    double amp;
};

inline std::vector<double> render(const RadialGrid& g, const std::vector<BumpShape>& bumps) {
    std::vector<double> v(g.size(), 0.0);
    const double t0 = std::log(g.r_min());
    for (int i = 0; i < g.size(); ++i) {
        const double t = t0 + i * g.dt();
        for (const auto& b : bumps) {
            const double s = std::fabs(t - b.center) / b.width;
            if (s < 1.0) v[i] += b.amp * (1.0 - s);  // log-space tent
        }
    }
    return v;
}

inline std::vector<BumpShape> random_bumps(const RadialGrid& g, Rng& rng, int max_bumps,
                                           double margin) {
    const double ta = std::log(g.r_min()), tb = std::log(g.r_max());
    const double span = tb - ta;
    const int nb = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_bumps));
    std::vector<BumpShape> bumps(nb);
    for (auto& b : bumps) {
        b.center = rng.uniform(ta + margin * span, tb - margin * span);
        b.width = rng.log_uniform(4.0 * g.dt(), 0.45 * span);
        b.amp = rng.uniform01() < 0.5 ? 1.0 : -1.0;
    }
    return bumps;
}

}  // namespace probe_detail

// max over probes of ||T g||_p / ||g||_p: a certified-from-below estimate
// of the p->p norm. Random log-space tents plus coordinate ascent on the
// shape parameters of the best probes. Deterministic given seed.
inline double pnorm_probe(const RadialGrid& g, const RadialOp& T, double p, int probes,
                          std::uint64_t seed, const ProbeOptions& opts = {}) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("pnorm_probe: p in (1, inf)");
    if (probes < 1) throw std::invalid_argument("pnorm_probe: probes >= 1");
    Rng rng(seed);
    auto ratio_of = [&](const std::vector<double>& v) -> double {
        const double den = lp_norm_values(g, v, p);
        if (!(den > 0.0)) return -1.0;
        return lp_norm_values(g, T(v), p) / den;
    };
    double best = 0.0;
    std::vector<std::pair<double, std::vector<probe_detail::BumpShape>>> top;
    for (int k = 0; k < probes; ++k) {
        auto bumps = probe_detail::random_bumps(g, rng, opts.max_bumps,
                                                opts.interior_margin);
        double r = ratio_of(probe_detail::render(g, bumps));
        int redraw = 0;
        while (r < 0.0 && redraw++ < 64) {  // zero probe: redraw
            bumps = probe_detail::random_bumps(g, rng, opts.max_bumps,
                                               opts.interior_margin);
            r = ratio_of(probe_detail::render(g, bumps));
        }
        if (r < 0.0) throw std::runtime_error("pnorm_probe: probe redraw cap exceeded");
        best = std::max(best, r);
        top.emplace_back(r, bumps);
    }
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const int refine = static_cast<int>(
        std::min(static_cast<std::size_t>(opts.ascent_top), top.size()));
    for (int k = 0; k < refine; ++k) {
        auto bumps = top[k].second;
        double cur = top[k].first;
        double step = 0.25;
        for (int it = 0; it < opts.ascent_steps; ++it) {
            bool improved = false;
            for (std::size_t bi = 0; bi < bumps.size(); ++bi) {
                for (int field = 0; field < 2; ++field) {
                    for (double dir : {+1.0, -1.0}) {
                        auto trial = bumps;
                        if (field == 0)
                            trial[bi].center += dir * step * trial[bi].width;
                        else
                            trial[bi].width *= std::exp(dir * step);
                        const double r = ratio_of(probe_detail::render(g, trial));
                        if (r > cur) {
                            cur = r;
                            bumps = trial;
                            improved = true;
                        }
                    }
                }
            }
            if (!improved) step *= 0.5;
            if (step < 1e-3) break;
        }
        best = std::max(best, cur);
    }
    return best;
}

struct PowerIterResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Top eigenvalue of a (self-adjoint in the r^2 dr inner product) operator.
// Spectra of the Hardy-type operators cluster at the top, so convergence
// is judged on the Rayleigh quotient stabilizing over several iterations.
inline PowerIterResult power_iteration(const RadialGrid& g, const RadialOp& T,
                                       std::uint64_t seed, int max_iters = 5000,
                                       double tol = 1e-10) {
    Rng rng(seed);
    std::vector<double> v(g.size());
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);
    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < g.size(); ++i)
            s += a[i] * b[i] * g.r(i) * g.r(i) * g.r(i) * g.dt();
        return s;
    };
    auto residual_of = [&](const std::vector<double>& x, const std::vector<double>& Tx,
                           double lam) {
        double rn = 0.0;
        for (int i = 0; i < g.size(); ++i) {
            const double e = Tx[i] - lam * x[i];
            rn += e * e * g.r(i) * g.r(i) * g.r(i) * g.dt();
        }
        return std::sqrt(rn / dot(x, x));
    };
    double lambda = 0.0, res = 0.0;
    int stable = 0;
    for (int it = 1; it <= max_iters; ++it) {
        std::vector<double> w = T(v);
        const double next = dot(v, w) / dot(v, v);
        if (it % 16 == 0 || it > max_iters - 2) res = residual_of(v, w, next);
        const double nw = std::sqrt(dot(w, w));
        if (!(nw > 0.0)) return {0.0, 0.0, it};
        for (auto& x : w) x /= nw;
        v = std::move(w);
        if (it > 4 && std::fabs(next - lambda) <= tol * std::fmax(std::fabs(next), 1e-30)) {
            if (++stable >= 3) return {next, res, it};
        } else {
            stable = 0;
        }
        lambda = next;
    }
    std::vector<double> w = T(v);
    throw std::runtime_error("power_iteration: no convergence, residual " +
                             std::to_string(residual_of(v, w, lambda)));
}

struct OperatorProbeReport {
    double p = 0.0;
    int probes = 0;
    double norm_lower_bound = 0.0;
    double bound_rhs = 0.0;  // kappa_p * nu
    double margin = 0.0;     // bound_rhs - norm_lower_bound
    double kappa_p = 0.0;
    double nu = 0.0;
    std::uint64_t seed = 0;
};

inline double kappa_p(double p) {
    const double pprime = p / (p - 1.0);
    return p * pprime / 4.0;
}

// ||V^{1/p} (-Delta)^{-1} V^{1/p'}||_{p->p} lower bound vs kappa_p nu.
// V should be truncated/bounded; nu comes from the local form bound.
inline OperatorProbeReport prop22_check(const Potential& V, double p, GridPtr grid,
                                        int probes, std::uint64_t seed, double nu,
                                        const ProbeOptions& opts = {}) {
    if (!(nu >= 0.0) || !std::isfinite(nu))
        throw std::invalid_argument("prop22_check: nu not supplied/computable");
    const RadialGrid& g = *grid;
    const double pprime = p / (p - 1.0);
    std::vector<double> v_p(g.size()), v_pp(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const double v = std::fabs(V(g.r(i)));
        v_p[i] = std::pow(v, 1.0 / p);
        v_pp[i] = std::pow(v, 1.0 / pprime);
    }
    const RadialOp T = [&g, &v_p, &v_pp](const std::vector<double>& x) {
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = v_pp[i] * x[i];
        y = newtonian_apply(g, y);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] *= v_p[i];
        return y;
    };
    OperatorProbeReport rep;
    rep.p = p;
    rep.probes = probes;
    rep.seed = seed;
    rep.nu = nu;
    rep.kappa_p = kappa_p(p);
    rep.norm_lower_bound = pnorm_probe(g, T, p, probes, seed, opts);
    rep.bound_rhs = rep.kappa_p * nu;
    rep.margin = rep.bound_rhs - rep.norm_lower_bound;
    return rep;
}

// max over probes (vanishing at both grid ends) of
//   ((d-2)^2/4) <|x|^{-2} w, w> / <grad w, grad w>,  d = 3.
// Includes the r^{1/2} near-optimizer family; must stay <= 1 + O(h^2).
inline double hardy_check(GridPtr grid, int probes, std::uint64_t seed) {
    const RadialGrid& g = *grid;
    Rng rng(seed);
    const double ta = std::log(g.r_min()), tb = std::log(g.r_max());
    auto ratio_of = [&](const std::vector<double>& w) -> double {
        // both quadratic forms on staggered midpoints
        double num = 0.0, den = 0.0;
        for (int i = 0; i + 1 < g.size(); ++i) {
            const double dr = g.r(i + 1) - g.r(i);
            const double rm = std::sqrt(g.r(i) * g.r(i + 1));
            const double wm = 0.5 * (w[i] + w[i + 1]);
            const double dw = (w[i + 1] - w[i]) / dr;
            num += wm * wm * dr;            // r^{-2} w^2 r^2
            den += dw * dw * rm * rm * dr;  // |w'|^2 r^2
        }
        if (!(den > 0.0)) return 0.0;
        return 0.25 * num / den;
    };
    double best = 0.0;
    for (int k = 0; k < probes; ++k) {
        auto bumps = probe_detail::random_bumps(g, rng, 3, 0.05);
        auto w = probe_detail::render(g, bumps);
        w.front() = w.back() = 0.0;
        best = std::max(best, ratio_of(w));
    }
    // near-optimizer family: r^{1/2} with smooth log-space cutoffs
    for (double frac : {0.5, 0.7, 0.85, 0.95}) {
        std::vector<double> w(g.size());
        const double lo = ta + (1.0 - frac) * 0.5 * (tb - ta);
        const double hi = tb - (1.0 - frac) * 0.5 * (tb - ta);
        const double ramp = 0.05 * (hi - lo);
        for (int i = 0; i < g.size(); ++i) {
            const double t = ta + i * g.dt();
            double cut = 0.0;
            if (t > lo && t < hi)
                cut = std::min({1.0, (t - lo) / ramp, (hi - t) / ramp});
            w[i] = std::exp(0.5 * t) * cut;
        }
        w.front() = w.back() = 0.0;
        best = std::max(best, ratio_of(w));
    }
    return best;
}

}  // namespace greenlab
