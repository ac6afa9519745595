#pragma once
//
// greenlab/vanishing
// Order-of-vanishing estimators on dyadic shells, Carleman-weighted norms,
// two-sided Green-bound envelope fits, the desingularization identity, and
// the weighted-operator coercivity check.
//
// ord uses the minimum windowed slope of the cumulative mass (liminf),
// Ord the maximum windowed slope of log2 shell masses against k (limsup
// of (log2 m_k)/k); windows slide over `window` consecutive shells.
//

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenlab/potentials.hpp"
#include "greenlab/radial_grid.hpp"
#include "greenlab/radial_solver.hpp"
#include "greenlab/rng.hpp"

namespace greenlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct ShellMassProfile {
    double p = 2.0;
    int k_max = 0;                   // shells k = 0..k_max, shell k = [2^-k-1, 2^-k]
    std::vector<double> mass;        // m_k
    std::vector<double> cumulative;  // M_k = mass inside r < 2^-k (down to r_min)
};

// m_k by quadrature with the 4 pi r^2 measure per shell
inline ShellMassProfile local_mass_profile(const RadialFunction& u, double p, int k_max) {
    if (k_max < 0) throw std::invalid_argument("local_mass_profile: k_max >= 0");
    if (!(u.grid->r_min() <= std::pow(2.0, -k_max - 1)))
        throw std::invalid_argument("local_mass_profile: k_max beyond grid resolution");
    ShellMassProfile prof;
    prof.p = p;
    prof.k_max = k_max;
    prof.mass.resize(k_max + 1);
    prof.cumulative.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        prof.mass[k] = integrate_pmass(u, p, std::pow(2.0, -k - 1), std::pow(2.0, -k));
    for (int k = 0; k <= k_max; ++k)
        prof.cumulative[k] = integrate_pmass(u, p, 0.0, std::pow(2.0, -k));
    return prof;
}

struct FitWindow {
    int k_lo = 0;      // first shell index used
    int k_hi = -1;     // last shell index used (-1: all)
    int width = 4;     // shells per sliding window
};

namespace vanish_detail {

// least-squares slope of y against x
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct SlopeScan {
    double min_slope = kInf;
    double max_slope = -kInf;
    double global_slope = 0.0;
    int windows = 0;
};

// windowed slopes of log2(data_k) against log2(r_k) = -k
inline SlopeScan windowed_slopes(const std::vector<double>& data, const FitWindow& w) {
    const int k_hi = w.k_hi < 0 ? static_cast<int>(data.size()) - 1 : w.k_hi;
    SlopeScan scan;
    std::vector<double> gx, gy;
    for (int k = w.k_lo; k <= k_hi; ++k) {
        if (!(data[k] > 0.0)) continue;
        gx.push_back(-static_cast<double>(k));
        gy.push_back(std::log2(data[k]));
    }
    if (static_cast<int>(gx.size()) >= 2) scan.global_slope = ls_slope(gx, gy);
    for (int k = w.k_lo; k + w.width - 1 <= k_hi; ++k) {
        std::vector<double> x, y;
        bool ok = true;
        for (int j = k; j < k + w.width; ++j) {
            if (!(data[j] > 0.0)) {
                ok = false;
                break;
            }
            x.push_back(-static_cast<double>(j));
            y.push_back(std::log2(data[j]));
        }
        if (!ok) continue;
        const double s = ls_slope(x, y);
        scan.min_slope = std::min(scan.min_slope, s);
        scan.max_slope = std::max(scan.max_slope, s);
        ++scan.windows;
    }
    return scan;
}

}  // namespace vanish_detail

// ord_hat = (min windowed slope of log2 cumulative mass vs log2 r - 3)/p;
// +inf when no window has positive mass (infinite-order vanishing)
inline double estimate_ord(const ShellMassProfile& prof, const FitWindow& w = {}) {
    const auto scan = vanish_detail::windowed_slopes(prof.cumulative, w);
    if (scan.windows == 0) return kInf;
    return (scan.min_slope - 3.0) / prof.p;
}

// Ord_hat = (-limsup_k (log2 m_k)/k - 3)/p via the maximum windowed slope
// of log2 m_k against k (equivalently the minimum against log2 r)
inline double estimate_Ord(const ShellMassProfile& prof, const FitWindow& w = {}) {
    const auto scan = vanish_detail::windowed_slopes(prof.mass, w);
    if (scan.windows == 0) return kInf;
    return (scan.min_slope - 3.0) / prof.p;
}

struct VanishingReport {
    double p = 2.0;
    int k_max = 0;
    std::vector<double> shell_masses;
    double ord_hat = 0.0;
    double Ord_hat = 0.0;
    double ord_ls = 0.0;  // global least-squares variant
    int window_width = 4;
    int fit_k_lo = 0, fit_k_hi = 0;
    double fit_residual = 0.0;
};

inline VanishingReport vanishing_report(const RadialFunction& u, double p, int k_max,
                                        const FitWindow& w = {}) {
    const auto prof = local_mass_profile(u, p, k_max);
    VanishingReport rep;
    rep.p = p;
    rep.k_max = k_max;
    rep.shell_masses = prof.mass;
    rep.ord_hat = estimate_ord(prof, w);
    rep.Ord_hat = estimate_Ord(prof, w);
    const auto scan = vanish_detail::windowed_slopes(prof.cumulative, w);
    rep.ord_ls = scan.windows > 0 ? (scan.global_slope - 3.0) / p : kInf;
    rep.window_width = w.width;
    rep.fit_k_lo = w.k_lo;
    rep.fit_k_hi = w.k_hi < 0 ? k_max : w.k_hi;
    // rms deviation of windowed slopes around the global fit
    rep.fit_residual = scan.windows > 0 ? std::fabs(scan.max_slope - scan.min_slope) : 0.0;
    return rep;
}

// ||1_{B(0,radius)} |x|^{-N} u||_p. Divergence is detected from the trend
// of the innermost resolved shell contributions; +inf is returned then.
inline double carleman_norm(const RadialFunction& u, double p, int N, double radius) {
    const RadialGrid& g = *u.grid;
    if (!(radius <= g.r_max()))
        throw std::invalid_argument("carleman_norm: radius beyond grid");
    // weighted profile w = u * r^{-N}
    RadialFunction w = u;
    for (int i = 0; i < g.size(); ++i)
        w.values[i] = u.values[i] * std::pow(g.r(i), -static_cast<double>(N));
    // shell trend over the 6 innermost resolved dyadic shells
    const int k_res = static_cast<int>(std::floor(-std::log2(g.r_min()))) - 1;
    int increasing = 0, checked = 0;
    double prev = -1.0;
    for (int k = k_res; k >= 0 && checked < 6; --k) {
        const double r_hi = std::pow(2.0, -k);
        if (r_hi > radius) break;
        const double s = integrate_pmass(w, p, r_hi / 2.0, r_hi);
        if (prev >= 0.0) {
            ++checked;
            if (prev >= s) ++increasing;  // inner shell >= outer shell
        }
        prev = s;
    }
    if (checked >= 3 && increasing >= checked) return kInf;
    return lp_norm(w, p, 0.0, radius);
}

// strengthened variant with the (|V| + 1)^{1/p} weight
inline double carleman_norm_weighted(const RadialFunction& u, const Potential& V, double p,
                                     int N, double radius) {
    RadialFunction w = u;
    const RadialGrid& g = *u.grid;
    for (int i = 0; i < g.size(); ++i)
        w.values[i] = u.values[i] * std::pow(std::fabs(V(g.r(i))) + 1.0, 1.0 / p);
    return carleman_norm(w, p, N, radius);
}

struct CarlemanCheck {
    int N = 0;
    double p = 2.0;
    double beta = 0.0;
    double weighted_norm = 0.0;     // may be +inf
    double strengthened_norm = 0.0; // (|V|+1)^{1/p} weight, may be +inf
    bool condition_ok = false;      // p([beta]+1-beta) < 1
    double stability_delta = 0.0;   // relative change under one refinement
};

struct OrderBound {
    double bound = 0.0;          // log_{1/a}(K / ||u||_{B(0,a)}) + 1
    double bound_intro = 0.0;    // variant with the factor a inside the log
    double ball_norm = 0.0;
};

inline OrderBound order_upper_bound(double K, double a, const RadialFunction& u, double p) {
    if (!(a > 0.0) || !(a < 1.0)) throw std::invalid_argument("order_upper_bound: a in (0,1)");
    OrderBound out;
    out.ball_norm = lp_norm(u, p, 0.0, a);
    if (!(out.ball_norm > 0.0)) {
        out.bound = out.bound_intro = kInf;
        return out;
    }
    const double l = std::log(1.0 / a);
    out.bound = std::log(K / out.ball_norm) / l + 1.0;
    out.bound_intro = std::log(K / (a * out.ball_norm)) / l;
    return out;
}

struct GreenBoundFit {
    double beta = 0.0;
    double mu = 0.0;
    double A_low = 0.0, A_up = 0.0;
    double c_low = 0.0, c_up = 0.0;
    double condition_number = 0.0;
    double slope_near_origin = 0.0;  // log-slope of the l=0 mode over small r
    int n_samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::array<double, 5>> samples;  // |x|, cos, G, A_low comp(c_up), A_up comp(c_low)
};

namespace vanish_detail {

inline double comparator(double c, double mu, double r, double rho, double cosang,
                         double beta) {
    const double R = std::sqrt(r * r + rho * rho - 2.0 * r * rho * cosang);
    const double vanish = std::min(1.0, r * rho / (R * R));
    return std::exp(-c * std::sqrt(mu) * R) / R * std::pow(vanish, beta);
}

}  // namespace vanish_detail

// envelope fit A_low comp(c_up) <= G <= A_up comp(c_low) over samples with
// |x| log-uniform in [r_lo, r_hi] and y at the slice's source radius
inline GreenBoundFit green_bound_fit(const GreenSlice& slice, double mu, double beta,
                                     int samples, std::uint64_t seed, double r_lo = 1e-3,
                                     double r_hi = 1.0) {
    GreenBoundFit fit;
    fit.beta = beta;
    fit.mu = mu;
    fit.n_samples = samples;
    fit.seed = seed;
    Rng rng(seed);
    const double rho = slice.source_radius;
    struct Sample {
        double r, cosang, G;
    };
    std::vector<Sample> pts;
    pts.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const double r = rng.log_uniform(r_lo, r_hi);
        const double cosang = rng.uniform(-1.0, 1.0);
        const double G = slice.reconstruct(r, cosang);
        if (!(G > 0.0))
            throw std::runtime_error("green_bound_fit: nonpositive Green sample");
        pts.push_back({r, cosang, G});
    }
    // separable envelope search over a c grid
    auto spread = [&](double c, bool upper) {
        double ext = upper ? 0.0 : kInf;
        for (const auto& s : pts) {
            const double ratio =
                s.G / vanish_detail::comparator(c, mu, s.r, rho, s.cosang, beta);
            ext = upper ? std::max(ext, ratio) : std::min(ext, ratio);
        }
        return ext;
    };
    double best_up = kInf, best_low = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double c = 0.25 + 1.75 * i / 40.0;
        const double up = spread(c, true);    // A_up candidate for c_low = c
        const double low = spread(c, false);  // A_low candidate for c_up = c
        if (up < best_up) {
            best_up = up;
            fit.c_low = c;
        }
        if (low > best_low) {
            best_low = low;
            fit.c_up = c;
        }
    }
    fit.A_up = best_up;
    fit.A_low = best_low;
    fit.condition_number = fit.A_up / fit.A_low;
    fit.samples.reserve(pts.size());
    for (const auto& s : pts)
        fit.samples.push_back(
            {s.r, s.cosang, s.G,
             fit.A_low * vanish_detail::comparator(fit.c_up, mu, s.r, rho, s.cosang, beta),
             fit.A_up * vanish_detail::comparator(fit.c_low, mu, s.r, rho, s.cosang, beta)});
    // near-origin vanishing exponent from the l = 0 mode
    std::vector<double> lx, ly;
    for (double r = r_lo; r <= 0.1; r *= 1.3) {
        const double gv = slice.mode_at(0, r);
        if (gv > 0.0) {
            lx.push_back(std::log(r));
            ly.push_back(std::log(gv));
        }
    }
    fit.slope_near_origin =
        static_cast<int>(lx.size()) >= 2 ? vanish_detail::ls_slope(lx, ly) : 0.0;
    return fit;
}

// |beta(beta+1) - delta/4| with beta = (sqrt(1+delta)-1)/2; the exact
// residual of H|x|^beta = 0 in d = 3
inline double desingular_residual(double delta) {
    if (!(delta >= 0.0)) throw std::invalid_argument("desingular_residual: delta >= 0");
    const double beta = 0.5 * (std::sqrt(1.0 + delta) - 1.0);
    return std::fabs(beta * (beta + 1.0) - 0.25 * delta);
}

struct DesingularDiscrete {
    double residual_coarse = 0.0;
    double residual_fine = 0.0;
    double order = 0.0;  // measured convergence order
};

// dimensionless interior residual r^2 (-Delta + delta/(4r^2)) r^beta / r^beta
inline DesingularDiscrete desingular_discrete(double delta, GridPtr coarse) {
    const double beta = 0.5 * (std::sqrt(1.0 + delta) - 1.0);
    auto residual = [&](const RadialGrid& g) {
        double worst = 0.0;
        const double h = g.dt();
        for (int i = 1; i + 1 < g.size(); ++i) {
            const double um = std::pow(g.r(i - 1), beta);
            const double uc = std::pow(g.r(i), beta);
            const double up = std::pow(g.r(i + 1), beta);
            const double utt = (up - 2.0 * uc + um) / (h * h);
            const double ut = (up - um) / (2.0 * h);
            // r^2 H u = -(u_tt + u_t) + (delta/4) u
            const double res = -(utt + ut) + 0.25 * delta * uc;
            worst = std::max(worst, std::fabs(res / uc));
        }
        return worst;
    };
    DesingularDiscrete out;
    out.residual_coarse = residual(*coarse);
    const auto fine = refine_grid(coarse, 2);
    out.residual_fine = residual(*fine);
    out.order = std::log2(out.residual_coarse / out.residual_fine);
    return out;
}

struct CoercivityReport {
    double epsilon = 0.0, s = 0.0, delta = 0.0, delta0 = 0.0, lambda0 = 0.0;
    double c = 0.0;  // gradient coefficient certified by the inequality chain
    int probes = 0;
    double min_margin = 0.0;
    double max_identity_mismatch = 0.0;  // integration-by-parts identity
    std::uint64_t seed = 0;
};

// quadratic-form coercivity of the conjugated operator H^eps_psi with
// psi = |x|_eps^{-s}; margin = Re<H w, w> - c <grad w, grad w> + d0 l0 <w,w>
// minimized over random smooth probes (normalized by <grad w,grad w>+<w,w>).
inline CoercivityReport coercivity_check(double epsilon, double s, double delta,
                                         double delta0, double lambda0, GridPtr grid,
                                         int probes, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("coercivity_check: epsilon > 0");
    const double s_max = 0.5 * std::sqrt(1.0 + delta - delta0);
    if (!(s >= 0.0) || !(s < s_max))
        throw std::invalid_argument("coercivity_check: require 0 <= s < " +
                                    std::to_string(s_max));
    CoercivityReport rep;
    rep.epsilon = epsilon;
    rep.s = s;
    rep.delta = delta;
    rep.delta0 = delta0;
    rep.lambda0 = lambda0;
    rep.probes = probes;
    rep.seed = seed;
    // both constraints of the chain: c < 1 - delta0 (gradient split) and
    // c < 1 + delta - delta0 - 4 s^2 (sign of the |x|_eps^{-2} bracket)
    rep.c = 0.9 * std::min(1.0 - delta0, 1.0 + delta - delta0 - 4.0 * s * s);
    const RadialGrid& g = *grid;
    const double ta = std::log(g.r_min()), tb = std::log(g.r_max());
    Rng rng(seed);
    rep.min_margin = kInf;

    // composite Simpson in t over the grid nodes
    auto integrate_t = [&](const std::function<double(int, double)>& f) {
        double sum = 0.0;
        int i = 0;
        for (; i + 2 < g.size(); i += 2) {
            const double t0 = ta + i * g.dt();
            sum += g.dt() / 3.0 *
                   (f(i, t0) + 4.0 * f(i + 1, t0 + g.dt()) + f(i + 2, t0 + 2 * g.dt()));
        }
        for (; i + 1 < g.size(); ++i) {  // leftover cell (even node count)
            const double t0 = ta + i * g.dt();
            sum += 0.5 * g.dt() * (f(i, t0) + f(i + 1, t0 + g.dt()));
        }
        return sum;
    };

    for (int k = 0; k < probes; ++k) {
        // smooth compactly supported probe in t with analytic derivative
        struct Bump {
            double c0, w, a;
        };
        const int nb = 1 + static_cast<int>(rng.next_u64() % 3ull);
        std::vector<Bump> bumps(nb);
        for (auto& b : bumps) {
            b.c0 = rng.uniform(ta + 0.1 * (tb - ta), tb - 0.1 * (tb - ta));
            b.w = rng.log_uniform(0.3, 0.2 * (tb - ta));
            b.a = rng.uniform(-1.0, 1.0);
        }
        auto wval = [&](double t) {
            double v = 0.0;
            for (const auto& b : bumps) {
                const double q = (t - b.c0) / b.w;
                if (std::fabs(q) < 1.0) v += b.a * std::exp(1.0 - 1.0 / (1.0 - q * q));
            }
            return v;
        };
        auto wder = [&](double t) {  // dw/dt
            double v = 0.0;
            for (const auto& b : bumps) {
                const double q = (t - b.c0) / b.w;
                if (std::fabs(q) < 1.0) {
                    const double e = std::exp(1.0 - 1.0 / (1.0 - q * q));
                    v += b.a * e * (-2.0 * q / ((1.0 - q * q) * (1.0 - q * q))) / b.w;
                }
            }
            return v;
        };
        constexpr double four_pi = 4.0 * 3.14159265358979323846;
        // <f w, w> = 4 pi int f w^2 r^3 dt ; <grad w, grad w> = 4 pi int w_t^2 r dt
        auto m_grad = four_pi * integrate_t([&](int i, double t) {
                          const double wt = wder(t);
                          return wt * wt * g.r(i);
                      });
        auto m_mass = four_pi * integrate_t([&](int i, double t) {
                          const double wv = wval(t);
                          return wv * wv * g.r(i) * g.r(i) * g.r(i);
                      });
        if (!(m_grad + m_mass > 0.0)) continue;
        const double scale = 1.0 / (m_grad + m_mass);
        auto weighted = [&](const std::function<double(double)>& f) {
            return four_pi * integrate_t([&](int i, double t) {
                       const double wv = wval(t);
                       const double r = g.r(i);
                       return f(r) * wv * wv * r * r * r;
                   });
        };
        // drift term 2<(grad psi/psi).grad w, w> = -2s int w_t w r^2/(r^2+eps) r dt
        const double drift = four_pi * integrate_t([&](int i, double t) {
                                 const double r = g.r(i);
                                 return -2.0 * s * wder(t) * wval(t) * r * r * r /
                                        (r * r + epsilon);
                             });
        const double inv2 = weighted([&](double r) { return 1.0 / (r * r + epsilon); });
        const double inv4 = weighted([&](double r) {
            const double q = r * r + epsilon;
            return 1.0 / (q * q);
        });
        const double r2_inv4 = weighted([&](double r) {
            const double q = r * r + epsilon;
            return r * r / (q * q);
        });
        // identity: drift = s <|x|_eps^-2 w,w> + 2 s eps <|x|_eps^-4 w,w>
        const double identity_rhs = s * inv2 + 2.0 * s * epsilon * inv4;
        const double mism = std::fabs(drift - identity_rhs) /
                            std::fmax(1.0, std::fmax(std::fabs(drift), std::fabs(identity_rhs)));
        rep.max_identity_mismatch = std::max(rep.max_identity_mismatch, mism);
        // Re<H^eps_psi w, w>; Delta psi/psi and (grad psi)^2/psi^2 in closed form
        const double dpsi_over = -3.0 * s * inv2 + s * (s + 2.0) * r2_inv4;
        const double gpsi2_over = s * s * r2_inv4;
        const double vterm = delta * 0.25 * inv2;  // pure Hardy part of V_eps
        const double h_form = m_grad + drift + dpsi_over - 2.0 * gpsi2_over + vterm;
        const double margin =
            (h_form - rep.c * m_grad + delta0 * lambda0 * m_mass) * scale;
        rep.min_margin = std::min(rep.min_margin, margin);
    }
    return rep;
}

struct LowerBoundReport {
    double delta = 0.0, delta0 = 0.0, mu = 0.0;
    double p = 6.0;
    double Ord_hat = 0.0;
    double threshold = 0.0;  // (1/2)(sqrt(1+delta-delta0)-1)
    double margin = 0.0;     // Ord_hat - threshold
};

// Ord at p = 2d/(d-2) = 6 for the composite-potential resolvent solution,
// checked against the desingularization threshold
inline LowerBoundReport lower_bound_check(double delta, double delta0, double mu,
                                          const RadialFunction& f, GridPtr grid,
                                          int k_max, const FitWindow& w = {}) {
    Potential V = make_hardy(3, delta, 0.0);
    if (delta0 > 0.0) {
        // perturbation carrying exactly the declared form bound delta0
        const double coeff = delta0 / 4.0;
        V = make_composite(
            V, [coeff](double r) { return coeff / (r * r); }, delta0, 0.0, coeff);
    }
    const auto u = resolvent_apply(mu, V, f, grid, true);
    const auto prof = local_mass_profile(u, 6.0, k_max);
    LowerBoundReport rep;
    rep.delta = delta;
    rep.delta0 = delta0;
    rep.mu = mu;
    rep.Ord_hat = estimate_Ord(prof, w);
    rep.threshold = 0.5 * (std::sqrt(1.0 + delta - delta0) - 1.0);
    rep.margin = rep.Ord_hat - rep.threshold;
    return rep;
}

struct ImplicationReport {
    double beta = 0.0;
    int N = 0;
    double p = 2.0;
    bool condition_ok = false;     // p([beta]+1-beta) < 1
    bool beta_flagged = false;     // beta exceeds measured ord_hat (tolerated)
    double ord_hat = 0.0;
    double Ord_hat = 0.0;
    double carleman = 0.0;         // may be +inf
    double carleman_refined = 0.0;
    double stability_delta = 0.0;
    double lhs = 0.0;              // [beta]+1-3/p
    bool implication_ok = false;   // lhs <= Ord_hat + tol
};

// the chain: beta <= ord, p([beta]+1-beta) < 1, finite Carleman norm
//   =>  [beta]+1-3/p <= Ord
inline ImplicationReport implication_check(const RadialFunction& u, double p, double beta,
                                           int k_max, const FitWindow& w = {},
                                           double tol = 0.02) {
    ImplicationReport rep;
    rep.beta = beta;
    rep.p = p;
    rep.N = static_cast<int>(std::floor(beta)) + 1;
    rep.condition_ok = p * (rep.N - beta) < 1.0;
    const auto prof = local_mass_profile(u, p, k_max);
    rep.ord_hat = estimate_ord(prof, w);
    rep.Ord_hat = estimate_Ord(prof, w);
    rep.beta_flagged = beta > rep.ord_hat;
    rep.carleman = carleman_norm(u, p, rep.N, 1.0);
    // one grid refinement for the stability figure
    const auto fine_grid = refine_grid(u.grid, 2);
    RadialFunction uf;
    uf.grid = fine_grid;
    uf.values.resize(fine_grid->size());
    for (int i = 0; i < fine_grid->size(); ++i)
        uf.values[i] = interp_loglog(u, fine_grid->r(i));
    rep.carleman_refined = carleman_norm(uf, p, rep.N, 1.0);
    rep.stability_delta =
        std::isfinite(rep.carleman) && rep.carleman > 0.0
            ? std::fabs(rep.carleman_refined - rep.carleman) / rep.carleman
            : kInf;
    rep.lhs = rep.N - 3.0 / p;
    rep.implication_ok = rep.lhs <= rep.Ord_hat + tol;
    return rep;
}

}  // namespace greenlab
