#pragma once
//
// greenlab/radial_grid
// Logarithmic radial mesh and sampled radial profiles. The mesh is uniform
// in t = log r, so power-law behaviour near the origin is resolved at
// constant relative cost and dyadic shells carry identical relative
// quadrature error (slope fits on power data are then exact up to roundoff).
//

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace greenlab {

class RadialGrid {
  public:
    RadialGrid(double r_min, double r_max, int n_points) {
        if (!(r_min > 0.0) || !(r_min < 1.0) || !(r_max > 1.0))
            throw std::invalid_argument("RadialGrid: require 0 < r_min < 1 < r_max");
        if (n_points < 64) throw std::invalid_argument("RadialGrid: n_points >= 64");
        r_min_ = r_min;
        r_max_ = r_max;
        dt_ = std::log(r_max / r_min) / (n_points - 1);
        r_.resize(n_points);
        for (int i = 0; i < n_points; ++i) r_[i] = r_min * std::exp(i * dt_);
        r_.back() = r_max;
    }

    int size() const { return static_cast<int>(r_.size()); }
    double r(int i) const { return r_[i]; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double dt() const { return dt_; }
    const std::vector<double>& nodes() const { return r_; }

    int nearest_index(double r) const {
        if (r <= r_min_) return 0;
        if (r >= r_max_) return size() - 1;
        const double k = std::log(r / r_min_) / dt_;
        const int i = static_cast<int>(std::lround(k));
        return std::min(std::max(i, 0), size() - 1);
    }

    // index of the cell [r_i, r_{i+1}] containing r
    int cell_index(double r) const {
        const int i = static_cast<int>(std::floor(std::log(r / r_min_) / dt_));
        return std::min(std::max(i, 0), size() - 2);
    }

  private:
    double r_min_, r_max_, dt_;
    std::vector<double> r_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

inline GridPtr make_grid(double r_min = 1e-4, double r_max = 20.0, int n_points = 4096) {
    return std::make_shared<const RadialGrid>(r_min, r_max, n_points);
}

inline GridPtr refine_grid(const GridPtr& g, int factor = 2) {
    return make_grid(g->r_min(), g->r_max(), (g->size() - 1) * factor + 1);
}

struct RadialFunction {
    GridPtr grid;
    std::vector<double> values;
    int l = 0;
    double mu = 0.0;
    std::string potential_id;
    std::uint32_t flags = 0;

    static constexpr std::uint32_t kNonCoercive = 1u;
    static constexpr std::uint32_t kRegularizedIndicial = 2u;

    double at(int i) const { return values[i]; }
};

inline RadialFunction make_radial(GridPtr grid, const std::function<double(double)>& f,
                                  int l = 0) {
    RadialFunction out;
    out.grid = std::move(grid);
    out.l = l;
    out.values.resize(out.grid->size());
    for (int i = 0; i < out.grid->size(); ++i) out.values[i] = f(out.grid->r(i));
    return out;
}

// Log-log (power-law) interpolation; exact on r^a data of one sign.
// Falls back to linear interpolation in t when signs differ or values vanish.
inline double interp_loglog(const RadialGrid& g, std::span<const double> v, double r) {
    if (r <= g.r_min()) return v.front();
    if (r >= g.r_max()) return v.back();
    const int i = g.cell_index(r);
    const double va = v[i], vb = v[i + 1];
    const double w = std::log(r / g.r(i)) / (std::log(g.r(i + 1) / g.r(i)));
    if (va > 0.0 && vb > 0.0)
        return va * std::exp(w * std::log(vb / va));
    if (va < 0.0 && vb < 0.0)
        return -(-va) * std::exp(w * std::log(vb / va));
    return va + w * (vb - va);  // sign change or zero: linear in t
}

inline double interp_loglog(const RadialFunction& u, double r) {
    return interp_loglog(*u.grid, u.values, r);
}

// integral of v dr over the whole grid (trapezoid in t, Jacobian r)
inline double integrate(const RadialGrid& g, std::span<const double> v) {
    double s = 0.0;
    for (int i = 0; i + 1 < g.size(); ++i)
        s += 0.5 * (v[i] * g.r(i) + v[i + 1] * g.r(i + 1)) * g.dt();
    return s;
}

namespace grid_detail {

// integral of |u|^p * 4 pi r^2 over one cell [ra, rb] inside [r_i, r_{i+1}],
// using power-law interpolation of |u| across the cell.
inline double cell_pmass(double ri, double rj, double ui, double uj, double p, double ra,
                         double rb) {
    constexpr double four_pi = 4.0 * 3.14159265358979323846;
    const double ai = std::fabs(ui), aj = std::fabs(uj);
    if (ai == 0.0 && aj == 0.0) return 0.0;
    if (ai > 0.0 && aj > 0.0) {
        const double gamma = std::log(aj / ai) / std::log(rj / ri);
        const double q = gamma * p + 3.0;
        const double c = std::pow(ai, p) / std::pow(ri, gamma * p);
        if (std::fabs(q) > 1e-12)
            return four_pi * c * (std::pow(rb, q) - std::pow(ra, q)) / q;
        return four_pi * c * std::log(rb / ra);
    }
    // linear fallback through a zero
    const double w_a = (ra - ri) / (rj - ri), w_b = (rb - ri) / (rj - ri);
    const double ua = ai + w_a * (aj - ai), ub = ai + w_b * (aj - ai);
    return four_pi * 0.5 * (std::pow(ua, p) * ra * ra + std::pow(ub, p) * rb * rb) *
           (rb - ra);
}

}  // namespace grid_detail

// integral of 4 pi r^2 |u|^p dr over [r_lo, r_hi] (clipped to the grid),
// with exact splitting of the boundary cells.
inline double integrate_pmass(const RadialGrid& g, std::span<const double> v, double p,
                              double r_lo, double r_hi) {
    r_lo = std::max(r_lo, g.r_min());
    r_hi = std::min(r_hi, g.r_max());
    if (!(r_hi > r_lo)) return 0.0;
    double s = 0.0;
    const int i0 = g.cell_index(r_lo);
    const int i1 = g.cell_index(r_hi);
    for (int i = i0; i <= i1; ++i) {
        const double a = std::max(r_lo, g.r(i));
        const double b = std::min(r_hi, g.r(i + 1));
        if (b <= a) continue;
        s += grid_detail::cell_pmass(g.r(i), g.r(i + 1), v[i], v[i + 1], p, a, b);
    }
    return s;
}

inline double integrate_pmass(const RadialFunction& u, double p, double r_lo, double r_hi) {
    return integrate_pmass(*u.grid, u.values, p, r_lo, r_hi);
}

// L^p norm with the 3d radial measure
inline double lp_norm(const RadialGrid& g, std::span<const double> v, double p,
                      double r_lo, double r_hi) {
    return std::pow(integrate_pmass(g, v, p, r_lo, r_hi), 1.0 / p);
}

inline double lp_norm(const RadialFunction& u, double p, double r_lo, double r_hi) {
    return lp_norm(*u.grid, u.values, p, r_lo, r_hi);
}

inline void write_csv(std::ostream& os, const RadialFunction& u) {
    os << "r,value\n";
    char buf[64];
    for (int i = 0; i < u.grid->size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", u.grid->r(i), u.values[i]);
        os << buf;
    }
}

}  // namespace greenlab
