#pragma once
//
// greenlab/potentials
// Potential families (Hardy core + perturbations) and the elementary
// subclass functionals (L^{d/2}, weak L^{d/2}, Campanato-Morrey,
// Chang-Wilson-Wolff) evaluated over dyadic cube decompositions.
//

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace greenlab {

struct Potential {
    int d = 3;
    double hardy_delta = 0.0;  // delta in delta (d-2)^2/4 |x|_eps^{-2}
    double epsilon = 0.0;      // |x|_eps = sqrt(|x|^2 + eps)
    std::function<double(double)> v0;  // optional radial perturbation
    double delta0 = 0.0;               // declared form-bound of v0
    double lambda0 = 0.0;              // declared shift of v0
    double v0_sing_coeff = 0.0;        // limit of r^2 v0(r) at 0, when singular
    double support_radius = std::numeric_limits<double>::infinity();
    std::string id;

    double hardy_coeff() const { return hardy_delta * (d - 2) * (d - 2) / 4.0; }

    // coefficient c of the r^-2 singularity at the origin (epsilon = 0 case)
    double singular_coeff() const { return hardy_coeff() + v0_sing_coeff; }

    double operator()(double r) const {
        if (r > support_radius) return 0.0;
        double v = 0.0;
        if (hardy_delta != 0.0) {
            const double q = r * r + epsilon;
            if (q == 0.0)
                throw std::domain_error("Potential: evaluation at r=0 with epsilon=0");
            v += hardy_coeff() / q;
        }
        if (v0) v += v0(r);
        return v;
    }
};

inline Potential make_hardy(int d, double delta, double epsilon) {
    if (d < 3 || delta < 0.0 || epsilon < 0.0)
        throw std::invalid_argument("make_hardy: require d >= 3, delta >= 0, epsilon >= 0");
    Potential p;
    p.d = d;
    p.hardy_delta = delta;
    p.epsilon = epsilon;
    p.id = epsilon > 0.0 ? "hardy_regularized" : "hardy";
    return p;
}

inline Potential make_composite(const Potential& hardy, std::function<double(double)> v0,
                                double delta0, double lambda0, double v0_sing_coeff = 0.0) {
    Potential p = hardy;
    p.v0 = std::move(v0);
    p.delta0 = delta0;
    p.lambda0 = lambda0;
    p.v0_sing_coeff = v0_sing_coeff;
    p.id = "composite";
    return p;
}

// smooth compactly supported bump M (1-((r-c)/w)^2)^2 on |r-c|<w
inline Potential make_bounded_bump(double height, double center, double width) {
    Potential p;
    p.v0 = [=](double r) {
        const double s = (r - center) / width;
        const double q = 1.0 - s * s;
        return q > 0.0 ? height * q * q : 0.0;
    };
    p.delta0 = 0.0;
    p.lambda0 = height;
    p.id = "bounded_bump";
    return p;
}

inline Potential truncate_potential(const Potential& V, double a, double b) {
    Potential p;
    p.d = V.d;
    const Potential inner = V;
    p.v0 = [inner, a, b](double r) { return (r > a && r < b) ? inner(r) : 0.0; };
    p.delta0 = V.delta0;
    p.lambda0 = V.lambda0;
    p.support_radius = b;
    p.id = V.id + "_truncated";
    return p;
}

struct FormBoundReport {
    double delta_hat = 0.0;
    double lambda = 0.0;
    double nu_hat = 0.0;  // local bound over B(0, radius)
    double local_radius = 0.0;
    int l_max = 0;
    double grid_r_min = 0.0, grid_r_max = 0.0;
    int grid_n = 0;
};

struct SubclassReport {
    double ld2_norm = 0.0;   // +inf when |V|^{d/2} is not integrable
    double weak_ld2 = 0.0;
    double morrey_cs = 0.0;  // +inf when |V|^s is not integrable
    double cww_value = 0.0;
    double s = 0.0;
    int dyadic_depth = 0;
};

namespace dyadic {

struct Box {
    std::array<double, 3> lo{};
    double side = 1.0;
};

inline double dist_to_origin(const Box& b) {
    double q = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double d = std::max({b.lo[a], -(b.lo[a] + b.side), 0.0});
        q += d * d;
    }
    return std::sqrt(q);
}

inline bool touches_origin(const Box& b) { return dist_to_origin(b) <= 0.0; }

struct IntResult {
    double value = 0.0;
    bool divergent = false;
    void operator+=(const IntResult& o) {
        value += o.value;
        divergent = divergent || o.divergent;
    }
};

using RadialFn = std::function<double(double)>;

// histogram of (|V|, volume) pairs used for the weak-L^{d/2} quasinorm
struct LevelHistogram {
    static constexpr int kBins = 1200;
    static constexpr double kLogMin = -60.0, kLogMax = 60.0;
    std::array<double, kBins> vol{};

    void add(double value, double volume) {
        if (!(value > 0.0)) return;
        const double l = std::log(value);
        int i = static_cast<int>((l - kLogMin) / (kLogMax - kLogMin) * kBins);
        i = std::min(std::max(i, 0), kBins - 1);
        vol[i] += volume;
    }

    // sup_t t |{|V| > t}|^{2/3}, t running over bin edges
    double weak_quasinorm() const {
        double sup = 0.0, above = 0.0;
        for (int i = kBins - 1; i >= 0; --i) {
            above += vol[i];
            const double t = std::exp(kLogMin + (kLogMax - kLogMin) * i / kBins);
            sup = std::max(sup, t * std::pow(above, 2.0 / 3.0));
        }
        return sup;
    }
};

struct Collect {
    LevelHistogram* hist = nullptr;
    const RadialFn* hist_fn = nullptr;  // |V|
};

// midpoint rule, 2 points per axis, on a general rectangular box
inline double midpoint8(const std::array<double, 3>& lo, const std::array<double, 3>& len,
                        const RadialFn& f, const Collect& col) {
    double s = 0.0;
    for (int ix = 0; ix < 2; ++ix)
        for (int iy = 0; iy < 2; ++iy)
            for (int iz = 0; iz < 2; ++iz) {
                const std::array<int, 3> pick{ix, iy, iz};
                std::array<double, 3> x{};
                for (int a = 0; a < 3; ++a)
                    x[a] = lo[a] + len[a] * (0.25 + 0.5 * pick[a]);
                s += f(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
            }
    const double vol = len[0] * len[1] * len[2];
    if (col.hist && col.hist_fn) {
        std::array<double, 3> c{};
        for (int a = 0; a < 3; ++a) c[a] = lo[a] + 0.5 * len[a];
        const double rc = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        col.hist->add(std::fabs((*col.hist_fn)(rc)), vol);
    }
    return s * vol / 8.0;
}

// integral over [0,side]^3 (origin at a corner) by geometric rings of
// seven half-scale cubes; non-decaying ring sums flag divergence
inline IntResult corner_cube_integral(double side, const RadialFn& f, const Collect& col) {
    IntResult out;
    double prev = -1.0;
    int flat = 0;
    for (int j = 0; j < 60; ++j) {
        const double half = side / 2.0;
        double ring = 0.0;
        for (int mask = 1; mask < 8; ++mask) {
            std::array<double, 3> lo{}, len{half, half, half};
            for (int a = 0; a < 3; ++a) lo[a] = ((mask >> a) & 1) ? half : 0.0;
            ring += midpoint8(lo, len, f, col);
        }
        out.value += ring;
        if (j > 3 && ring > 0.0 && ring >= 0.995 * prev) {
            if (++flat >= 3) {
                out.divergent = true;
                out.value = std::numeric_limits<double>::infinity();
                return out;
            }
        } else {
            flat = 0;
        }
        if (j > 3 && ring < 1e-16 * out.value) break;
        prev = ring;
        side = half;
    }
    return out;
}

// integral over [0,la] x [0,lb] x [0,lc] with the origin at a corner:
// corner cube of side s = min(l*) by rings, remainder by three slabs
// tiled with boxes of pitch s (f is regular there, distance >= s)
inline IntResult orthant_integral(std::array<double, 3> len, const RadialFn& f,
                                  const Collect& col) {
    IntResult out;
    const double s = std::min({len[0], len[1], len[2]});
    if (!(s > 0.0)) return out;
    out += corner_cube_integral(s, f, col);
    // slabs: axis a extends beyond s while axes < a are clipped to s
    for (int a = 0; a < 3; ++a) {
        if (len[a] <= s) continue;
        std::array<double, 3> slab_lo{}, slab_len{};
        for (int q = 0; q < 3; ++q) {
            if (q == a) {
                slab_lo[q] = s;
                slab_len[q] = len[q] - s;
            } else {
                slab_lo[q] = 0.0;
                slab_len[q] = q < a ? std::min(len[q], s) : len[q];
            }
        }
        // tile the slab with boxes of pitch <= s along each axis
        std::array<int, 3> ncell{};
        for (int q = 0; q < 3; ++q)
            ncell[q] = std::max(1, static_cast<int>(std::ceil(slab_len[q] / s)));
        for (int i = 0; i < ncell[0]; ++i)
            for (int jy = 0; jy < ncell[1]; ++jy)
                for (int k = 0; k < ncell[2]; ++k) {
                    const std::array<int, 3> idx{i, jy, k};
                    std::array<double, 3> lo{}, ln{};
                    for (int q = 0; q < 3; ++q) {
                        const double step = slab_len[q] / ncell[q];
                        lo[q] = slab_lo[q] + idx[q] * step;
                        ln[q] = step;
                    }
                    out.value += midpoint8(lo, ln, f, col);
                }
    }
    return out;
}

// integral of f(|x|) over an arbitrary axis-aligned box; origin-touching
// boxes are reflected into positive orthant pieces first (f is radial)
inline IntResult box_integral(const Box& b, const RadialFn& f, const Collect& col = {}) {
    if (!touches_origin(b)) {
        IntResult out;
        out.value = midpoint8(b.lo, {b.side, b.side, b.side}, f, col);
        return out;
    }
    IntResult out;
    std::array<std::array<double, 2>, 3> seg{};  // per axis: extent below/above 0
    for (int a = 0; a < 3; ++a) {
        const double below = std::clamp(0.0 - b.lo[a], 0.0, b.side);
        seg[a] = {below, b.side - below};
    }
    for (int mask = 0; mask < 8; ++mask) {
        std::array<double, 3> len{};
        bool empty = false;
        for (int a = 0; a < 3; ++a) {
            len[a] = seg[a][(mask >> a) & 1];
            if (len[a] <= 0.0) empty = true;
        }
        if (!empty) out += orthant_integral(len, f, col);
    }
    return out;
}

}  // namespace dyadic

inline std::function<double(double)> default_cww_phi() {
    return [](double x) { return std::pow(1.0 + std::log1p(x), 1.01); };
}

namespace potentials_detail {

struct SweepResult {
    dyadic::IntResult int_d2;  // integral of |V|^{d/2}
    dyadic::IntResult int_s;   // integral of |V|^s
};

struct SweepContext {
    const Potential* V;
    double s;
    int depth;
    int cww_depth;
    const std::function<double(double)>* phi;
    double morrey_sup = 0.0;
    bool morrey_divergent = false;
    double cww_sup = 0.0;
    dyadic::LevelHistogram hist;
};

inline SweepResult sweep(SweepContext& ctx, const dyadic::Box& box, int depth) {
    using namespace dyadic;
    const Potential& V = *ctx.V;
    SweepResult res;
    if (depth == ctx.depth) {
        const RadialFn absV = [&V](double r) { return std::fabs(V(r)); };
        const RadialFn f_d2 = [&V](double r) { return std::pow(std::fabs(V(r)), 1.5); };
        const RadialFn f_s = [&V, &ctx](double r) {
            return std::pow(std::fabs(V(r)), ctx.s);
        };
        Collect col{&ctx.hist, &absV};
        res.int_d2 = box_integral(box, f_d2, col);
        res.int_s = box_integral(box, f_s);
    } else {
        for (int k = 0; k < 8; ++k) {
            Box child;
            child.side = box.side / 2.0;
            for (int a = 0; a < 3; ++a)
                child.lo[a] = box.lo[a] + (((k >> a) & 1) ? child.side : 0.0);
            const SweepResult r = sweep(ctx, child, depth + 1);
            res.int_d2 += r.int_d2;
            res.int_s += r.int_s;
        }
    }
    // Campanato-Morrey candidate on this cube
    const double vol = box.side * box.side * box.side;
    if (res.int_s.divergent)
        ctx.morrey_divergent = true;
    else
        ctx.morrey_sup =
            std::max(ctx.morrey_sup,
                     box.side * box.side * std::pow(res.int_s.value / vol, 1.0 / ctx.s));
    // Chang-Wilson-Wolff candidate (own quadrature: the weight depends on l(Q))
    if (depth <= ctx.cww_depth) {
        const double l2 = box.side * box.side;
        const auto& phi = *ctx.phi;
        const RadialFn f_cww = [&V, l2, &phi](double r) {
            const double a = std::fabs(V(r));
            return a * l2 * phi(a * l2);
        };
        const IntResult c = box_integral(box, f_cww);
        if (!c.divergent) ctx.cww_sup = std::max(ctx.cww_sup, c.value / vol);
    }
    return res;
}

}  // namespace potentials_detail

// The four subclass functionals over a dyadic decomposition of `box`.
// Non-integrable entries report +inf rather than throwing.
inline SubclassReport subclass_report(const Potential& V, double s, const dyadic::Box& box,
                                      int dyadic_depth,
                                      std::function<double(double)> phi = default_cww_phi()) {
    if (!(s > 1.0)) throw std::invalid_argument("subclass_report: require s > 1");
    if (dyadic_depth < 1 || dyadic_depth > 12)
        throw std::invalid_argument("subclass_report: dyadic_depth in [1,12]");
    potentials_detail::SweepContext ctx;
    ctx.V = &V;
    ctx.s = s;
    ctx.depth = dyadic_depth;
    ctx.cww_depth = std::min(dyadic_depth, 6);
    ctx.phi = &phi;
    const auto res = potentials_detail::sweep(ctx, box, 0);
    SubclassReport rep;
    rep.s = s;
    rep.dyadic_depth = dyadic_depth;
    rep.ld2_norm = res.int_d2.divergent ? std::numeric_limits<double>::infinity()
                                        : std::pow(res.int_d2.value, 2.0 / 3.0);
    rep.weak_ld2 = ctx.hist.weak_quasinorm();
    rep.morrey_cs =
        ctx.morrey_divergent ? std::numeric_limits<double>::infinity() : ctx.morrey_sup;
    rep.cww_value = ctx.cww_sup;
    return rep;
}

}  // namespace greenlab
