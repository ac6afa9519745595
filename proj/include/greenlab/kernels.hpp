#pragma once
//
// greenlab/kernels
// Riesz kernels, Taylor-truncated kernels and gradient variants, ratio
// scans for the truncation estimates, and the complex-plane tail bounds.
//
// For d = 3, alpha = 2 the kernel is c/|x-y| and its Taylor expansion in
// x at 0 is the Legendre series c sum_n |x|^n P_n(cos theta)/|y|^{n+1};
// each term is the homogeneous degree-n part, so truncation is the series
// tail for |x| < |y| and compensated direct subtraction otherwise.
//

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greenlab/math/compensated.hpp"
#include "greenlab/math/legendre.hpp"
#include "greenlab/rng.hpp"

namespace greenlab {

using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

inline Vec3 sub3(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

struct TruncatedKernelSpec {
    int d = 3;
    double alpha = 2.0;
    int trunc_order = 0;                // N = [beta] + 1 in the estimates
    std::optional<int> grad_index;      // 1..d, only for alpha = d-1

    void validate() const {
        if (!(alpha > 0.0) || !(alpha < d))
            throw std::invalid_argument("TruncatedKernelSpec: alpha in (0, d)");
        if (trunc_order < 0)
            throw std::invalid_argument("TruncatedKernelSpec: N >= 0");
        if (grad_index) {
            if (alpha != d - 1)
                throw std::invalid_argument(
                    "TruncatedKernelSpec: gradient variant requires alpha = d-1");
            if (*grad_index < 1 || *grad_index > d)
                throw std::invalid_argument("TruncatedKernelSpec: grad_index in 1..d");
        }
    }
};

// standard Riesz normalization Gamma((d-a)/2) / (pi^{d/2} 2^a Gamma(a/2))
inline double riesz_constant(int d, double alpha) {
    return std::exp(std::lgamma(0.5 * (d - alpha)) - 0.5 * d * std::log(3.14159265358979323846) -
                    alpha * std::log(2.0) - std::lgamma(0.5 * alpha));
}

inline double riesz_eval(const TruncatedKernelSpec& spec, const Vec3& x, const Vec3& y) {
    spec.validate();
    if (spec.trunc_order != 0 || spec.grad_index)
        throw std::invalid_argument("riesz_eval: plain kernel only (N=0, no gradient)");
    const double R = norm3(sub3(x, y));
    if (R == 0.0) throw std::domain_error("riesz_eval: coincident points");
    return riesz_constant(spec.d, spec.alpha) * std::pow(R, -spec.d + spec.alpha);
}

enum class KernelRoute { Auto, Series, Direct };

namespace kernel_detail {

struct Geometry {
    double ry;   // |y|
    double t;    // |x|/|y|
    double u;    // cos angle(x,y)
    double rho;  // |x-y|/|y| = sqrt(1 + t^2 - 2 t u)
    Vec3 xhat, yhat;
};

inline Geometry geometry(const Vec3& x, const Vec3& y) {
    Geometry g;
    g.ry = norm3(y);
    if (g.ry == 0.0) throw std::domain_error("truncated kernel: y = 0");
    const double rx = norm3(x);
    g.t = rx / g.ry;
    g.yhat = {y[0] / g.ry, y[1] / g.ry, y[2] / g.ry};
    g.xhat = rx > 0.0 ? Vec3{x[0] / rx, x[1] / rx, x[2] / rx} : Vec3{0.0, 0.0, 0.0};
    g.u = rx > 0.0 ? dot3(g.xhat, g.yhat) : 1.0;
    const double q = 1.0 + g.t * g.t - 2.0 * g.t * g.u;
    g.rho = std::sqrt(std::fmax(q, 0.0));
    if (g.rho == 0.0) throw std::domain_error("truncated kernel: coincident points");
    return g;
}

// tail sum_{n>=N} t^n P_n(u); certified by |P_n| <= 1
inline double legendre_tail(double t, double u, int N, int max_terms = 20000) {
    LegendreSeq seq(u);
    for (int n = 0; n < N; ++n) seq.next();
    double tn = std::pow(t, N);
    double sum = 0.0;
    for (int n = N; n < N + max_terms; ++n) {
        sum += tn * seq.next();
        tn *= t;
        if (tn / (1.0 - t) < 1e-17 * (std::fabs(sum) + 1e-300) && n > N + 2) return sum;
        if (tn < 1e-305) return sum;
    }
    throw std::runtime_error("legendre_tail: series did not certify");
}

// gradient series terms, scaled so that
//   grad_x K = (c/|y|^2) sum_{n>=1} gterm_n,   gterm homogeneous deg n-1.
// gterm_n[i] = t^{n-1} (n xhat_i P_n + P_n'(u) (yhat_i - u xhat_i))
inline Vec3 grad_term(const Geometry& g, int n, double pn, double dpn, double tnm1) {
    Vec3 v;
    for (int i = 0; i < 3; ++i)
        v[i] = tnm1 * (n * g.xhat[i] * pn + dpn * (g.yhat[i] - g.u * g.xhat[i]));
    return v;
}

// sum_{n>M} n(n+2) t^{n-1}, used to certify the gradient tail
inline double grad_tail_bound(double t, int M) {
    const double s0 = 1.0 / (1.0 - t);
    const double s1 = t / ((1.0 - t) * (1.0 - t));
    const double s2 = t * (1.0 + t) / ((1.0 - t) * (1.0 - t) * (1.0 - t));
    const double a = M + 3.0;  // (n+2) <= (M+3+k) for n = M+1+k
    return std::pow(t, M) * (a * a * s0 + 2.0 * a * s1 + s2);
}

inline Vec3 grad_series_tail(const Geometry& g, int N, int max_terms = 20000) {
    LegendreDerivSeq seq(g.u);
    for (int n = 0; n <= N; ++n) seq.next();  // consume orders 0..N
    double tnm1 = std::pow(g.t, N);           // t^{n-1} at n = N+1
    Vec3 sum{0.0, 0.0, 0.0};
    for (int n = N + 1; n < N + 1 + max_terms; ++n) {
        const auto [pn, dpn] = seq.next();
        const Vec3 v = grad_term(g, n, pn, dpn, tnm1);
        for (int i = 0; i < 3; ++i) sum[i] += v[i];
        tnm1 *= g.t;
        const double mag = std::fabs(sum[0]) + std::fabs(sum[1]) + std::fabs(sum[2]);
        if (grad_tail_bound(g.t, n) < 1e-17 * (mag + 1e-300) && n > N + 3) return sum;
        if (tnm1 < 1e-305) return sum;
    }
    throw std::runtime_error("grad_series_tail: series did not certify");
}

}  // namespace kernel_detail

// [(-Delta)^{-alpha/2}]_N (x, y): kernel minus its (N-1)-degree Taylor
// polynomial in x at 0. Series route for |x| < q |y|, compensated direct
// subtraction otherwise. Only alpha = 2 (d = 3) carries the truncation.
inline double truncated_riesz_eval(const TruncatedKernelSpec& spec, const Vec3& x,
                                   const Vec3& y, KernelRoute route = KernelRoute::Auto,
                                   double q_switch = 0.75) {
    spec.validate();
    if (spec.grad_index)
        throw std::invalid_argument("truncated_riesz_eval: use truncated_grad_eval");
    const int N = spec.trunc_order;
    if (N == 0) return riesz_eval(spec, x, y);
    if (spec.d != 3 || spec.alpha != 2.0)
        throw std::invalid_argument("truncated_riesz_eval: truncation needs d=3, alpha=2");
    if (norm3(x) == 0.0) {
        if (norm3(y) == 0.0) throw std::domain_error("truncated kernel: y = 0");
        return 0.0;  // kernel minus its own Taylor value at the expansion point
    }
    const auto g = kernel_detail::geometry(x, y);
    const double c = riesz_constant(3, 2.0);
    const bool series = route == KernelRoute::Series ||
                        (route == KernelRoute::Auto && g.t < q_switch);
    if (series) {
        if (g.t >= 1.0)
            throw std::invalid_argument(
                "truncated_riesz_eval: series route divergent for |x| >= |y|");
        return (c / g.ry) * kernel_detail::legendre_tail(g.t, g.u, N);
    }
    NeumaierSum s(1.0 / g.rho);
    LegendreSeq seq(g.u);
    double tn = 1.0;
    for (int n = 0; n < N; ++n) {
        s.add(-tn * seq.next());
        tn *= g.t;
    }
    return (c / g.ry) * s.value();
}

namespace kernel_detail {

// all three components of [grad (-Delta)^{-1}]_N (x, y), d = 3
inline Vec3 truncated_grad_vec(int N, const Vec3& x, const Vec3& y, KernelRoute route,
                               double q_switch) {
    const double rx = norm3(x);
    if (rx == 0.0 && N >= 1) return {0.0, 0.0, 0.0};
    const auto g = geometry(x, y);
    const double c = riesz_constant(3, 2.0);
    const double scale = c / (g.ry * g.ry);
    const bool series =
        route == KernelRoute::Series || (route == KernelRoute::Auto && g.t < q_switch);
    if (series && N >= 1) {
        if (g.t >= 1.0)
            throw std::invalid_argument(
                "truncated_grad_eval: series route divergent for |x| >= |y|");
        Vec3 tail = grad_series_tail(g, N);
        for (auto& v : tail) v *= scale;
        return tail;
    }
    // plain gradient: c (y-x)/|x-y|^3, scaled by 1/(c/ry^2)
    const double rho3 = g.rho * g.rho * g.rho;
    std::array<NeumaierSum, 3> s;
    for (int i = 0; i < 3; ++i)
        s[i] = NeumaierSum((g.yhat[i] - g.t * g.xhat[i]) / rho3);
    LegendreDerivSeq seq(g.u);
    seq.next();  // P_0 has no gradient contribution
    double tnm1 = 1.0;
    for (int n = 1; n <= N; ++n) {
        const auto [pn, dpn] = seq.next();
        const Vec3 v = grad_term(g, n, pn, dpn, tnm1);
        for (int i = 0; i < 3; ++i) s[i].add(-v[i]);
        tnm1 *= g.t;
    }
    return {scale * s[0].value(), scale * s[1].value(), scale * s[2].value()};
}

}  // namespace kernel_detail

// [grad_{x_i} (-Delta)^{-(d-1)/2}]_N (x, y) for d = 3 (Newtonian kernel)
inline double truncated_grad_eval(const TruncatedKernelSpec& spec, const Vec3& x,
                                  const Vec3& y, KernelRoute route = KernelRoute::Auto,
                                  double q_switch = 0.75) {
    spec.validate();
    if (!spec.grad_index)
        throw std::invalid_argument("truncated_grad_eval: grad_index required");
    if (spec.d != 3)
        throw std::invalid_argument("truncated_grad_eval: d = 3 only");
    if (norm3(y) == 0.0) throw std::domain_error("truncated kernel: y = 0");
    const Vec3 v =
        kernel_detail::truncated_grad_vec(spec.trunc_order, x, y, route, q_switch);
    return v[static_cast<std::size_t>(*spec.grad_index - 1)];
}

enum class EstimateId { S1, S2 };

struct SawyerReport {
    EstimateId estimate_id = EstimateId::S1;
    long samples = 0;
    int n_max = 0;
    double max_ratio = 0.0;  // S2: already divided by N
    std::vector<std::pair<int, double>> ratio_by_N;
    std::uint64_t seed = 0;
};

struct ScanOptions {
    double q_switch = 0.75;
    double radius_lo = 1e-3, radius_hi = 1.0;  // |y| range
    double ratio_lo = 1e-3, ratio_hi = 1e3;    // |x|/|y| range
    int shard_size = 8192;
    int jobs = 1;
    int redraw_cap = 100;
};

namespace kernel_detail {

// per-sample ratios for all N in 1..n_max, appended as max into `acc`
inline void scan_sample(EstimateId id, const Geometry& g, int n_max, double q_switch,
                        std::vector<double>& acc) {
    const double c32_over_c31 =
        0.25 / 3.14159265358979323846 / (0.5 / (3.14159265358979323846 * 3.14159265358979323846));
    if (id == EstimateId::S1) {
        if (g.t < q_switch) {
            // one streamed pass: terms buffered, suffix-summed backwards
            LegendreSeq seq(g.u);
            std::vector<double> terms;
            terms.reserve(n_max + 64);
            double tn = 1.0;
            for (int n = 0;; ++n) {
                terms.push_back(tn * seq.next());
                tn *= g.t;
                if (n >= n_max && (tn / (1.0 - g.t) < 1e-16 * g.t || tn < 1e-305)) break;
                if (n > 20000) break;
            }
            std::vector<double> tail(terms.size() + 1, 0.0);
            for (int n = static_cast<int>(terms.size()) - 1; n >= 0; --n)
                tail[n] = tail[n + 1] + terms[n];
            double tN = g.t;
            for (int N = 1; N <= n_max; ++N) {
                if (static_cast<std::size_t>(N) < tail.size()) {
                    const double ratio = std::fabs(tail[N]) * g.rho / tN;
                    acc[N] = std::fmax(acc[N], ratio);
                }
                tN *= g.t;
            }
        } else {
            NeumaierSum s(1.0 / g.rho);
            LegendreSeq seq(g.u);
            double tn = 1.0, tN = g.t;
            for (int N = 1; N <= n_max; ++N) {
                s.add(-tn * seq.next());
                tn *= g.t;
                const double ratio = std::fabs(s.value()) * g.rho / tN;
                acc[N] = std::fmax(acc[N], ratio);
                tN *= g.t;
            }
        }
        return;
    }
    // S2: N-normalized ratio against the (-Delta)^{-1/2} comparator
    const double rho2 = g.rho * g.rho;
    if (g.t < q_switch) {
        LegendreDerivSeq seq(g.u);
        seq.next();
        std::vector<Vec3> terms;
        terms.reserve(n_max + 64);
        double tnm1 = 1.0;
        for (int n = 1;; ++n) {
            const auto [pn, dpn] = seq.next();
            terms.push_back(grad_term(g, n, pn, dpn, tnm1));
            tnm1 *= g.t;
            if (n > n_max && (grad_tail_bound(g.t, n) < 1e-16 || tnm1 < 1e-305)) break;
            if (n > 20000) break;
        }
        std::vector<Vec3> tail(terms.size() + 1, Vec3{0.0, 0.0, 0.0});
        for (int n = static_cast<int>(terms.size()) - 1; n >= 0; --n)
            for (int i = 0; i < 3; ++i) tail[n][i] = tail[n + 1][i] + terms[n][i];
        double tN = g.t;
        for (int N = 1; N <= n_max; ++N) {
            // tail over n >= N+1 lives at index N (terms[0] is n = 1)
            if (static_cast<std::size_t>(N) < tail.size()) {
                const Vec3& v = tail[N];
                const double mag =
                    std::fmax(std::fabs(v[0]), std::fmax(std::fabs(v[1]), std::fabs(v[2])));
                const double ratio = c32_over_c31 * mag * rho2 / (N * tN);
                acc[N] = std::fmax(acc[N], ratio);
            }
            tN *= g.t;
        }
    } else {
        const double rho3 = g.rho * rho2;
        std::array<NeumaierSum, 3> s;
        for (int i = 0; i < 3; ++i)
            s[i] = NeumaierSum((g.yhat[i] - g.t * g.xhat[i]) / rho3);
        LegendreDerivSeq seq(g.u);
        seq.next();
        double tnm1 = 1.0, tN = g.t;
        for (int N = 1; N <= n_max; ++N) {
            const auto [pn, dpn] = seq.next();
            const Vec3 v = grad_term(g, N, pn, dpn, tnm1);
            for (int i = 0; i < 3; ++i) s[i].add(-v[i]);
            tnm1 *= g.t;
            const double mag = std::fmax(std::fabs(s[0].value()),
                                         std::fmax(std::fabs(s[1].value()),
                                                   std::fabs(s[2].value())));
            const double ratio = c32_over_c31 * mag * rho2 / (N * tN);
            acc[N] = std::fmax(acc[N], ratio);
            tN *= g.t;
        }
    }
}

inline std::vector<double> scan_shard(EstimateId id, int n_max, long count,
                                      std::uint64_t seed, std::uint64_t shard,
                                      const ScanOptions& opts) {
    Rng rng(seed, shard);
    std::vector<double> acc(n_max + 1, 0.0);
    for (long k = 0; k < count; ++k) {
        Geometry g;
        int tries = 0;
        for (;;) {
            const Vec3 wx = rng.unit_vector();
            const Vec3 wy = rng.unit_vector();
            const double ry = rng.log_uniform(opts.radius_lo, opts.radius_hi);
            const double t = rng.log_uniform(opts.ratio_lo, opts.ratio_hi);
            const Vec3 y{ry * wy[0], ry * wy[1], ry * wy[2]};
            const Vec3 x{t * ry * wx[0], t * ry * wx[1], t * ry * wx[2]};
            try {
                g = geometry(x, y);
                break;
            } catch (const std::domain_error&) {
                if (++tries > opts.redraw_cap)
                    throw std::runtime_error("sawyer_ratio_scan: redraw cap exceeded");
            }
        }
        scan_sample(id, g, n_max, opts.q_switch, acc);
    }
    return acc;
}

}  // namespace kernel_detail

inline SawyerReport sawyer_ratio_scan(EstimateId id, int n_max, long samples,
                                      std::uint64_t seed, const ScanOptions& opts = {}) {
    if (n_max < 1) throw std::invalid_argument("sawyer_ratio_scan: n_max >= 1");
    if (samples < 1) throw std::invalid_argument("sawyer_ratio_scan: samples >= 1");
    const long shards = (samples + opts.shard_size - 1) / opts.shard_size;
    std::vector<std::vector<double>> parts(shards);
    if (opts.jobs > 1) {
        std::vector<std::future<std::vector<double>>> fut;
        fut.reserve(shards);
        for (long s = 0; s < shards; ++s) {
            const long count =
                std::min<long>(opts.shard_size, samples - s * opts.shard_size);
            fut.push_back(std::async(std::launch::async, [=, &opts] {
                return kernel_detail::scan_shard(id, n_max, count, seed,
                                                 static_cast<std::uint64_t>(s), opts);
            }));
        }
        for (long s = 0; s < shards; ++s) parts[s] = fut[s].get();
    } else {
        for (long s = 0; s < shards; ++s) {
            const long count =
                std::min<long>(opts.shard_size, samples - s * opts.shard_size);
            parts[s] = kernel_detail::scan_shard(id, n_max, count, seed,
                                                 static_cast<std::uint64_t>(s), opts);
        }
    }
    SawyerReport rep;
    rep.estimate_id = id;
    rep.samples = samples;
    rep.n_max = n_max;
    rep.seed = seed;
    std::vector<double> acc(n_max + 1, 0.0);
    for (const auto& part : parts)  // deterministic merge in shard order
        for (int n = 1; n <= n_max; ++n) acc[n] = std::fmax(acc[n], part[n]);
    for (int n = 1; n <= n_max; ++n) {
        rep.ratio_by_N.emplace_back(n, acc[n]);
        rep.max_ratio = std::fmax(rep.max_ratio, acc[n]);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// complex tail bounds for d/dz |1-z|^{-1} and d/dzbar |1-z|^{-1}

struct ComplexTailReport {
    int n_max = 0;
    int grid_resolution = 0;
    double margin = 0.0;
    double max_normalized_tail = 0.0;     // d/dz variant
    double max_normalized_tail_zbar = 0.0;
};

enum class TailRoute { Auto, Series, ClosedForm };

namespace tail_detail {

inline constexpr int kMaxTailOrder = 4000;

// binomial coefficients of (1-z)^{-s}: g_0 = 1, g_n = g_{n-1} (n-1+s)/n.
// Only s = 1/2 and s = 3/2 occur; the tables are built once per thread.
inline const std::vector<double>& coeff_table(double s) {
    static thread_local std::vector<double> g_half, g_three_half;
    std::vector<double>& g = (s == 0.5) ? g_half : g_three_half;
    if (g.empty()) {
        g.resize(kMaxTailOrder + 2);
        g[0] = 1.0;
        for (int n = 1; n < kMaxTailOrder + 2; ++n) g[n] = g[n - 1] * (n - 1 + s) / n;
    }
    return g;
}

// remainder sum_{n+m >= N} c_{n,m} z^n zbar^m of (1/2)(1-z)^{-sa}(1-zbar)^{-sb}
// by the truncated double series; certified through
// sum_{n+m=K} |c_{n,m}| = (K+1)/2 exactly.
inline std::complex<double> series_remainder(std::complex<double> z, int N, double sa,
                                             double sb) {
    const double rho = std::abs(z);
    if (rho >= 1.0) throw std::invalid_argument("series_remainder: |z| < 1 required");
    const auto& ga = coeff_table(sa);
    const auto& gb = coeff_table(sb);
    const std::complex<double> zb = std::conj(z);
    std::complex<double> sum = 0.0;
    for (int K = N; K <= kMaxTailOrder; ++K) {
        std::complex<double> hom = 0.0;
        std::complex<double> cur = std::pow(zb, K);  // z^n zbar^{K-n}, n = 0
        for (int n = 0; n <= K; ++n) {
            hom += ga[n] * gb[K - n] * cur;
            if (z == 0.0) break;
            cur *= z / zb;
        }
        sum += 0.5 * hom;
        // exact tail beyond K: sum_{j>K} (j+1)/2 rho^j
        const double tail = std::pow(rho, K + 1) * ((K + 2) - (K + 1) * rho) /
                            (2.0 * (1.0 - rho) * (1.0 - rho));
        if (tail < 1e-18 * (std::abs(sum) + 1e-30) && K > N + 2) return sum;
    }
    throw std::runtime_error("series_remainder: tail not certified at z = (" +
                             std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                             ")");
}

inline std::complex<double> closed_form_remainder(std::complex<double> z, int N, double sa,
                                                  double sb) {
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> f =
        0.5 * std::pow(one - z, -sa) * std::pow(one - std::conj(z), -sb);
    const auto& ga = coeff_table(sa);
    const auto& gb = coeff_table(sb);
    std::complex<double> poly = 0.0;
    const std::complex<double> zb = std::conj(z);
    for (int n = 0; n < N; ++n) {
        const std::complex<double> zn = std::pow(z, n);
        for (int m = 0; n + m < N; ++m) poly += 0.5 * ga[n] * gb[m] * zn * std::pow(zb, m);
    }
    return f - poly;
}

}  // namespace tail_detail

// Taylor remainder of d/dz |1-z|^{-1} (zbar variant swaps the exponents);
// terms of total degree <= N-1 are removed.
inline std::complex<double> complex_tail_remainder(std::complex<double> z, int N,
                                                   bool zbar_variant = false,
                                                   TailRoute route = TailRoute::Auto) {
    const double sa = zbar_variant ? 0.5 : 1.5;
    const double sb = zbar_variant ? 1.5 : 0.5;
    const bool series =
        route == TailRoute::Series || (route == TailRoute::Auto && std::abs(z) <= 0.5);
    return series ? tail_detail::series_remainder(z, N, sa, sb)
                  : tail_detail::closed_form_remainder(z, N, sa, sb);
}

inline ComplexTailReport complex_tail_check(int n_max, int grid_res, double margin,
                                            TailRoute route = TailRoute::Auto) {
    if (!(margin > 0.0) || !(margin < 1.0))
        throw std::invalid_argument("complex_tail_check: margin in (0,1)");
    if (n_max < 1 || grid_res < 2)
        throw std::invalid_argument("complex_tail_check: n_max >= 1, grid_res >= 2");
    ComplexTailReport rep;
    rep.n_max = n_max;
    rep.grid_resolution = grid_res;
    rep.margin = margin;
    const double rmax = 1.0 - margin;
    for (int i = 1; i <= grid_res; ++i) {
        const double rho = rmax * i / grid_res;
        for (int k = 0; k < grid_res; ++k) {
            const double th = 2.0 * 3.14159265358979323846 * k / grid_res;
            const std::complex<double> z(rho * std::cos(th), rho * std::sin(th));
            const double w = std::norm(std::complex<double>(1.0, 0.0) - z);  // |1-z|^2
            double rhoN = rho;
            for (int N = 1; N <= n_max; ++N) {
                const double a = std::abs(complex_tail_remainder(z, N, false, route));
                const double b = std::abs(complex_tail_remainder(z, N, true, route));
                rep.max_normalized_tail = std::fmax(rep.max_normalized_tail, a * w / (N * rhoN));
                rep.max_normalized_tail_zbar =
                    std::fmax(rep.max_normalized_tail_zbar, b * w / (N * rhoN));
                rhoN *= rho;
            }
        }
    }
    return rep;
}

}  // namespace greenlab
