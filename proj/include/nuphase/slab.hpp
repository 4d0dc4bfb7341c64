#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nuphase/cayley.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/percolation.hpp"
#include "nuphase/presets.hpp"
#include "nuphase/rng.hpp"

namespace nuphase {

/// Cayley ball of a right-angled regular p-gon reflection group with
/// upper-half-plane coordinates per vertex. Group identity is resolved
/// combinatorially by the ball construction; coordinates are derived data.
struct SlabEmbedding {
    unsigned p_sides = 0;
    CayleyBall ball;
    std::vector<double> x; // boundary coordinate
    std::vector<double> h; // height, > 0
    double edge_length = 0.0; // hyperbolic length of every edge
};

namespace detail {

using Mat3 = std::array<double, 9>;

inline Mat3 mat3_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

inline Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int l = 0; l < 3; ++l) acc += a[i * 3 + l] * b[l * 3 + j];
            r[i * 3 + j] = acc;
        }
    return r;
}

/// Reflection in the geodesic with unit spacelike normal n (Minkowski form
/// diag(1, 1, -1)): x -> x - 2 <x, n> n.
inline Mat3 reflection_matrix(const std::array<double, 3>& n) {
    Mat3 r = mat3_identity();
    const std::array<double, 3> form{1.0, 1.0, -1.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i * 3 + j] -= 2.0 * n[i] * form[j] * n[j];
    return r;
}

/// Hyperboloid point -> upper half-plane (x, h), sending (0,0,1) to (0,1).
inline std::pair<double, double> to_half_plane(double x1, double x2, double x3) {
    // Poincare disc first: z = (x1 + i x2) / (1 + x3), then the Cayley map
    // w = i (1 - z) / (1 + z) onto the upper half-plane, 0 -> i.
    const double zr = x1 / (1.0 + x3), zi = x2 / (1.0 + x3);
    const double dr = 1.0 + zr, di = zi;
    const double nr = 1.0 - zr, ni = -zi;
    const double den = dr * dr + di * di;
    // w = i * (nr + i ni) / (dr + i di)
    const double qr = (nr * dr + ni * di) / den;
    const double qi = (ni * dr - nr * di) / den;
    return {-qi, qr};
}

} // namespace detail

/// Hyperbolic distance between half-plane points.
inline double half_plane_distance(double x1, double h1, double x2, double h2) {
    const double dx = x1 - x2, dh = h1 - h2;
    return std::acosh(1.0 + (dx * dx + dh * dh) / (2.0 * h1 * h2));
}

/// Apothem of the regular right-angled p-gon: cosh a = cos(pi/4) / sin(pi/p).
inline double right_angled_apothem(unsigned p_sides) {
    if (p_sides < 5) throw error(errc::k_too_small, "right-angled polygons need p >= 5");
    return std::acosh(std::cos(M_PI / 4.0) / std::sin(M_PI / p_sides));
}

/// Build the radius-R ball of the p-gon reflection group and assign each
/// vertex its upper-half-plane coordinates via the hyperboloid model.
inline SlabEmbedding embed_polygon_group(unsigned p_sides, unsigned radius,
                                         std::size_t vertex_budget = 500000) {
    SlabEmbedding emb;
    emb.p_sides = p_sides;
    const double a = right_angled_apothem(p_sides);
    emb.edge_length = 2.0 * a;

    emb.ball = build_ball(polygon_system(p_sides), radius, BallMode::matrix, vertex_budget);
    orient_and_profile(emb.ball);

    std::vector<detail::Mat3> gens(p_sides);
    for (unsigned i = 0; i < p_sides; ++i) {
        const double theta = 2.0 * M_PI * i / p_sides;
        gens[i] = detail::reflection_matrix(
            {std::cosh(a) * std::cos(theta), std::cosh(a) * std::sin(theta), std::sinh(a)});
    }

    const std::size_t n = emb.ball.vertex_count();
    std::vector<detail::Mat3> iso(n);
    iso[0] = detail::mat3_identity();
    const auto parents = emb.ball.parents();
    emb.x.resize(n);
    emb.h.resize(n);
    auto assign = [&](std::size_t v) {
        // base point (0, 0, 1); column 2 of the isometry matrix
        const double x1 = iso[v][2], x2 = iso[v][5], x3 = iso[v][8];
        auto [bx, bh] = detail::to_half_plane(x1, x2, x3);
        emb.x[v] = bx;
        emb.h[v] = bh;
    };
    assign(0);
    for (std::size_t v = 1; v < n; ++v) { // BFS order: parents come first
        iso[v] = detail::mat3_mul(iso[parents[v].first], gens[parents[v].second]);
        assign(v);
    }
    return emb;
}

/// |x(u) - x(v)|: the max-norm distance of the boundary projections (the
/// boundary is one-dimensional here).
inline double d_boundary(const SlabEmbedding& emb, std::uint32_t u, std::uint32_t v) {
    return std::abs(emb.x[u] - emb.x[v]);
}

/// Subgraph of the slab {height <= H}: kept vertices and the edges with both
/// endpoints kept. Edge ids refer back to the embedding's ball.
struct SlabGraph {
    double H = 0.0;
    std::vector<std::uint8_t> vertex_in;
    std::vector<std::uint32_t> edge_ids;
};

inline SlabGraph slab_restrict(const SlabEmbedding& emb, double H) {
    if (H <= 0.0) throw error(errc::bad_format, "slab height must be positive");
    SlabGraph g;
    g.H = H;
    g.vertex_in.resize(emb.ball.vertex_count());
    for (std::size_t v = 0; v < emb.ball.vertex_count(); ++v)
        g.vertex_in[v] = emb.h[v] <= H ? 1 : 0;
    for (std::uint32_t e = 0; e < emb.ball.edges.size(); ++e) {
        const auto& ed = emb.ball.edges[e];
        if (g.vertex_in[ed.lo] && g.vertex_in[ed.hi]) g.edge_ids.push_back(e);
    }
    return g;
}

struct GPoint {
    double r = 0.0;
    double estimate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

struct GEstimate {
    double p = 0.0;
    double H = 0.0;
    std::uint64_t trials = 0;
    std::vector<double> r_grid;
    std::vector<GPoint> g_hat;   // per r, with Wilson intervals
    double psi_hat = 0.0;        // decay rate of the exponential fit
    double r_squared = 0.0;
    std::size_t fit_points = 0;
};

/// Monte Carlo estimate of P_p(o <-> S_r within the slab) on the r grid,
/// with a least-squares exponential fit of log g over the usable range
/// (g_hat >= 10/trials). Per trial the largest reached d_boundary is
/// computed once, so monotonicity in r is structural.
inline GEstimate estimate_g(const SlabEmbedding& emb, double H, double p,
                            const std::vector<double>& r_grid, std::uint64_t trials,
                            std::uint64_t seed, unsigned threads = 1) {
    if (p < 0.0 || p > 1.0) throw error(errc::bad_format, "p outside [0, 1]");
    if (trials < 1) throw error(errc::bad_format, "trials must be >= 1");
    const SlabGraph slab = slab_restrict(emb, H);
    const std::size_t n = emb.ball.vertex_count();

    std::vector<double> reach(trials, -1.0); // max d_boundary(o, .) in o's slab cluster
    const bool origin_in = slab.vertex_in.empty() ? false : slab.vertex_in[0] != 0;
    detail::run_trials(trials, threads, [&](std::uint64_t t) {
        if (!origin_in) return;
        const std::uint64_t ts = trial_seed(seed, t);
        detail::UnionFind uf(n);
        for (std::uint32_t e : slab.edge_ids)
            if (rng::uniform(ts, 0x626f6e64ULL, e) < p) {
                const auto& ed = emb.ball.edges[e];
                uf.unite(ed.lo, ed.hi);
            }
        const std::uint32_t root = uf.find(0);
        double best = 0.0;
        for (std::uint32_t v = 0; v < n; ++v)
            if (slab.vertex_in[v] && uf.find(v) == root)
                best = std::max(best, d_boundary(emb, 0, v));
        reach[t] = best;
    });

    GEstimate est;
    est.p = p;
    est.H = H;
    est.trials = trials;
    est.r_grid = r_grid;
    est.g_hat.resize(r_grid.size());
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
        auto& pt = est.g_hat[ri];
        pt.r = r_grid[ri];
        pt.trials = trials;
        for (std::uint64_t t = 0; t < trials; ++t)
            if (reach[t] >= r_grid[ri]) ++pt.successes;
        CurvePoint cp;
        cp.trials = trials;
        cp.successes = pt.successes;
        detail::wilson_interval(cp);
        pt.estimate = cp.estimate;
        pt.ci_lo = cp.ci_lo;
        pt.ci_hi = cp.ci_hi;
    }

    // least-squares fit of log g_hat against r on the usable range
    const double floor_g = 10.0 / static_cast<double>(trials);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri)
        if (est.g_hat[ri].estimate >= floor_g)
            pts.push_back({r_grid[ri], std::log(est.g_hat[ri].estimate)});
    est.fit_points = pts.size();
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [xx, yy] : pts) {
            sx += xx;
            sy += yy;
            sxx += xx * xx;
            sxy += xx * yy;
        }
        const double m = static_cast<double>(pts.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / m;
        est.psi_hat = -slope;
        double ss_res = 0, ss_tot = 0;
        const double ybar = sy / m;
        for (auto [xx, yy] : pts) {
            const double fit = intercept + slope * xx;
            ss_res += (yy - fit) * (yy - fit);
            ss_tot += (yy - ybar) * (yy - ybar);
        }
        est.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
    }
    return est;
}

} // namespace nuphase
