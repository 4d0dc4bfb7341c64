#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "nuphase/cayley.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/rng.hpp"

namespace nuphase {

enum class PercMode : std::uint8_t { bond = 0, site = 1 };

inline const char* perc_mode_name(PercMode m) { return m == PercMode::bond ? "bond" : "site"; }

/// One seeded Bernoulli sample. Marks come from a counter-based generator
/// indexed by entity id, so the configuration is independent of evaluation
/// order and, for p <= p', the open set at p is a subset of the one at p'.
struct PercolationConfig {
    PercMode mode = PercMode::bond;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::uint8_t> open; // per edge (bond) or per vertex (site)
};

inline PercolationConfig sample(const CayleyBall& ball, PercMode mode, double p,
                                std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw error(errc::bad_format, "p outside [0, 1]");
    PercolationConfig cfg;
    cfg.mode = mode;
    cfg.p = p;
    cfg.seed = seed;
    const std::size_t n = mode == PercMode::bond ? ball.edges.size() : ball.vertex_count();
    cfg.open.resize(n);
    const std::uint64_t stream = mode == PercMode::bond ? 0x626f6e64ULL : 0x73697465ULL;
    for (std::size_t i = 0; i < n; ++i)
        cfg.open[i] = rng::uniform(seed, stream, i) < p ? 1 : 0;
    return cfg;
}

namespace detail {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> size;

    explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

} // namespace detail

struct ClusterStats {
    std::size_t cluster_count = 0;
    std::size_t max_cluster_size = 0;
    std::size_t origin_cluster_size = 0;
    bool crossing = false;           // origin connected to the rim sphere S(R)
    std::size_t boundary_clusters = 0; // distinct clusters meeting the rim
};

/// Exact cluster decomposition of the open subgraph via union-find.
inline ClusterStats analyze(const CayleyBall& ball, const PercolationConfig& cfg,
                            std::size_t boundary_min_size = 1) {
    const std::size_t n = ball.vertex_count();
    detail::UnionFind uf(n);
    const bool site = cfg.mode == PercMode::site;
    auto vertex_open = [&](std::uint32_t v) { return !site || cfg.open[v] != 0; };

    for (std::size_t e = 0; e < ball.edges.size(); ++e) {
        const auto& ed = ball.edges[e];
        const bool open = site ? (cfg.open[ed.lo] != 0 && cfg.open[ed.hi] != 0)
                               : cfg.open[e] != 0;
        if (open) uf.unite(ed.lo, ed.hi);
    }

    ClusterStats st;
    std::vector<std::uint8_t> seen_root(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!vertex_open(v)) continue;
        const std::uint32_t root = uf.find(v);
        if (!seen_root[root]) {
            seen_root[root] = 1;
            ++st.cluster_count;
        }
    }
    // cluster sizes count open vertices only (in bond mode, every vertex)
    std::vector<std::uint32_t> open_size(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        if (vertex_open(v)) ++open_size[uf.find(v)];
    for (std::uint32_t v = 0; v < n; ++v)
        st.max_cluster_size = std::max<std::size_t>(st.max_cluster_size, open_size[v]);

    const std::uint32_t origin_root = uf.find(0);
    st.origin_cluster_size = vertex_open(0) ? open_size[origin_root] : 0;

    std::vector<std::uint8_t> rim_root(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (ball.level[v] != ball.R || !vertex_open(v)) continue;
        const std::uint32_t root = uf.find(v);
        if (vertex_open(0) && root == origin_root) st.crossing = true;
        if (!rim_root[root] && open_size[root] >= boundary_min_size) {
            rim_root[root] = 1;
            ++st.boundary_clusters;
        }
    }
    return st;
}

/// [1/(k-1), 1/gr]: the analytic two-sided bracket for p_c.
inline std::pair<double, double> pc_bracket(unsigned k, double gr) {
    if (k < 2 || gr <= 1.0) throw error(errc::bad_format, "pc_bracket requires k >= 2, gr > 1");
    return {1.0 / (static_cast<double>(k) - 1.0), 1.0 / gr};
}

struct CurvePoint {
    double p = 0.0;
    double estimate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

namespace detail {

inline void wilson_interval(CurvePoint& pt) {
    const double z = 1.959963984540054; // 95%
    const double n = static_cast<double>(pt.trials);
    const double phat = static_cast<double>(pt.successes) / n;
    const double denom = 1.0 + z * z / n;
    const double centre = (phat + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    pt.estimate = phat;
    pt.ci_lo = std::max(0.0, centre - half);
    pt.ci_hi = std::min(1.0, centre + half);
}

/// Run `trials` independent work items over `threads` workers with a fixed
/// static partition; per-trial results land in preallocated slots, so the
/// aggregate is independent of scheduling.
template <class Fn>
void run_trials(std::uint64_t trials, unsigned threads, Fn&& per_trial) {
    if (threads <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) per_trial(t);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = w * chunk, hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &per_trial] {
            for (std::uint64_t t = lo; t < hi; ++t) per_trial(t);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Per-trial sub-seed: uniforms are shared across p values (monotone
/// coupling) but fresh across trials.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return rng::at(seed, 0x747269616cULL, trial);
}

/// Monte Carlo estimate of P_p(origin <-> rim sphere) over a p grid, with
/// Wilson 95% intervals. Deterministic for fixed (ball, grid, trials, seed),
/// independent of the thread count.
inline std::vector<CurvePoint> crossing_curve(const CayleyBall& ball, PercMode mode,
                                              const std::vector<double>& p_grid,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned threads = 1) {
    if (trials < 1) throw error(errc::bad_format, "trials must be >= 1");
    std::vector<std::vector<std::uint8_t>> hits(p_grid.size(),
                                                std::vector<std::uint8_t>(trials, 0));
    detail::run_trials(trials, threads, [&](std::uint64_t t) {
        const std::uint64_t ts = trial_seed(seed, t);
        for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
            const PercolationConfig cfg = sample(ball, mode, p_grid[pi], ts);
            hits[pi][t] = analyze(ball, cfg).crossing ? 1 : 0;
        }
    });
    std::vector<CurvePoint> curve(p_grid.size());
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        curve[pi].p = p_grid[pi];
        curve[pi].trials = trials;
        curve[pi].successes =
            std::accumulate(hits[pi].begin(), hits[pi].end(), std::uint64_t{0});
        detail::wilson_interval(curve[pi]);
    }
    return curve;
}

/// Histogram of the number of rim-touching clusters of size >= min_size.
/// A finite-ball heuristic only: it never feeds a certificate.
struct MultiplicityHistogram {
    double p = 0.0;
    std::size_t min_size = 1;
    std::uint64_t trials = 0;
    std::map<std::size_t, std::uint64_t> counts;
    double mean = 0.0;
};

inline MultiplicityHistogram multiplicity_probe(const CayleyBall& ball, PercMode mode, double p,
                                                std::uint64_t trials, std::uint64_t seed,
                                                std::size_t min_size, unsigned threads = 1) {
    if (min_size < 1) throw error(errc::bad_format, "min_size must be >= 1");
    std::vector<std::size_t> counts(trials, 0);
    detail::run_trials(trials, threads, [&](std::uint64_t t) {
        const PercolationConfig cfg = sample(ball, mode, p, trial_seed(seed, t));
        counts[t] = analyze(ball, cfg, min_size).boundary_clusters;
    });
    MultiplicityHistogram h;
    h.p = p;
    h.min_size = min_size;
    h.trials = trials;
    double acc = 0.0;
    for (std::size_t c : counts) {
        ++h.counts[c];
        acc += static_cast<double>(c);
    }
    h.mean = trials > 0 ? acc / static_cast<double>(trials) : 0.0;
    return h;
}

} // namespace nuphase
