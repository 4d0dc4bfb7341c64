#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "nuphase/errors.hpp"
#include "nuphase/graph.hpp"
#include "nuphase/polynomial.hpp"
#include "nuphase/rational.hpp"

namespace nuphase {

/// Exact closed-walk counts at a fixed origin. C_n counts all closed walks,
/// a_star_n the ones without backtracks (a pass through the same edge forth
/// and back on consecutive steps; first-vs-last is not a backtrack), and
/// a_simple_n the oriented vertex-simple cycles.
struct WalkCounts {
    std::vector<BigInt> C;
    std::vector<BigInt> a_star;
    std::vector<BigInt> a_simple; // may be shorter than C (DFS budget)
};

inline constexpr std::size_t walk_budget_n = 40;
inline constexpr std::size_t simple_cycle_budget_n = 14;

namespace detail {

inline std::vector<std::uint32_t> bfs_levels(const std::vector<std::vector<std::uint32_t>>& adj,
                                             std::uint32_t o) {
    std::vector<std::uint32_t> dist(adj.size(), UINT32_MAX);
    std::vector<std::uint32_t> queue{o};
    dist[o] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint32_t u = queue[qi];
        for (std::uint32_t v : adj[u])
            if (dist[v] == UINT32_MAX) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

// Oriented vertex-simple cycles through o, counted per length by pruned DFS.
// Both orientations of each undirected cycle are counted.
inline void count_simple_cycles(const std::vector<std::vector<std::uint32_t>>& adj,
                                std::uint32_t o, std::size_t nmax, std::vector<BigInt>& out) {
    const auto dist = bfs_levels(adj, o);
    std::vector<std::uint8_t> on_path(adj.size(), 0);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack; // (vertex, next adj index)
    on_path[o] = 1;
    stack.push_back({o, 0});
    std::size_t len = 0;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back().first;
        std::size_t& next = stack.back().second;
        if (next < adj[u].size()) {
            const std::uint32_t v = adj[u][next++];
            if (v == o) {
                if (len + 1 >= 3 && len + 1 <= nmax) ++out[len + 1];
                continue;
            }
            if (on_path[v] || len + 1 >= nmax) continue;
            if (dist[v] == UINT32_MAX || len + 1 + dist[v] > nmax) continue; // cannot close in time
            on_path[v] = 1;
            stack.push_back({v, 0});
            ++len;
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                on_path[u] = 0;
                --len;
            }
        }
    }
}

} // namespace detail

/// Count C_n and a_star_n for n <= N (exact big integers), and a_simple_n
/// for n <= min(N, 14). N is capped at 40.
inline WalkCounts count_walks(const SimpleGraph& g, std::uint32_t origin, std::size_t N) {
    if (N > walk_budget_n)
        throw error(errc::budget_exceeded, "walk horizon exceeds N = 40 budget");
    const auto adj = g.adjacency();
    if (origin >= g.n) throw error(errc::bad_format, "origin out of range");

    WalkCounts wc;
    wc.C.assign(N + 1, BigInt(0));
    wc.a_star.assign(N + 1, BigInt(0));
    wc.C[0] = 1;

    // closed walks by repeated adjacency application
    std::vector<BigInt> x(g.n, BigInt(0)), y(g.n);
    x[origin] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (auto& v : y) v = 0;
        for (std::size_t u = 0; u < g.n; ++u)
            if (x[u] != 0)
                for (std::uint32_t v : adj[u]) y[v] += x[u];
        x.swap(y);
        wc.C[n] = x[origin];
    }

    // non-backtracking closed walks via the directed-edge transfer operator
    const std::size_t m = g.edges.size();
    std::vector<std::uint32_t> tail(2 * m), head(2 * m);
    for (std::size_t e = 0; e < m; ++e) {
        tail[2 * e] = g.edges[e].first;
        head[2 * e] = g.edges[e].second;
        tail[2 * e + 1] = g.edges[e].second;
        head[2 * e + 1] = g.edges[e].first;
    }
    std::vector<std::vector<std::uint32_t>> out_edges(g.n);
    for (std::size_t d = 0; d < 2 * m; ++d) out_edges[tail[d]].push_back(static_cast<std::uint32_t>(d));

    wc.a_star[0] = 1;
    std::vector<BigInt> w(2 * m, BigInt(0)), w2(2 * m);
    for (std::uint32_t d : out_edges[origin]) w[d] = 1; // walks of length 1 by last edge
    for (std::size_t n = 1; n <= N; ++n) {
        if (n >= 3) { // sum over last edges ending at the origin (cyclic backtrack allowed)
            BigInt acc = 0;
            for (std::size_t d = 0; d < 2 * m; ++d)
                if (head[d] == origin && w[d] != 0) acc += w[d];
            wc.a_star[n] = acc;
        }
        if (n == N) break;
        for (auto& v : w2) v = 0;
        for (std::size_t d = 0; d < 2 * m; ++d) {
            if (w[d] == 0) continue;
            const std::uint32_t rev = static_cast<std::uint32_t>(d ^ 1);
            for (std::uint32_t e : out_edges[head[d]])
                if (e != rev) w2[e] += w[d];
        }
        w.swap(w2);
    }

    const std::size_t simple_n = std::min(N, simple_cycle_budget_n);
    wc.a_simple.assign(simple_n + 1, BigInt(0));
    detail::count_simple_cycles(adj, origin, simple_n, wc.a_simple);
    return wc;
}

/// c[n][d]: paths of length n in the k-regular tree between vertices at
/// distance d. Zero when n < d or n - d is odd.
struct TreePathTable {
    unsigned k = 0;
    std::vector<std::vector<BigInt>> c; // c[n][d], d <= n <= N

    const BigInt& at(std::size_t n, std::size_t d) const { return c[n][d]; }
};

/// DP over distance-to-target: one step toward (j -> j-1), k-1 steps away;
/// at the target all k steps lead to distance 1.
inline TreePathTable tree_path_table(unsigned k, std::size_t N) {
    if (k < 2) throw error(errc::bad_format, "tree degree must be >= 2");
    TreePathTable tab;
    tab.k = k;
    tab.c.assign(N + 1, {});
    std::vector<BigInt> cur(N + 2, BigInt(0)), next(N + 2, BigInt(0));
    cur[0] = 1; // T(0, j) = [j == 0]
    tab.c[0] = std::vector<BigInt>(cur.begin(), cur.begin() + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        // T(n, j) counts walks of length n from distance j to the target:
        // T(n, 0) = k T(n-1, 1); T(n, j) = T(n-1, j-1) + (k-1) T(n-1, j+1).
        next[0] = BigInt(k) * cur[1];
        for (std::size_t j = 1; j <= N; ++j)
            next[j] = cur[j - 1] + BigInt(k - 1) * cur[j + 1];
        cur.swap(next);
        tab.c[n] = std::vector<BigInt>(cur.begin(), cur.begin() + static_cast<long>(n) + 1);
    }
    return tab;
}

/// c[n][0] for n <= N with a rolling row; usable for large N.
inline std::vector<BigInt> tree_return_counts(unsigned k, std::size_t N) {
    if (k < 2) throw error(errc::bad_format, "tree degree must be >= 2");
    std::vector<BigInt> cur(N + 2, BigInt(0)), next(N + 2, BigInt(0)), returns(N + 1, BigInt(0));
    cur[0] = 1;
    returns[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        next[0] = BigInt(k) * cur[1];
        for (std::size_t j = 1; j <= N; ++j)
            next[j] = cur[j - 1] + BigInt(k - 1) * cur[j + 1];
        cur.swap(next);
        returns[n] = cur[0];
    }
    return returns;
}

/// Exponential growth rate of closed-walk counts on the k-regular tree.
/// Operationally lim c[2n][0]^(1/2n); equals 2 sqrt(k-1).
inline double rho_tilde_tree(unsigned k) {
    if (k < 2) throw error(errc::bad_format, "tree degree must be >= 2");
    return 2.0 * std::sqrt(static_cast<double>(k) - 1.0);
}

struct CoverIdentityReport {
    std::size_t checked = 0;
    std::vector<std::size_t> failures;
    bool ok() const { return failures.empty(); }
};

/// Verify C_n = sum_d a*_d c^{T_k}(n, d) for n <= N with both sides computed
/// by independent exact oracles. The graph must be k-regular at every vertex
/// within distance floor(N/2) of the origin.
inline CoverIdentityReport verify_universal_cover_identity(const SimpleGraph& g,
                                                           std::uint32_t origin, std::size_t N) {
    const auto adj = g.adjacency();
    const unsigned k = static_cast<unsigned>(adj[origin].size());
    const auto dist = detail::bfs_levels(adj, origin);
    for (std::size_t v = 0; v < g.n; ++v)
        if (dist[v] != UINT32_MAX && dist[v] <= N / 2 && adj[v].size() != k)
            throw error(errc::not_regular_within_horizon,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(adj[v].size()) + " within the walk horizon");

    const WalkCounts wc = count_walks(g, origin, N);
    const TreePathTable tab = tree_path_table(k, N);
    CoverIdentityReport rep;
    for (std::size_t n = 0; n <= N; ++n) {
        BigInt rhs = 0;
        for (std::size_t d = 0; d <= n; ++d)
            if (wc.a_star[d] != 0) rhs += wc.a_star[d] * tab.at(n, d);
        ++rep.checked;
        if (rhs != wc.C[n]) rep.failures.push_back(n);
    }
    return rep;
}

/// Green function G(d, kz) = A(z) f(z)^d of the simple random walk on the
/// k-regular tree, with f(z) = 2z / (1 + sqrt(1 - 4(k-1) z^2)).
inline double green_function_eval(unsigned k, unsigned d, double z) {
    const double boundary = 1.0 / (2.0 * std::sqrt(static_cast<double>(k) - 1.0));
    if (std::abs(z) > boundary * (1.0 + 1e-12))
        throw error(errc::outside_disc, "z outside the closed disc of convergence");
    double radicand = 1.0 - 4.0 * (k - 1.0) * z * z;
    if (std::abs(radicand) < 1e-14) radicand = 0.0; // boundary evaluation
    if (radicand < 0.0) radicand = 0.0;
    const double root = std::sqrt(radicand);
    const double a = 2.0 * (k - 1.0) / (k - 2.0 + k * root);
    const double f = 2.0 * z / (1.0 + root);
    return a * std::pow(f, static_cast<double>(d));
}

inline double tree_contact_value(unsigned k) { // f at the boundary of the disc
    return 1.0 / std::sqrt(static_cast<double>(k) - 1.0);
}

/// Exact power-series coefficients of G(d, kz) in z up to order N; these
/// must coincide with the tree path table (integers).
inline std::vector<Rat> green_series(unsigned k, unsigned d, std::size_t N) {
    // u = sqrt(1 - w), w = 4(k-1) z^2: binomial series with exactly one
    // monomial inside, so u has only even-degree terms.
    std::vector<Rat> u(N + 1, Rat(0));
    u[0] = 1;
    Rat binom(1); // C(1/2, m) accumulated
    const Rat w(-4 * (static_cast<long long>(k) - 1));
    Rat wpow(1);
    for (std::size_t m = 1; 2 * m <= N; ++m) {
        binom *= (Rat(1, 2) - Rat(static_cast<long long>(m) - 1)) / Rat(static_cast<long long>(m));
        wpow *= w;
        u[2 * m] = binom * wpow;
    }
    auto series_mul = [N](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(N + 1, Rat(0));
        for (std::size_t i = 0; i <= N; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j <= N; ++j)
                if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    auto series_inv = [N](const std::vector<Rat>& a) {
        std::vector<Rat> r(N + 1, Rat(0));
        r[0] = Rat(1) / a[0];
        for (std::size_t n = 1; n <= N; ++n) {
            Rat acc(0);
            for (std::size_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
            r[n] = -acc / a[0];
        }
        return r;
    };

    // f = 2z / (1 + u)
    std::vector<Rat> denom = u;
    denom[0] += 1;
    std::vector<Rat> f = series_inv(denom);
    f.insert(f.begin(), Rat(0));
    f.pop_back();
    for (auto& c : f) c *= 2;

    // A = 2(k-1) / (k - 2 + k u)
    std::vector<Rat> adenom = u;
    for (auto& c : adenom) c *= static_cast<long long>(k);
    adenom[0] += static_cast<long long>(k) - 2;
    std::vector<Rat> a = series_inv(adenom);
    for (auto& c : a) c *= 2 * (static_cast<long long>(k) - 1);

    std::vector<Rat> res = a;
    for (unsigned i = 0; i < d; ++i) res = series_mul(res, f);
    return res;
}

} // namespace nuphase
