#pragma once

// Brute-force reference implementations used by the tests. Everything here
// is intentionally independent of the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "nuphase/coxeter.hpp"
#include "nuphase/graph.hpp"
#include "nuphase/rational.hpp"

namespace oracles {

/// All spherical subsets of the given size, by direct enumeration over every
/// subset (uses only is_spherical, which the chosen subsets cross-check).
inline std::vector<std::vector<unsigned>> spherical_subsets(const nuphase::CoxeterSystem& sys,
                                                            unsigned size) {
    std::vector<std::vector<unsigned>> found;
    const unsigned k = sys.rank();
    std::vector<unsigned> subset;
    // odometer over increasing index tuples
    std::vector<unsigned> pos(size);
    for (unsigned i = 0; i < size; ++i) pos[i] = i;
    if (size > k) return found;
    for (;;) {
        subset.assign(pos.begin(), pos.end());
        if (nuphase::is_spherical(sys, subset)) found.push_back(subset);
        // advance
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && pos[static_cast<unsigned>(i)] == k - size + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++pos[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
    return found;
}

/// Triangles of a plain graph by triple enumeration (independent of the
/// nerve construction).
inline std::size_t triangle_count(unsigned n,
                                  const std::vector<std::pair<unsigned, unsigned>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    std::size_t count = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b)
            for (unsigned c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[a][c] && adj[b][c]) ++count;
    return count;
}

/// Connected components of the open subgraph, by BFS. Returns per-vertex
/// component id (SIZE_MAX for closed vertices in site mode).
inline std::vector<std::size_t> components(std::size_t n,
                                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                           const std::vector<std::uint8_t>& edge_open,
                                           const std::vector<std::uint8_t>* vertex_open) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!edge_open[e]) continue;
        const auto [u, v] = edges[e];
        if (vertex_open && (!(*vertex_open)[u] || !(*vertex_open)[v])) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t next = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        if (vertex_open && !(*vertex_open)[s]) continue;
        comp[s] = next;
        std::vector<std::uint32_t> queue{s};
        while (!queue.empty()) {
            const std::uint32_t u = queue.back();
            queue.pop_back();
            for (std::uint32_t v : adj[u])
                if (comp[v] == SIZE_MAX) {
                    comp[v] = next;
                    queue.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

/// Non-backtracking closed walks at o by plain DFS over edge sequences
/// (cyclic backtrack allowed: last edge may reverse the first).
inline nuphase::BigInt nb_closed_walks(const nuphase::SimpleGraph& g, std::uint32_t o,
                                       std::size_t n) {
    const auto adj = g.adjacency();
    nuphase::BigInt count = 0;
    // walk state: current vertex, previous vertex (for the backtrack test)
    struct Frame {
        std::uint32_t cur, prev;
        std::size_t len;
    };
    std::vector<Frame> stack{{o, UINT32_MAX, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.len == n) {
            if (f.cur == o) ++count;
            continue;
        }
        for (std::uint32_t v : adj[f.cur]) {
            if (f.len > 0 && v == f.prev) continue; // immediate reversal
            stack.push_back({v, f.cur, f.len + 1});
        }
    }
    return count;
}

/// Closed walks at o of length n by DFS (checks the adjacency-power route).
inline nuphase::BigInt closed_walks(const nuphase::SimpleGraph& g, std::uint32_t o, std::size_t n) {
    const auto adj = g.adjacency();
    struct Frame {
        std::uint32_t cur;
        std::size_t len;
    };
    nuphase::BigInt count = 0;
    std::vector<Frame> stack{{o, 0}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.len == n) {
            if (f.cur == o) ++count;
            continue;
        }
        for (std::uint32_t v : adj[f.cur]) stack.push_back({v, f.len + 1});
    }
    return count;
}

} // namespace oracles
