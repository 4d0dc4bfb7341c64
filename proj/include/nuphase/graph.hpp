#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nuphase {

/// Minimal undirected simple graph with stable vertex and edge ids.
struct SimpleGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    void add_edge(std::uint32_t u, std::uint32_t v) { edges.push_back({u, v}); }

    std::vector<std::vector<std::uint32_t>> adjacency() const {
        std::vector<std::vector<std::uint32_t>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    static SimpleGraph complete(std::size_t n) {
        SimpleGraph g;
        g.n = n;
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    /// Outer 5-cycle, inner pentagram, five spokes.
    static SimpleGraph petersen() {
        SimpleGraph g;
        g.n = 10;
        for (std::uint32_t i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }
};

} // namespace nuphase
