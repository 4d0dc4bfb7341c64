#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nuphase/coxeter.hpp"
#include "nuphase/errors.hpp"

namespace nuphase {

/// Right-angled system from a simple graph: m = 2 on edges, infinity elsewhere.
inline CoxeterSystem right_angled_system(unsigned k,
                                         const std::vector<std::pair<unsigned, unsigned>>& edges) {
    CoxeterMatrix m(k);
    for (auto [s, t] : edges) m.set(s, t, 2);
    return CoxeterSystem::validate(m);
}

/// Adjacency graph of the faces of a regular dodecahedron (the icosahedron
/// graph): pole 0, upper ring 1..5, lower ring 6..10, pole 11.
inline std::vector<std::pair<unsigned, unsigned>> icosahedron_edges() {
    std::vector<std::pair<unsigned, unsigned>> e;
    for (unsigned i = 0; i < 5; ++i) {
        const unsigned u = 1 + i, un = 1 + (i + 1) % 5;
        const unsigned l = 6 + i, ln = 6 + (i + 1) % 5;
        e.push_back({0, u});
        e.push_back({u, un});
        e.push_back({11, l});
        e.push_back({l, ln});
        e.push_back({u, l});
        e.push_back({u, 6 + (i + 4) % 5});
    }
    return e;
}

/// Reflection group of the right-angled regular dodecahedron (12 generators).
inline CoxeterSystem dodecahedron_system() { return right_angled_system(12, icosahedron_edges()); }

/// Reflection group of the right-angled regular p-gon in the hyperbolic
/// plane: a p-cycle of commuting pairs.
inline CoxeterSystem polygon_system(unsigned p) {
    std::vector<std::pair<unsigned, unsigned>> e;
    for (unsigned i = 0; i < p; ++i) e.push_back({i, (i + 1) % p});
    return right_angled_system(p, e);
}

inline CoxeterSystem pentagon_system() { return polygon_system(5); }

/// Free product of k copies of Z2: all off-diagonal labels infinite.
inline CoxeterSystem free_product_system(unsigned k) {
    return CoxeterSystem::validate(CoxeterMatrix(k));
}

/// Rank-3 system with the three pairwise labels (a, b, c).
inline CoxeterSystem triangle_system(unsigned a, unsigned b, unsigned c) {
    CoxeterMatrix m(3);
    m.set(0, 1, a);
    m.set(0, 2, b);
    m.set(1, 2, c);
    return CoxeterSystem::validate(m);
}

/// Flag triangulation of the sphere on n+2 vertices: bipyramid over an
/// n-cycle (n >= 4). Apexes are the last two vertices and are not adjacent.
inline std::vector<std::pair<unsigned, unsigned>> bipyramid_edges(unsigned n) {
    if (n < 4) throw error(errc::bad_format, "bipyramid needs a cycle of length >= 4");
    std::vector<std::pair<unsigned, unsigned>> e;
    for (unsigned i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
        e.push_back({i, n});
        e.push_back({i, n + 1});
    }
    return e;
}

inline CoxeterSystem bipyramid_system(unsigned k) {
    if (k < 6) throw error(errc::k_too_small, "bipyramid system needs k >= 6");
    return right_angled_system(k, bipyramid_edges(k - 2));
}

/// Named presets exposed by the CLI.
inline CoxeterSystem preset_system(const std::string& name) {
    if (name == "dodecahedron") return dodecahedron_system();
    if (name == "pentagon") return pentagon_system();
    if (name.rfind("free-product-", 0) == 0) {
        const unsigned k = static_cast<unsigned>(std::stoul(name.substr(13)));
        return free_product_system(k);
    }
    if (name.rfind("bipyramid-", 0) == 0) {
        const unsigned k = static_cast<unsigned>(std::stoul(name.substr(10)));
        return bipyramid_system(k);
    }
    throw error(errc::bad_format, "unknown preset '" + name + "'");
}

} // namespace nuphase
