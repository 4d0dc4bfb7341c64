#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nuphase/errors.hpp"

namespace nuphase {

/// Coxeter matrix label for a non-commuting, non-braiding pair (order of st
/// is infinite). 0 never occurs as a genuine label, so it is safe as the
/// sentinel; JSON serialization spells it "inf".
inline constexpr unsigned m_infinity = 0;

inline bool m_is_finite(unsigned m) { return m != m_infinity; }

/// Symmetric k x k matrix with m(s,s) = 1 and m(s,t) in {2,3,...} or infinity.
class CoxeterMatrix {
public:
    explicit CoxeterMatrix(unsigned k) : k_(k), m_(std::size_t(k) * k, m_infinity) {
        for (unsigned s = 0; s < k; ++s) set_raw(s, s, 1);
    }

    unsigned rank() const { return k_; }
    unsigned operator()(unsigned s, unsigned t) const { return m_[std::size_t(s) * k_ + t]; }

    void set(unsigned s, unsigned t, unsigned m) {
        set_raw(s, t, m);
        set_raw(t, s, m);
    }

    // Escape hatch for building invalid matrices in tests.
    void set_raw(unsigned s, unsigned t, unsigned m) { m_[std::size_t(s) * k_ + t] = m; }

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    unsigned k_;
    std::vector<unsigned> m_;
};

/// A validated Coxeter matrix. Immutable once constructed.
class CoxeterSystem {
public:
    static CoxeterSystem validate(const CoxeterMatrix& m) {
        const unsigned k = m.rank();
        for (unsigned s = 0; s < k; ++s) {
            if (m(s, s) != 1)
                throw error(errc::diagonal_not_one,
                            "m(" + std::to_string(s) + "," + std::to_string(s) + ") != 1");
            for (unsigned t = s + 1; t < k; ++t) {
                if (m(s, t) != m(t, s))
                    throw error(errc::asymmetric_matrix,
                                "m(" + std::to_string(s) + "," + std::to_string(t) + ") != m(" +
                                    std::to_string(t) + "," + std::to_string(s) + ")");
                if (m_is_finite(m(s, t)) && m(s, t) < 2)
                    throw error(errc::off_diagonal_below_two,
                                "m(" + std::to_string(s) + "," + std::to_string(t) + ") = " +
                                    std::to_string(m(s, t)));
            }
        }
        return CoxeterSystem(m);
    }

    unsigned rank() const { return m_.rank(); }
    unsigned m(unsigned s, unsigned t) const { return m_(s, t); }
    const CoxeterMatrix& matrix() const { return m_; }

    bool is_right_angled() const {
        for (unsigned s = 0; s < rank(); ++s)
            for (unsigned t = s + 1; t < rank(); ++t)
                if (m_is_finite(m_(s, t)) && m_(s, t) != 2) return false;
        return true;
    }

private:
    explicit CoxeterSystem(CoxeterMatrix m) : m_(std::move(m)) {}
    CoxeterMatrix m_;
};

namespace detail {

// One connected component of the Coxeter diagram restricted to a subset.
// Diagram edges are pairs with label >= 3 (label 2 means the generators
// commute and are disconnected in the diagram).
struct DiagramComponent {
    std::vector<unsigned> verts;               // indices into the subset
    std::vector<std::array<unsigned, 3>> edges; // (u, v, label), u/v subset-local
};

inline std::vector<DiagramComponent> diagram_components(const CoxeterSystem& sys,
                                                        const std::vector<unsigned>& subset) {
    const std::size_t n = subset.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (comp[seed] >= 0) continue;
        const int id = ncomp++;
        std::vector<std::size_t> stack{seed};
        comp[seed] = id;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (comp[v] >= 0 || sys.m(subset[u], subset[v]) == 2) continue;
                comp[v] = id;
                stack.push_back(v);
            }
        }
    }
    std::vector<DiagramComponent> out(static_cast<std::size_t>(ncomp));
    for (std::size_t u = 0; u < n; ++u)
        out[static_cast<std::size_t>(comp[u])].verts.push_back(static_cast<unsigned>(u));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const unsigned label = sys.m(subset[u], subset[v]);
            if (label != 2)
                out[static_cast<std::size_t>(comp[u])].edges.push_back(
                    {static_cast<unsigned>(u), static_cast<unsigned>(v), label});
        }
    return out;
}

// Finite-type test for one connected diagram component, by matching against
// the catalogue A_n, B_n, D_n, E6-E8, F4, H3, H4, I2(m).
inline bool component_is_finite(const DiagramComponent& c) {
    const std::size_t n = c.verts.size();
    for (const auto& e : c.edges)
        if (!m_is_finite(e[2])) return false;
    if (n == 1) return true;                    // A1
    if (c.edges.size() != n - 1) return false;  // finite diagrams are trees
    if (n == 2) return true;                    // I2(m), m finite

    // component-local adjacency with labels
    const unsigned max_id = 1 + *std::max_element(c.verts.begin(), c.verts.end());
    std::vector<int> local(max_id, -1);
    for (std::size_t i = 0; i < c.verts.size(); ++i) local[c.verts[i]] = static_cast<int>(i);
    std::vector<std::vector<std::pair<unsigned, unsigned>>> nbr(n);
    for (const auto& e : c.edges) {
        const unsigned u = static_cast<unsigned>(local[e[0]]);
        const unsigned v = static_cast<unsigned>(local[e[1]]);
        nbr[u].push_back({v, e[2]});
        nbr[v].push_back({u, e[2]});
    }

    unsigned branch = 0, branch_at = 0, high_labels = 0;
    for (unsigned v = 0; v < n; ++v) {
        if (nbr[v].size() >= 4) return false;
        if (nbr[v].size() == 3) {
            ++branch;
            branch_at = v;
        }
    }
    for (const auto& e : c.edges)
        if (e[2] >= 4) ++high_labels;
    if (branch > 1) return false;

    if (branch == 1) {
        if (high_labels > 0) return false; // D/E diagrams are simply laced
        // arm lengths from the branch vertex
        std::array<unsigned, 3> arms{};
        for (std::size_t i = 0; i < 3; ++i) {
            unsigned prev = branch_at, cur = nbr[branch_at][i].first, len = 1;
            while (true) {
                unsigned next_count = 0, next = 0;
                for (auto [w, lab] : nbr[cur]) {
                    (void)lab;
                    if (w != prev) {
                        ++next_count;
                        next = w;
                    }
                }
                if (next_count == 0) break;
                if (next_count > 1) return false; // second branch, already excluded
                prev = cur;
                cur = next;
                ++len;
            }
            arms[i] = len;
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] != 1) return false;
        if (arms[1] == 1) return true;                       // D_n
        if (arms[1] == 2 && arms[2] <= 4) return true;       // E6, E7, E8
        return false;
    }

    // path: order vertices from one end
    unsigned end = 0;
    for (unsigned v = 0; v < n; ++v)
        if (nbr[v].size() == 1) end = v;
    std::vector<unsigned> labels; // edge labels along the path
    unsigned prev = n, cur = end;
    while (labels.size() < n - 1) {
        for (auto [w, lab] : nbr[cur]) {
            if (w != prev) {
                labels.push_back(lab);
                prev = cur;
                cur = w;
                break;
            }
        }
    }
    if (high_labels == 0) return true; // A_n
    if (high_labels > 1) return false;
    const std::size_t pos = static_cast<std::size_t>(
        std::find_if(labels.begin(), labels.end(), [](unsigned l) { return l >= 4; }) -
        labels.begin());
    const unsigned lab = labels[pos];
    const bool at_end = (pos == 0 || pos == labels.size() - 1);
    if (lab == 4) {
        if (at_end) return true;                      // B_n
        return n == 4 && pos == 1;                    // F4
    }
    if (lab == 5) return at_end && (n == 3 || n == 4); // H3, H4
    return false;                                      // label >= 6 on >= 3 vertices
}

} // namespace detail

/// Exact finiteness test for the standard parabolic subgroup generated by a
/// subset, via the finite-type diagram catalogue. No floating point.
inline bool is_spherical(const CoxeterSystem& sys, const std::vector<unsigned>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (!m_is_finite(sys.m(subset[i], subset[j]))) return false;
    for (const auto& comp : detail::diagram_components(sys, subset))
        if (!detail::component_is_finite(comp)) return false;
    return true;
}

/// Isomorphism type of a rank-3 spherical subset; determines its growth
/// polynomial. `m` is meaningful only for the dihedral-times-Z2 case.
struct FiniteTypeTag {
    enum Kind : std::uint8_t { i2m_x_z2, a3, b3, h3 } kind;
    unsigned m = 0;

    friend bool operator==(const FiniteTypeTag&, const FiniteTypeTag&) = default;
};

/// Classify a spherical triple by its sorted pair labels.
inline FiniteTypeTag classify_triangle(const CoxeterSystem& sys, unsigned s, unsigned t, unsigned u) {
    std::array<unsigned, 3> lab{sys.m(s, t), sys.m(s, u), sys.m(t, u)};
    std::sort(lab.begin(), lab.end());
    if (lab[0] == 2 && lab[1] == 2) return {FiniteTypeTag::i2m_x_z2, lab[2]};
    if (lab == std::array<unsigned, 3>{2, 3, 3}) return {FiniteTypeTag::a3, 0};
    if (lab == std::array<unsigned, 3>{2, 3, 4}) return {FiniteTypeTag::b3, 0};
    if (lab == std::array<unsigned, 3>{2, 3, 5}) return {FiniteTypeTag::h3, 0};
    throw error(errc::unsupported_rank, "triple is not spherical");
}

struct NerveEdge {
    unsigned s, t, m;
};

struct NerveTriangle {
    unsigned s, t, u;
    FiniteTypeTag tag;
};

/// Simplicial complex of the non-empty spherical subsets, recorded up to
/// dimension 2 (all an H3-type input can have).
struct Nerve {
    unsigned k = 0;
    std::vector<NerveEdge> edges;
    std::vector<NerveTriangle> triangles;
    int maxdim = -1;          // top dimension seen while enumerating up to rank 4
    bool h3_admissible = true; // no spherical 4-subset found

    std::size_t f0() const { return k; }
    std::size_t f1() const { return edges.size(); }
    std::size_t f2() const { return triangles.size(); }

    /// Max diagram-vertex degree of the 1-skeleton (the face-degree bound
    /// used in the right-angled compact estimates).
    unsigned max_vertex_degree() const {
        std::vector<unsigned> deg(k, 0);
        for (const auto& e : edges) {
            ++deg[e.s];
            ++deg[e.t];
        }
        return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    }
};

/// Enumerate spherical subsets rank-by-rank (monotone closure prunes the
/// candidates). With assert_h3 set, a spherical 4-subset is an error; the
/// flag h3_admissible records the same condition either way.
inline Nerve build_nerve(const CoxeterSystem& sys, bool assert_h3 = false) {
    Nerve nerve;
    const unsigned k = sys.rank();
    nerve.k = k;
    if (k > 0) nerve.maxdim = 0;

    for (unsigned s = 0; s < k; ++s)
        for (unsigned t = s + 1; t < k; ++t)
            if (m_is_finite(sys.m(s, t))) nerve.edges.push_back({s, t, sys.m(s, t)});
    if (!nerve.edges.empty()) nerve.maxdim = 1;

    // adjacency for triple pruning
    std::vector<std::vector<unsigned>> adj(k);
    for (const auto& e : nerve.edges) {
        adj[e.s].push_back(e.t);
        adj[e.t].push_back(e.s);
    }
    auto finite_pair = [&](unsigned a, unsigned b) { return m_is_finite(sys.m(a, b)); };

    for (unsigned s = 0; s < k; ++s)
        for (unsigned t : adj[s]) {
            if (t <= s) continue;
            for (unsigned u : adj[t]) {
                if (u <= t || !finite_pair(s, u)) continue;
                if (is_spherical(sys, {s, t, u}))
                    nerve.triangles.push_back({s, t, u, classify_triangle(sys, s, t, u)});
            }
        }
    if (!nerve.triangles.empty()) nerve.maxdim = 2;

    // spherical 4-subsets: every triple must itself be spherical
    auto tri_key = [&](unsigned a, unsigned b, unsigned c) {
        return (std::size_t(a) * k + b) * k + c;
    };
    std::vector<bool> is_tri(std::size_t(k) * k * k, false);
    for (const auto& t : nerve.triangles) is_tri[tri_key(t.s, t.t, t.u)] = true;
    for (const auto& t : nerve.triangles)
        for (unsigned v = t.u + 1; v < k; ++v) {
            if (!finite_pair(t.s, v) || !finite_pair(t.t, v) || !finite_pair(t.u, v)) continue;
            if (!is_tri[tri_key(t.s, t.t, v)] || !is_tri[tri_key(t.s, t.u, v)] ||
                !is_tri[tri_key(t.t, t.u, v)])
                continue;
            if (is_spherical(sys, {t.s, t.t, t.u, v})) {
                nerve.h3_admissible = false;
                nerve.maxdim = std::max(nerve.maxdim, 3);
                if (assert_h3)
                    throw error(errc::spherical_four_subset,
                                "{" + std::to_string(t.s) + "," + std::to_string(t.t) + "," +
                                    std::to_string(t.u) + "," + std::to_string(v) + "}");
            }
        }
    return nerve;
}

} // namespace nuphase
