#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nuphase/coxeter.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/graph.hpp"
#include "nuphase/rng.hpp"
#include "nuphase/spectral.hpp"

namespace nuphase {

enum class BallMode : std::uint8_t { automatic = 0, matrix = 1, word = 2 };

inline const char* ball_mode_name(BallMode m) {
    switch (m) {
        case BallMode::automatic: return "auto";
        case BallMode::matrix: return "matrix";
        case BallMode::word: return "word";
    }
    return "?";
}

/// Content hash of a Coxeter matrix (FNV-1a over rank and entries); used to
/// key ball caches.
inline std::uint64_t system_hash(const CoxeterSystem& sys) {
    std::uint64_t h = 1469598103934665603ULL;
    auto eat = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    eat(sys.rank());
    for (unsigned s = 0; s < sys.rank(); ++s)
        for (unsigned t = 0; t < sys.rank(); ++t) eat(sys.m(s, t));
    return h;
}

/// Finite radius-R ball of a Cayley graph. Vertices are indexed in BFS
/// discovery order (index 0 is the identity); every edge joins consecutive
/// levels and is stored oriented level-up.
struct CayleyBall {
    unsigned R = 0;
    unsigned k = 0;
    BallMode mode = BallMode::matrix;
    std::uint64_t sys_hash = 0;

    struct Edge {
        std::uint32_t lo, hi; // level(hi) = level(lo) + 1
        std::uint16_t gen;
    };

    std::vector<std::uint32_t> level;
    std::vector<std::uint64_t> sphere_sizes; // R + 1 entries
    std::vector<Edge> edges;

    // filled by orient_and_profile
    bool profiled = false;
    std::vector<VertexProfile> profiles;
    std::vector<std::uint8_t> profile_complete;

    std::size_t vertex_count() const { return level.size(); }

    SimpleGraph as_graph() const {
        SimpleGraph g;
        g.n = vertex_count();
        g.edges.reserve(edges.size());
        for (const auto& e : edges) g.edges.push_back({e.lo, e.hi});
        return g;
    }

    /// (parent, generator) pairs per vertex, from the BFS discovery edges.
    std::vector<std::pair<std::uint32_t, std::uint16_t>> parents() const {
        std::vector<std::pair<std::uint32_t, std::uint16_t>> par(
            vertex_count(), {UINT32_MAX, UINT16_MAX});
        for (const auto& e : edges)
            if (par[e.hi].first == UINT32_MAX) par[e.hi] = {e.lo, e.gen};
        return par;
    }
};

namespace detail {

struct VecHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (const T& x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h = rng::mix(h);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Exact integer reflection matrices of the geometric representation,
/// available when every finite label is 2 (B(s,t) = 0 for m = 2 and -1 for
/// m = infinity). Group elements compare equal iff their matrices do.
class MatrixKeyPolicy {
public:
    using Key = std::vector<std::int64_t>;

    explicit MatrixKeyPolicy(const CoxeterSystem& sys) : k_(sys.rank()), inf_targets_(k_) {
        for (unsigned s = 0; s < k_; ++s)
            for (unsigned t = 0; t < k_; ++t)
                if (t != s && !m_is_finite(sys.m(s, t))) inf_targets_[s].push_back(t);
    }

    Key identity() const {
        Key id(std::size_t(k_) * k_, 0);
        for (unsigned i = 0; i < k_; ++i) id[std::size_t(i) * k_ + i] = 1;
        return id;
    }

    // right-multiplication by the reflection matrix of generator s
    Key apply(const Key& a, unsigned s) const {
        Key b = a;
        for (unsigned i = 0; i < k_; ++i) {
            const std::int64_t x = b[std::size_t(i) * k_ + s];
            if (x == 0) continue;
            if (x > (std::int64_t(1) << 60) || x < -(std::int64_t(1) << 60))
                throw error(errc::budget_exceeded, "matrix entries exceed 64-bit budget");
            b[std::size_t(i) * k_ + s] = -x;
            for (unsigned t : inf_targets_[s]) b[std::size_t(i) * k_ + t] += 2 * x;
        }
        return b;
    }

    std::optional<unsigned> length_hint(const Key&) const { return std::nullopt; }

private:
    unsigned k_;
    std::vector<std::vector<unsigned>> inf_targets_;
};

/// ShortLex canonical words via exhaustive Tits rewriting: braid-class
/// search with ss-deletion, then the lexicographic minimum of the reduced
/// class. Exponential in the worst case; acceptable at desk radii with the
/// explicit class budget.
class WordKeyPolicy {
public:
    using Key = std::vector<std::uint8_t>;

    WordKeyPolicy(const CoxeterSystem& sys, std::size_t class_budget = 200000)
        : sys_(&sys), budget_(class_budget) {}

    Key identity() const { return {}; }

    Key apply(const Key& a, unsigned s) const {
        Key w = a;
        w.push_back(static_cast<std::uint8_t>(s));
        return canonical(std::move(w));
    }

    std::optional<unsigned> length_hint(const Key& key) const {
        return static_cast<unsigned>(key.size());
    }

    Key canonical(Key w) const {
        for (;;) {
            std::set<Key> seen;
            std::deque<Key> queue;
            seen.insert(w);
            queue.push_back(w);
            bool deleted = false;
            while (!queue.empty() && !deleted) {
                Key u = std::move(queue.front());
                queue.pop_front();
                for (std::size_t i = 0; i + 1 < u.size(); ++i) {
                    if (u[i] == u[i + 1]) {
                        u.erase(u.begin() + static_cast<long>(i),
                                u.begin() + static_cast<long>(i) + 2);
                        w = std::move(u);
                        deleted = true;
                        break;
                    }
                }
                if (deleted) break;
                for (std::size_t i = 0; i + 1 < u.size(); ++i) {
                    const unsigned s = u[i], t = u[i + 1];
                    const unsigned m = sys_->m(s, t);
                    if (!m_is_finite(m) || i + m > u.size()) continue;
                    bool alternating = true;
                    for (std::size_t j = 0; j < m; ++j)
                        if (u[i + j] != (j % 2 == 0 ? s : t)) {
                            alternating = false;
                            break;
                        }
                    if (!alternating) continue;
                    Key v = u;
                    for (std::size_t j = 0; j < m; ++j)
                        v[i + j] = static_cast<std::uint8_t>(j % 2 == 0 ? t : s);
                    if (seen.insert(v).second) {
                        if (seen.size() > budget_)
                            throw error(errc::budget_exceeded, "braid class budget exceeded");
                        queue.push_back(std::move(v));
                    }
                }
            }
            if (!deleted) return *seen.begin(); // set order = ShortLex within fixed length
        }
    }

private:
    const CoxeterSystem* sys_;
    std::size_t budget_;
};

template <class Policy>
CayleyBall build_ball_impl(const CoxeterSystem& sys, unsigned radius, const Policy& policy,
                           BallMode mode, std::size_t vertex_budget) {
    CayleyBall ball;
    ball.R = radius;
    ball.k = sys.rank();
    ball.mode = mode;
    ball.sys_hash = system_hash(sys);
    ball.sphere_sizes.assign(radius + 1, 0);

    std::unordered_map<typename Policy::Key, std::uint32_t, VecHash> index;
    std::vector<typename Policy::Key> keys;

    keys.push_back(policy.identity());
    index.emplace(keys[0], 0);
    ball.level.push_back(0);
    ball.sphere_sizes[0] = 1;

    std::size_t frontier_begin = 0, frontier_end = 1;
    for (unsigned l = 0; l < radius && frontier_begin < frontier_end; ++l) {
        for (std::size_t vi = frontier_begin; vi < frontier_end; ++vi) {
            for (unsigned s = 0; s < sys.rank(); ++s) {
                typename Policy::Key nk = policy.apply(keys[vi], s);
                if (auto hint = policy.length_hint(nk)) {
                    if (*hint == l)
                        throw error(errc::level_tie, "canonicalization produced a level tie");
                }
                auto it = index.find(nk);
                if (it == index.end()) {
                    if (keys.size() >= vertex_budget)
                        throw error(errc::radius_too_large, "vertex budget exceeded");
                    const auto id = static_cast<std::uint32_t>(keys.size());
                    index.emplace(nk, id);
                    keys.push_back(std::move(nk));
                    ball.level.push_back(l + 1);
                    ++ball.sphere_sizes[l + 1];
                    ball.edges.push_back({static_cast<std::uint32_t>(vi), id,
                                          static_cast<std::uint16_t>(s)});
                } else {
                    const std::uint32_t id = it->second;
                    if (ball.level[id] == l + 1)
                        ball.edges.push_back({static_cast<std::uint32_t>(vi), id,
                                              static_cast<std::uint16_t>(s)});
                    else if (ball.level[id] != l - 1 || l == 0)
                        throw error(errc::level_tie, "neighbour at unexpected level");
                }
            }
        }
        frontier_begin = frontier_end;
        frontier_end = keys.size();
    }
    return ball;
}

} // namespace detail

/// BFS ball of radius R around the identity. Matrix mode requires all finite
/// labels equal to 2; auto picks matrix mode whenever that holds.
inline CayleyBall build_ball(const CoxeterSystem& sys, unsigned radius,
                             BallMode mode = BallMode::automatic,
                             std::size_t vertex_budget = 500000) {
    if (mode == BallMode::automatic)
        mode = sys.is_right_angled() ? BallMode::matrix : BallMode::word;
    if (mode == BallMode::matrix) {
        if (!sys.is_right_angled())
            throw error(errc::mode_unsupported,
                        "integer-matrix keys require all finite labels equal to 2");
        return detail::build_ball_impl(sys, radius, detail::MatrixKeyPolicy(sys), mode,
                                       vertex_budget);
    }
    return detail::build_ball_impl(sys, radius, detail::WordKeyPolicy(sys), mode, vertex_budget);
}

/// Compute r(v) and the q_i(v) counters. Vertices with l = R have unknown
/// out-neighbourhoods and are flagged incomplete.
inline void orient_and_profile(CayleyBall& ball) {
    const std::size_t n = ball.vertex_count();
    ball.profiles.assign(n, VertexProfile{});
    ball.profile_complete.assign(n, 0);

    std::vector<std::uint32_t> r(n, 0);
    for (const auto& e : ball.edges) ++r[e.hi];
    for (std::size_t v = 0; v < n; ++v) {
        ball.profiles[v].r = r[v];
        ball.profiles[v].degree = r[v];
        if (v != 0 && r[v] == 0) throw error(errc::level_tie, "non-origin vertex with r = 0");
    }
    for (const auto& e : ball.edges) {
        auto& p = ball.profiles[e.lo];
        ++p.degree;
        const std::uint32_t rh = r[e.hi];
        if (rh <= 3) ++p.q[rh];
        // rh > 3 is recorded via degree only; verify_geometry_lemmas reports it
    }
    for (std::size_t v = 0; v < n; ++v)
        ball.profile_complete[v] = ball.level[v] + 1 <= ball.R ? 1 : 0;
    ball.profiled = true;
}

struct GeometryReport {
    std::size_t interior_checked = 0;
    unsigned max_r = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Scan interior vertices for r(v) <= 3 and the q3 caps (0/2/3 for
/// r = 1/2/3). If rac_delta is given (max nerve vertex degree of a compact
/// right-angled input), also check the q2+q3 caps from that case.
inline GeometryReport verify_geometry_lemmas(const CayleyBall& ball,
                                             std::optional<unsigned> rac_delta = std::nullopt) {
    if (!ball.profiled) throw error(errc::bad_format, "ball is not profiled");
    GeometryReport rep;
    const unsigned k = ball.k;
    for (std::size_t v = 0; v < ball.vertex_count(); ++v) {
        if (!ball.profile_complete[v]) continue;
        const auto& p = ball.profiles[v];
        ++rep.interior_checked;
        rep.max_r = std::max(rep.max_r, p.r);
        if (v == 0) continue;
        if (p.r > 3) {
            rep.violations.push_back("vertex " + std::to_string(v) + ": r = " + std::to_string(p.r));
            continue;
        }
        static constexpr unsigned q3cap[4] = {0, 0, 2, 3};
        if (p.q[3] > q3cap[p.r])
            rep.violations.push_back("vertex " + std::to_string(v) + ": r = " + std::to_string(p.r) +
                                     ", q3 = " + std::to_string(p.q[3]));
        if (rac_delta) {
            const unsigned delta = *rac_delta;
            const unsigned cap = p.r == 1 ? delta
                                : p.r == 2 ? 2 * delta - 4
                                           : std::min(3 * delta - 9, k - 3);
            if (p.q[2] + p.q[3] > cap)
                rep.violations.push_back("vertex " + std::to_string(v) +
                                         ": q2+q3 = " + std::to_string(p.q[2] + p.q[3]) +
                                         " exceeds cap " + std::to_string(cap));
        }
    }
    return rep;
}

} // namespace nuphase
