#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "nuphase/errors.hpp"
#include "nuphase/growth.hpp"
#include "nuphase/interval.hpp"
#include "nuphase/rational.hpp"

namespace nuphase {

/// Orientation profile of a Cayley-graph vertex: r in-edges (from the level
/// below) and q[i] out-edges into vertices with r = i. q[0] is always 0 and
/// r + sum q = degree on interior vertices.
struct VertexProfile {
    unsigned r = 0;
    std::array<unsigned, 4> q{}; // q[1..3]; q[0] unused
    unsigned degree = 0;

    unsigned q_sum() const { return q[0] + q[1] + q[2] + q[3]; }
};

struct WeightVector {
    Rat c1, c2, c3;

    WeightVector(Rat a, Rat b, Rat c) : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {
        if (c1 <= 0 || c2 <= 0 || c3 <= 0)
            throw error(errc::bad_format, "weights must be positive");
    }
    Rat at(unsigned i) const {
        switch (i) {
            case 1: return c1;
            case 2: return c2;
            case 3: return c3;
        }
        throw error(errc::bad_format, "weight index out of range");
    }
};

/// Exact vertex sum f_v(c) = r(v) c_{r(v)} + sum_i q_i(v)/c_i of the
/// antisymmetric edge weighting F(e) = c_{r(e+)}.
inline Rat gabber_value(const VertexProfile& p, const WeightVector& c) {
    Rat acc = p.r == 0 ? Rat(0) : Rat(p.r) * c.at(p.r);
    for (unsigned i = 1; i <= 3; ++i)
        if (p.q[i] != 0) acc += Rat(p.q[i]) / c.at(i);
    return acc;
}

/// rho_tilde <= 2 sqrt(3(k-3)), valid for k >= 6 (uniform weights).
inline double rho_bound_basic(unsigned k) {
    if (k < 6) throw error(errc::k_too_small, "basic bound requires k >= 6");
    return 2.0 * std::sqrt(3.0 * (k - 3.0));
}

/// rho_tilde <= (k+17)/3 for any H3 Coxeter polyhedron.
inline double rho_bound_general(unsigned k) { return (static_cast<double>(k) + 17.0) / 3.0; }

/// rho_tilde <= k/2 + 31/10 in the compact right-angled case (k >= 12).
inline double rho_bound_rac(unsigned k) {
    if (k < 12) throw error(errc::k_too_small, "compact right-angled polyhedra have k >= 12");
    return static_cast<double>(k) / 2.0 + 3.1;
}

/// gamma* <= (rho + sqrt(rho^2 - 4(k-1)))/2, the universal-cover transfer.
inline double gamma_star_from_rho(double rho, unsigned k) {
    double radicand = rho * rho - 4.0 * (static_cast<double>(k) - 1.0);
    if (radicand < 0.0 && radicand > -1e-12 * (rho * rho + 1.0))
        radicand = 0.0; // rho at the 2 sqrt(k-1) boundary up to rounding
    if (radicand < 0.0)
        throw error(errc::radicand_negative, "rho below 2 sqrt(k-1)");
    return (rho + std::sqrt(radicand)) / 2.0;
}

namespace detail {

inline Interval interval_rho_bound(unsigned k, const std::string& family) {
    const Interval ik = Interval::of(k);
    if (family == "basic") {
        if (k < 6) throw error(errc::k_too_small, "basic bound requires k >= 6");
        return Interval::of(2) * interval_sqrt(Interval::of(3) * (ik - Interval::of(3)));
    }
    if (family == "general") return (ik + Interval::of(17)) / Interval::of(3);
    if (family == "rac") {
        if (k < 12) throw error(errc::k_too_small, "compact right-angled polyhedra have k >= 12");
        return ik / Interval::of(2) + Interval::of(31) / Interval::of(10);
    }
    throw error(errc::bad_format, "unknown family '" + family + "'");
}

inline Interval interval_gamma_star(const Interval& rho, unsigned k) {
    const Interval radicand = rho * rho - Interval::of(4) * Interval::of(static_cast<long long>(k) - 1);
    if (radicand.hi < 0.0) throw error(errc::radicand_negative, "rho below 2 sqrt(k-1)");
    return (rho + interval_sqrt(radicand)) / Interval::of(2);
}

inline Interval interval_growth_bound(unsigned k) {
    if (k < 6) throw error(errc::k_too_small, "growth bound requires k >= 6");
    const Interval a = Interval::of(static_cast<long long>(k) - 4);
    return (a + interval_sqrt(a * a - Interval::of(4))) / Interval::of(2);
}

} // namespace detail

/// Outcome of the b1 < b2 comparison for one family at one k. b1 bounds
/// gamma* (or rho_tilde) from above, b2 bounds the growth rate from below;
/// a strict win certifies [1/b2, 1/b1] inside (p_c, p_u).
struct PhaseCertificate {
    unsigned k = 0;
    std::string family;
    double b1 = 0.0;
    double b2 = 0.0;
    bool verdict = false;
    double interval_lo = 0.0; // 1/b2, rounded down
    double interval_hi = 0.0; // 1/b1, rounded up
};

/// Certify p_c < p_u for the given k and bound family. The comparison uses
/// outward-rounded interval arithmetic: the verdict is issued only if it is
/// provably strict with margin 1e-12.
inline PhaseCertificate certify_phase(unsigned k, const std::string& family) {
    PhaseCertificate cert;
    cert.k = k;
    cert.family = family;
    const Interval rho = detail::interval_rho_bound(k, family);
    const Interval b1 = detail::interval_gamma_star(rho, k);
    const Interval b2 = detail::interval_growth_bound(k);
    cert.b1 = b1.mid();
    cert.b2 = b2.mid();
    cert.verdict = b1.hi < b2.lo - 1e-12;
    if (cert.verdict) {
        cert.interval_lo = (Interval::of(1) / b2).lo;
        cert.interval_hi = (Interval::of(1) / b1).hi;
    }
    return cert;
}

/// Same comparison but with b1 = the raw rho_tilde bound (no gamma* step).
inline bool rho_direct_wins(unsigned k, const std::string& family) {
    const Interval b1 = detail::interval_rho_bound(k, family);
    const Interval b2 = detail::interval_growth_bound(k);
    return b1.hi < b2.lo - 1e-12;
}

inline bool gamma_star_wins(unsigned k, const std::string& family) {
    return certify_phase(k, family).verdict;
}

struct ThresholdRow {
    std::string family;
    std::string mode; // "rho" or "gamma_star"
    unsigned threshold = 0;
};

/// Least k for which each (family, mode) pair certifies the phase, scanned
/// from the family's validity floor.
inline std::vector<ThresholdRow> secrems_table(unsigned k_max = 100) {
    std::vector<ThresholdRow> rows;
    for (const std::string family : {"basic", "general", "rac"}) {
        const unsigned k_min = family == "rac" ? 12u : 6u;
        for (const std::string mode : {"rho", "gamma_star"}) {
            unsigned threshold = 0;
            for (unsigned k = k_min; k <= k_max; ++k) {
                const bool win =
                    mode == "rho" ? rho_direct_wins(k, family) : gamma_star_wins(k, family);
                if (win) {
                    threshold = k;
                    break;
                }
            }
            rows.push_back({family, mode, threshold});
        }
    }
    return rows;
}

/// Coordinate-descent minimization of max_p f_p(c) over positive weights,
/// with a golden-section line search per coordinate. Never worse than the
/// start point, so restarting at a hand-picked c preserves its bound.
struct OptimizeResult {
    WeightVector weights{Rat(1), Rat(1), Rat(1)};
    double bound = 0.0;
};

inline OptimizeResult optimize_weights(const std::vector<VertexProfile>& profiles,
                                       WeightVector start = WeightVector(Rat(1), Rat(1), Rat(1)),
                                       unsigned sweeps = 200) {
    if (profiles.empty()) throw error(errc::bad_format, "empty profile set");

    auto objective = [&](const std::array<double, 3>& c) {
        double worst = 0.0;
        for (const auto& p : profiles) {
            double f = p.r == 0 ? 0.0 : p.r * c[p.r - 1];
            for (unsigned i = 1; i <= 3; ++i) f += p.q[i] / c[i - 1];
            worst = std::max(worst, f);
        }
        return worst;
    };

    std::array<double, 3> c{to_double(start.c1), to_double(start.c2), to_double(start.c3)};
    std::array<double, 3> best_c = c;
    double best = objective(c);

    constexpr double phi = 0.6180339887498949;
    for (unsigned sweep = 0; sweep < sweeps; ++sweep) {
        for (int axis = 0; axis < 3; ++axis) {
            auto value_at = [&](double x) {
                auto cc = c;
                cc[axis] = x;
                return objective(cc);
            };
            // expand a bracket around the current coordinate
            double lo = c[axis] / 16.0, hi = c[axis] * 16.0;
            for (int i = 0; i < 100; ++i) { // golden-section shrink
                const double m1 = hi - phi * (hi - lo);
                const double m2 = lo + phi * (hi - lo);
                if (value_at(m1) <= value_at(m2))
                    hi = m2;
                else
                    lo = m1;
            }
            c[axis] = 0.5 * (lo + hi);
            const double v = objective(c);
            if (v < best) {
                best = v;
                best_c = c;
            }
        }
    }

    OptimizeResult res;
    res.weights = WeightVector(Rat(best_c[0]), Rat(best_c[1]), Rat(best_c[2]));
    res.bound = best;
    return res;
}

/// Extremal profile families matching the per-lemma constraint sets: the
/// adversary concentrates all unconstrained out-edges on a single class.
inline std::vector<VertexProfile> profiles_basic(unsigned k) {
    std::vector<VertexProfile> ps;
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned j = 1; j <= 3; ++j) {
            VertexProfile p;
            p.r = r;
            p.degree = k;
            p.q[j] = k - r;
            ps.push_back(p);
        }
    return ps;
}

/// q3 capped at 0/2/3 for r = 1/2/3 (and q1(o) = k at the origin).
inline std::vector<VertexProfile> profiles_general(unsigned k) {
    std::vector<VertexProfile> ps;
    {
        VertexProfile origin;
        origin.degree = k;
        origin.q[1] = k;
        ps.push_back(origin);
    }
    const std::array<unsigned, 4> q3cap{0, 0, 2, 3};
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned q3 = 0; q3 <= q3cap[r]; ++q3)
            for (unsigned j = 1; j <= 2; ++j) {
                VertexProfile p;
                p.r = r;
                p.degree = k;
                p.q[3] = q3;
                p.q[j] = k - r - q3;
                ps.push_back(p);
            }
    return ps;
}

/// Compact right-angled constraint corners: on top of the q3 caps, q2 + q3
/// is capped by delta / 2 delta - 4 / min(3 delta - 9, k - 3) for
/// r = 1/2/3, where delta <= (k-1)/2 is the largest face degree.
inline std::vector<VertexProfile> profiles_rac(unsigned k, unsigned delta) {
    std::vector<VertexProfile> ps;
    {
        VertexProfile origin;
        origin.degree = k;
        origin.q[1] = k;
        ps.push_back(origin);
    }
    const std::array<unsigned, 4> q3cap{0, 0, 2, 3};
    for (unsigned r = 1; r <= 3; ++r) {
        const unsigned cap23 = r == 1 ? delta
                             : r == 2 ? 2 * delta - 4
                                      : std::min(3 * delta - 9, k - 3);
        for (unsigned q3 : {0u, std::min(q3cap[r], cap23)})
            for (unsigned q2 : {0u, std::min(cap23 - q3, k - r - q3)}) {
                VertexProfile p;
                p.r = r;
                p.degree = k;
                p.q[3] = q3;
                p.q[2] = q2;
                p.q[1] = k - r - q3 - q2;
                ps.push_back(p);
            }
    }
    return ps;
}

} // namespace nuphase
