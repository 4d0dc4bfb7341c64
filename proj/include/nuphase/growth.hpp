#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nuphase/coxeter.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/polynomial.hpp"
#include "nuphase/rational_function.hpp"

namespace nuphase {

/// [n](z) = z^{n-1} + ... + z + 1; [0] is the zero polynomial.
inline Polynomial bracket(unsigned n) {
    return Polynomial{std::vector<Rat>(n, Rat(1))};
}

/// [n1,...,nm](z) = prod_i [n_i](z). Palindromic of degree sum(n_i - 1).
inline Polynomial bracket_product(const std::vector<unsigned>& ns) {
    Polynomial p = Polynomial::constant(Rat(1));
    for (unsigned n : ns) p = p * bracket(n);
    return p;
}

/// Growth polynomial of a spherical subset of rank <= 3.
/// Rank 1: [2]; rank 2 with label m: [2, m]; rank 3 by type.
inline Polynomial finite_growth_poly_rank1() { return bracket(2); }

inline Polynomial finite_growth_poly_rank2(unsigned m) { return bracket_product({2, m}); }

inline Polynomial finite_growth_poly(const FiniteTypeTag& tag) {
    switch (tag.kind) {
        case FiniteTypeTag::i2m_x_z2: return bracket_product({2, 2, tag.m});
        case FiniteTypeTag::a3: return bracket_product({2, 3, 4});
        case FiniteTypeTag::b3: return bracket_product({2, 4, 6});
        case FiniteTypeTag::h3: return bracket_product({2, 6, 10});
    }
    throw error(errc::unsupported_rank, "unknown finite type tag");
}

namespace detail {

/// 1/W_T(t^{-1}) rewritten as t^{deg W_T} / W_T(t), valid because finite-type
/// growth polynomials are palindromic.
inline RationalFunction reciprocal_at_inverse(const Polynomial& w) {
    return RationalFunction(Polynomial::monomial(static_cast<std::size_t>(w.degree())), w);
}

} // namespace detail

/// 1/W(t) as an exact rational function via the alternating sum over the
/// spherical subsets recorded in the nerve. Requires nerve dimension <= 2.
inline RationalFunction steinberg_inverse_growth(const Nerve& nerve) {
    if (!nerve.h3_admissible)
        throw error(errc::unsupported_rank, "nerve contains a 3-simplex");
    RationalFunction acc = RationalFunction::constant(Rat(1));
    const RationalFunction vertex_term = detail::reciprocal_at_inverse(finite_growth_poly_rank1());
    for (unsigned v = 0; v < nerve.k; ++v) acc = acc - vertex_term;
    for (const auto& e : nerve.edges)
        acc = acc + detail::reciprocal_at_inverse(finite_growth_poly_rank2(e.m));
    for (const auto& f : nerve.triangles)
        acc = acc - detail::reciprocal_at_inverse(finite_growth_poly(f.tag));
    return acc;
}

/// Isolated least positive root of the numerator of 1/W in (0, 1].
struct GrowthResult {
    RationalFunction inverse_growth_series;
    Rat root_lo, root_hi;  // enclosing interval, exact rationals
    double least_positive_root = 0.0;
    double growth_rate = 0.0;
    std::vector<BigInt> taylor_coefficients; // #S(n) of the growth series W
};

namespace detail {

// Sign scan at granularity 1/1024 followed by exact bisection. Returns the
// enclosure, or nothing when no sign change is found in (0, 1].
inline std::optional<std::pair<Rat, Rat>> isolate_least_root_unit(const Polynomial& p,
                                                                  const Rat& width_target) {
    constexpr int grid = 1024;
    int prev_sign = sign_of(p(Rat(0)));
    if (prev_sign == 0) prev_sign = sign_of(p(Rat(1, 4 * grid))); // p(0)=0 not in (0,1]
    for (int i = 1; i <= grid; ++i) {
        const Rat t(i, grid);
        const int s = sign_of(p(t));
        if (s == 0) return std::make_pair(t, t);
        if (s != prev_sign && prev_sign != 0) {
            Rat lo(i - 1, grid), hi = t;
            while (hi - lo > width_target) {
                const Rat mid = (lo + hi) / 2;
                const int ms = sign_of(p(mid));
                if (ms == 0) return std::make_pair(mid, mid);
                if (ms == prev_sign)
                    lo = mid;
                else
                    hi = mid;
            }
            return std::make_pair(lo, hi);
        }
        if (s != 0) prev_sign = s;
    }
    return std::nullopt;
}

} // namespace detail

/// Extract the growth rate from 1/W: isolate the least positive numerator
/// root in (0,1] by exact sign bisection (width <= 1e-12) and expand the
/// first `nterms` Taylor coefficients of W by power-series division.
inline GrowthResult growth_rate(const RationalFunction& inv_w, std::size_t nterms = 64) {
    GrowthResult res;
    res.inverse_growth_series = inv_w;

    const Rat width_target(1, BigInt(1000000000000LL)); // 1e-12
    auto enclosure = detail::isolate_least_root_unit(inv_w.num(), width_target);
    if (!enclosure)
        throw error(errc::no_root_in_unit_interval,
                    "numerator of 1/W has no sign change in (0,1]");
    res.root_lo = enclosure->first;
    res.root_hi = enclosure->second;
    const Rat mid = (res.root_lo + res.root_hi) / 2;
    res.least_positive_root = to_double(mid);
    res.growth_rate = to_double(Rat(1) / mid);

    // W = den/num as a power series; 1/W(0) = 1 for genuine growth series.
    const std::vector<Rat> coeffs = series_divide(inv_w.den(), inv_w.num(), nterms);
    res.taylor_coefficients.reserve(nterms);
    for (const auto& c : coeffs) {
        if (denominator(c) != 1)
            throw error(errc::bad_format, "growth series coefficient is not an integer");
        res.taylor_coefficients.push_back(numerator(c));
    }
    return res;
}

/// Growth rate of a compact right-angled reflection group with k faces:
/// (k - 4 + sqrt((k-4)^2 - 4)) / 2.
inline double rac_growth_closed_form(unsigned k) {
    if (k < 6) throw error(errc::k_too_small, "closed form requires k >= 6");
    const double a = static_cast<double>(k) - 4.0;
    return (a + std::sqrt(a * a - 4.0)) / 2.0;
}

/// Certified lower bound for the growth rate of any H3 Coxeter polyhedron
/// group with k >= 6 faces (same expression as the right-angled value).
inline double growth_lower_bound(unsigned k) {
    if (k < 6) throw error(errc::k_too_small, "lower bound requires k >= 6");
    return rac_growth_closed_form(k);
}

/// 1/W^rb(t) for the reference right-angled compact series on k generators:
/// 1 - k t/(1+t) + 3(k-2) t^2/(1+t)^2 - 2(k-2) t^3/(1+t)^3.
inline RationalFunction inverse_growth_reference(unsigned k) {
    const RationalFunction u(Polynomial{Rat(0), Rat(1)}, Polynomial{Rat(1), Rat(1)}); // t/(1+t)
    const RationalFunction one = RationalFunction::constant(Rat(1));
    const Rat kk(k);
    return one - RationalFunction::constant(kk) * u +
           RationalFunction::constant(Rat(3) * (kk - 2)) * u * u -
           RationalFunction::constant(Rat(2) * (kk - 2)) * u * u * u;
}

struct ComparisonReport {
    struct Violation {
        Rat t, lhs, rhs;
    };
    std::size_t points_checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact check of 1/W(t) <= 1/W^rb(t) on a rational grid in (0, 1].
/// Valid for H3 nerves with k >= 6 outside the degenerate cases (at most one
/// edge, or a single triangle carrying every edge).
inline ComparisonReport verify_growth_comparison(const Nerve& nerve, unsigned grid_points = 64) {
    if (nerve.k < 6) throw error(errc::k_too_small, "comparison requires k >= 6");
    const bool one_triangle_all_edges = nerve.f2() == 1 && nerve.f1() == 3;
    if (nerve.f1() <= 1 || one_triangle_all_edges)
        throw error(errc::exceptional_nerve, "nerve is a degenerate case of the comparison");

    const RationalFunction lhs = steinberg_inverse_growth(nerve);
    const RationalFunction rhs = inverse_growth_reference(nerve.k);
    ComparisonReport rep;
    for (unsigned i = 1; i <= grid_points; ++i) {
        const Rat t(i, grid_points);
        const Rat l = lhs(t), r = rhs(t);
        ++rep.points_checked;
        if (l > r) rep.violations.push_back({t, l, r});
    }
    return rep;
}

/// [a-d, b+d](t) <= [a, b](t) for natural a <= b+1, d <= a, t >= 0.
inline bool bracket_shift_check(unsigned a, unsigned b, unsigned d, const Rat& t) {
    if (a > b + 1 || d > a || t < 0) throw error(errc::bad_format, "bracket_shift_check preconditions");
    const Polynomial lhs = bracket(a - d) * bracket(b + d);
    const Polynomial rhs = bracket(a) * bracket(b);
    return lhs(t) <= rhs(t);
}

} // namespace nuphase
