#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nuphase/rational.hpp"

namespace nuphase {

/// Dense univariate polynomial over exact big-integer rationals,
/// coefficients stored in ascending degree. The zero polynomial is the
/// empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Rat v) { return Polynomial{std::vector<Rat>{std::move(v)}}; }
    static Polynomial monomial(std::size_t deg, Rat v = Rat(1)) {
        std::vector<Rat> c(deg + 1, Rat(0));
        c[deg] = std::move(v);
        return Polynomial{std::move(c)};
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& t) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Rat> r = a.c_;
        for (auto& x : r) x = -x;
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const Polynomial& a, const Rat& s) {
        std::vector<Rat> r = a.c_;
        for (auto& x : r) x *= s;
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; requires a non-zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
        Polynomial q, r = num;
        std::vector<Rat> qc(num.c_.size(), Rat(0));
        const long dd = den.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            const long shift = r.degree() - dd;
            const Rat f = r.leading() / den.leading();
            qc[static_cast<std::size_t>(shift)] = f;
            r = r - Polynomial::monomial(static_cast<std::size_t>(shift), f) * den;
        }
        return {Polynomial{std::move(qc)}, std::move(r)};
    }

    /// Monic gcd over the rationals.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading() != Rat(1)) a = a * (Rat(1) / a.leading());
        return a;
    }

    /// coefficient(i) == coefficient(deg - i) for all i
    bool is_palindromic() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != c_[c_.size() - 1 - i]) return false;
        return true;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// First `nterms` coefficients of num/den as a power series; den must have a
/// non-zero constant term.
inline std::vector<Rat> series_divide(const Polynomial& num, const Polynomial& den,
                                      std::size_t nterms) {
    std::vector<Rat> out(nterms, Rat(0));
    const Rat d0 = den.coeff(0);
    for (std::size_t n = 0; n < nterms; ++n) {
        Rat acc = num.coeff(n);
        for (std::size_t j = 1; j <= n; ++j) acc -= den.coeff(j) * out[n - j];
        out[n] = acc / d0;
    }
    return out;
}

} // namespace nuphase
