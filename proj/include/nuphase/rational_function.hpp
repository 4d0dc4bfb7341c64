#pragma once

#include <utility>

#include "nuphase/errors.hpp"
#include "nuphase/polynomial.hpp"

namespace nuphase {

/// Ratio of polynomials with exact rational coefficients, kept in reduced
/// form with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::constant(Rat(0))), den_(Polynomial::constant(Rat(1))) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error(errc::bad_format, "zero denominator");
        reduce();
    }

    static RationalFunction from_poly(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::constant(Rat(1)));
    }
    static RationalFunction constant(Rat v) { return from_poly(Polynomial::constant(std::move(v))); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    Rat operator()(const Rat& t) const {
        const Rat d = den_(t);
        if (d == 0) throw error(errc::bad_format, "evaluation at a pole");
        return num_(t) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce() {
        const Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
        if (den_.leading() != Rat(1)) {
            const Rat inv = Rat(1) / den_.leading();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace nuphase
