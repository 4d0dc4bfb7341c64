#include <catch2/catch_amalgamated.hpp>

#include "nuphase/polynomial.hpp"
#include "nuphase/rational_function.hpp"

using namespace nuphase;

TEST_CASE("polynomial arithmetic is exact") {
    const Polynomial a{Rat(1), Rat(2)};       // 1 + 2z
    const Polynomial b{Rat(0), Rat(1), Rat(3)}; // z + 3z^2

    CHECK((a + b) == Polynomial{Rat(1), Rat(3), Rat(3)});
    CHECK((a * b) == Polynomial{Rat(0), Rat(1), Rat(5), Rat(6)});
    CHECK((a - a).is_zero());
    CHECK(a(Rat(1, 2)) == Rat(2));
    CHECK(Polynomial{}.degree() == -1);
}

TEST_CASE("trailing zero coefficients are trimmed") {
    const Polynomial p{Rat(1), Rat(1), Rat(0), Rat(0)};
    CHECK(p.degree() == 1);
    CHECK((p - p).degree() == -1);
}

TEST_CASE("divmod reconstructs the dividend") {
    const Polynomial num{Rat(3), Rat(-2), Rat(0), Rat(5), Rat(1)};
    const Polynomial den{Rat(1), Rat(1), Rat(2)};
    const auto [q, r] = Polynomial::divmod(num, den);
    CHECK(q * den + r == num);
    CHECK(r.degree() < den.degree());
}

TEST_CASE("gcd finds common factors and is monic") {
    const Polynomial f{Rat(-1), Rat(1)}; // z - 1
    const Polynomial g{Rat(1), Rat(1)};  // z + 1
    const Polynomial a = f * g * Rat(3);
    const Polynomial b = f * Polynomial{Rat(2), Rat(0), Rat(1)};
    const Polynomial d = Polynomial::gcd(a, b);
    CHECK(d == Polynomial{Rat(-1), Rat(1)});
}

TEST_CASE("series division expands geometric series") {
    // 1/(1 - z) = 1 + z + z^2 + ...
    const auto s = series_divide(Polynomial::constant(Rat(1)), Polynomial{Rat(1), Rat(-1)}, 6);
    for (const auto& c : s) CHECK(c == Rat(1));
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
    // (z^2 - 1) / (2z - 2) = (z + 1) / 2
    const RationalFunction f(Polynomial{Rat(-1), Rat(0), Rat(1)}, Polynomial{Rat(-2), Rat(2)});
    CHECK(f.num() == Polynomial{Rat(1, 2), Rat(1, 2)});
    CHECK(f.den() == Polynomial::constant(Rat(1)));

    const RationalFunction g(Polynomial{Rat(1)}, Polynomial{Rat(1), Rat(1)});
    CHECK((g + g) == RationalFunction(Polynomial{Rat(2)}, Polynomial{Rat(1), Rat(1)}));
    CHECK(g(Rat(1)) == Rat(1, 2));
}

TEST_CASE("palindrome detection") {
    CHECK(Polynomial{Rat(1), Rat(2), Rat(2), Rat(1)}.is_palindromic());
    CHECK_FALSE(Polynomial{Rat(1), Rat(2)}.is_palindromic());
}
