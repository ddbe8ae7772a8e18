#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupdet/cyclotomic.hpp"
#include "groupdet/errors.hpp"
#include "groupdet/multipoly.hpp"

using namespace groupdet;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
    for (unsigned n : {1u, 2u, 5u, 8u, 9u, 12u, 15u}) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        Cyclotomic p(1), sum(0);
        for (unsigned k = 0; k < n; ++k) {
            sum += p;
            p *= z;
        }
        CHECK(p.is_one());
        // 1 + z + ... + z^(n-1) vanishes unless n = 1.
        CHECK(sum == Cyclotomic(n == 1 ? 1 : 0));
    }
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(6, -1) == Cyclotomic::root_of_unity(6, 5));
}

TEST_CASE("rationals keep conductor one") {
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK((i * i).conductor() == 1);
    CHECK((i * i).is_rational());
    const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    CHECK((w + w * w).conductor() == 1);
    CHECK(w + w * w == Cyclotomic(-1));
}

TEST_CASE("mixed conductors lift to the lcm") {
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    const Cyclotomic prod = i * w;
    CHECK(prod.conductor() == 12);
    CHECK(prod == Cyclotomic::root_of_unity(12, 7));
    CHECK(i.lifted_to(12) == i);
}

TEST_CASE("field inverse") {
    const Cyclotomic a = Cyclotomic(2) + Cyclotomic::root_of_unity(5, 1) - Cyclotomic::root_of_unity(5, 3);
    CHECK((a * a.inverse()).is_one());
    CHECK(Cyclotomic(BigRational(3, 7)).inverse() == Cyclotomic(BigRational(7, 3)));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic rendering") {
    CHECK(Cyclotomic(BigRational(3, 2)).to_string() == "3/2");
    CHECK(Cyclotomic::root_of_unity(4, 1).to_string() == "z4");
    CHECK(Cyclotomic::root_of_unity(4, 3).to_string() == "-z4");
}

TEST_CASE("monomial order") {
    const Monomial x0 = Monomial::variable(0), x1 = Monomial::variable(1), X = Monomial::variable(kVarX);
    CHECK(graded_lex_less(x1, x0));
    CHECK(graded_lex_less(X, x1));
    CHECK(graded_lex_less(x0, x1 * x1));
    CHECK((x0 * x1 * x0).exponent(0) == 2);
    CHECK((x0 * x1).degree() == 2);
}

TEST_CASE("polynomial arithmetic") {
    const MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1);
    const MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.to_string() == "x_0^2 - x_1^2");
    CHECK(p.is_homogeneous(2));
    CHECK_FALSE((p + MultiPoly(1)).is_homogeneous(2));
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(MultiPoly().total_degree(), ZeroPolynomial);
    CHECK(p.degree_in(1) == 2);
}

TEST_CASE("coefficient extraction in X") {
    const MultiPoly X = MultiPoly::variable(kVarX), x = MultiPoly::variable(0);
    const MultiPoly p = X * X - MultiPoly(3) * x * X + x * x;
    CHECK(p.coefficient_of(kVarX, 2) == MultiPoly(1));
    CHECK(p.coefficient_of(kVarX, 1) == MultiPoly(-3) * x);
    CHECK(p.coefficient_of(kVarX, 0) == x * x);
}

TEST_CASE("evaluation and substitution") {
    const MultiPoly x = MultiPoly::variable(0), y = MultiPoly::variable(1);
    const MultiPoly p = x * x * y - MultiPoly(2) * y;
    CHECK(poly_eval(p, {{0, Cyclotomic(3)}, {1, Cyclotomic(5)}}) == Cyclotomic(35));
    CHECK(poly_substitute(p, {{0, Cyclotomic(2)}}) == MultiPoly(2) * y);
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(poly_eval(x * x + MultiPoly(1), {{0, i}}).is_zero());
}

TEST_CASE("cyclotomic coefficients render with signs") {
    const MultiPoly x = MultiPoly::variable(0);
    const MultiPoly p = MultiPoly(1) - x * Cyclotomic::root_of_unity(3, 1);
    CHECK(p.to_string() == "-z3*x_0 + 1");
}
