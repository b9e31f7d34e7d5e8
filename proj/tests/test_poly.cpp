#include <doctest.h>

#include "elsurf/errors.hpp"
#include "elsurf/poly.hpp"

using namespace elsurf;

TEST_CASE("construction and evaluation") {
    Poly p = Poly::linear(Rational(-1), Rational(4));  // 4x - 1
    CHECK(p.degree() == 1);
    CHECK(p.eval(Rational(1, 4)) == Rational(0));
    CHECK(p.eval(Rational(1)) == Rational(3));
    CHECK(Poly(Rational(0)).is_zero());
    CHECK(Poly(3).constant_value() == Rational(3));
    CHECK_THROWS_AS(p.constant_value(), InputError);
}

TEST_CASE("arithmetic") {
    Poly x = Poly::variable();
    Poly q = (x * Rational(3) - Poly(1)) * (x * Rational(5) - Poly(1)) * Rational(1, 2);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(2) == Rational(15, 2));
    CHECK(q.coeff(1) == Rational(-4));
    CHECK(q.coeff(0) == Rational(1, 2));
    CHECK((q - q).is_zero());
}

TEST_CASE("rational roots") {
    Poly x = Poly::variable();
    Poly q = (x * Rational(3) - Poly(1)) * (x * Rational(5) - Poly(1));
    auto rs = q.roots();
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].exact);
    CHECK(rs[0].value == Rational(1, 5));
    CHECK(rs[1].value == Rational(1, 3));

    auto inside = q.roots_in(Rational(1, 4), Rational(1, 2));
    REQUIRE(inside.size() == 1);
    CHECK(inside[0].value == Rational(1, 3));
}

TEST_CASE("irrational roots come back as enclosures") {
    Poly x = Poly::variable();
    Poly q = x * x - Poly(2);
    auto rs = q.roots();
    REQUIRE(rs.size() == 2);
    CHECK_FALSE(rs[1].exact);
    CHECK(rs[1].lo < rs[1].hi);
    CHECK(rs[1].lo * rs[1].lo < Rational(2));
    CHECK(rs[1].hi * rs[1].hi > Rational(2));
    CHECK(rs[0].value < Rational(0));
}

TEST_CASE("negative discriminant has no roots") {
    Poly x = Poly::variable();
    CHECK((x * x + Poly(1)).roots().empty());
}

TEST_CASE("degree limits") {
    Poly x = Poly::variable();
    CHECK_THROWS_AS((x * x * x).roots(), InputError);
    CHECK_THROWS_AS(Poly().roots(), InputError);
    CHECK(Poly(5).roots().empty());
}

TEST_CASE("printing") {
    Poly x = Poly::variable();
    Poly q = (x * Rational(3) - Poly(1)) * (x * Rational(5) - Poly(1)) * Rational(1, 2);
    CHECK(q.str() == "15/2*a^2 - 4*a + 1/2");
    CHECK(q.factored_str() == "1/2*(3*a - 1)*(5*a - 1)");
    CHECK(Poly::linear(Rational(-1), Rational(4)).str() == "4*a - 1");
    CHECK(Poly().str() == "0");
    CHECK((x * x - Poly(2)).factored_str() == "a^2 - 2");  // no rational factorization
}
