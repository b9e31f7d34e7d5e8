#include <doctest.h>

#include "elsurf/errors.hpp"
#include "elsurf/lattice.hpp"

using namespace elsurf;

namespace {

IntersectionForm a2_form() {
    return IntersectionForm({"x", "y"}, {{Rational(-2), Rational(1)},
                                         {Rational(1), Rational(-2)}});
}

}  // namespace

TEST_CASE("divisor class bookkeeping") {
    DivisorClass d;
    d.add("G", Rational(2)).add("E", Rational(1, 2));
    d.add("G", Rational(-2));
    CHECK(d.coefficient("G") == Rational(0));
    CHECK(d.coeff.count("G") == 0);  // zero coefficients are erased
    CHECK(d.coefficient("E") == Rational(1, 2));
    DivisorClass e = d * Rational(4);
    CHECK(e.coefficient("E") == Rational(2));
}

TEST_CASE("form validation") {
    CHECK_THROWS_AS(IntersectionForm({"x", "x"}, {{Rational(0), Rational(0)},
                                                  {Rational(0), Rational(0)}}),
                    InputError);
    CHECK_THROWS_AS(IntersectionForm({"x", "y"}, {{Rational(0), Rational(1)},
                                                  {Rational(2), Rational(0)}}),
                    InputError);
    CHECK_THROWS_AS(a2_form().pairing("x", "z"), InputError);
}

TEST_CASE("negative definiteness") {
    CHECK(a2_form().is_negative_definite());
    IntersectionForm degenerate({"x", "y"}, {{Rational(-2), Rational(2)},
                                             {Rational(2), Rational(-2)}});
    CHECK_FALSE(degenerate.is_negative_definite());
    IntersectionForm positive({"x"}, {{Rational(1)}});
    CHECK_FALSE(positive.is_negative_definite());
}

TEST_CASE("contraction solve") {
    auto c = a2_form().solve_contraction_coefficients({{"x", Rational(1)}, {"y", Rational(0)}});
    CHECK(c.at("x") == Rational(2, 3));
    CHECK(c.at("y") == Rational(1, 3));

    // Linearity in the right-hand side.
    auto c2 = a2_form().solve_contraction_coefficients({{"x", Rational(0)}, {"y", Rational(1)}});
    auto both =
        a2_form().solve_contraction_coefficients({{"x", Rational(3)}, {"y", Rational(-2)}});
    CHECK(both.at("x") == Rational(3) * c.at("x") + Rational(-2) * c2.at("x"));
    CHECK(both.at("y") == Rational(3) * c.at("y") + Rational(-2) * c2.at("y"));

    IntersectionForm singular({"x"}, {{Rational(0)}});
    CHECK_THROWS_AS(singular.solve_contraction_coefficients({{"x", Rational(1)}}),
                    InternalError);
}

TEST_CASE("bilinear pairing of formal classes") {
    DivisorClass u, v;
    u.add("x", Rational(1)).add("y", Rational(2));
    v.add("y", Rational(1, 2));
    CHECK(a2_form().pair(u, v) == Rational(1) * Rational(1, 2) +
                                      Rational(2) * Rational(-2) * Rational(1, 2));
}

TEST_CASE("gaussian solve") {
    std::vector<Rational> x;
    CHECK(gaussian_solve({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}},
                         {Rational(5), Rational(10)}, x));
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));
    CHECK_FALSE(gaussian_solve({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                               {Rational(1), Rational(2)}, x));
}
