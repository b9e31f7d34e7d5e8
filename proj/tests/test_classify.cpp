#include <doctest.h>

#include "elsurf/classify.hpp"
#include "elsurf/errors.hpp"

using namespace elsurf;

TEST_CASE("thresholds") {
    CHECK(threshold_a0(FiberType::parse("II")) == Rational(5, 6));
    CHECK(threshold_a0(FiberType::parse("III")) == Rational(3, 4));
    CHECK(threshold_a0(FiberType::parse("IV")) == Rational(2, 3));
    CHECK(threshold_a0(FiberType::parse("N1")) == Rational(1, 2));
    CHECK(threshold_a0(FiberType::parse("I0*")) == Rational(0));
    CHECK(threshold_a0(FiberType::parse("III*")) == Rational(0));
    CHECK_THROWS_AS(threshold_a0(FiberType::parse("I7")), InputError);
    CHECK_THROWS_AS(threshold_a0(FiberType::parse("N0")), InputError);
    CHECK_THROWS_AS(threshold_a0(FiberType::parse("N2")), InputError);
}

TEST_CASE("model form boundaries") {
    auto form = [](const char* t, const char* a) {
        return relative_model_form(FiberType::parse(t), Rational::parse(a));
    };
    CHECK(form("IV", "2/3") == ModelForm::Weierstrass);  // threshold included below
    CHECK(form("IV", "41/60") == ModelForm::Intermediate);
    CHECK(form("IV", "1") == ModelForm::Twisted);
    CHECK(form("I7", "1") == ModelForm::Weierstrass);
    CHECK(form("I0*", "0") == ModelForm::Weierstrass);
    CHECK(form("I0*", "1/60") == ModelForm::Intermediate);
    CHECK(form("N0", "1") == ModelForm::N0);
    CHECK(form("N2", "1/2") == ModelForm::N0);
    CHECK(form("N1", "1/2") == ModelForm::Weierstrass);
    CHECK(form("N1", "3/4") == ModelForm::Intermediate);
}

TEST_CASE("monotone in the weight") {
    auto rank = [](ModelForm f) {
        switch (f) {
            case ModelForm::Weierstrass:
            case ModelForm::N0: return 0;
            case ModelForm::Intermediate: return 1;
            case ModelForm::Twisted: return 2;
        }
        return -1;
    };
    for (const char* t : {"I3", "I2*", "II", "III", "IV", "II*", "N0", "N1", "N2"}) {
        int prev = 0;
        for (int k = 0; k <= 20; ++k) {
            int r = rank(relative_model_form(FiberType::parse(t), Rational(k, 20)));
            CHECK(r >= prev);
            prev = r;
        }
    }
}

TEST_CASE("delta coefficients") {
    auto delta = [](const char* t, ModelForm f) {
        return delta_coefficient(FiberType::parse(t), f);
    };
    CHECK(delta("II", ModelForm::Intermediate) == Rational(4));
    CHECK(delta("II", ModelForm::Twisted) == Rational(4));
    CHECK(delta("II", ModelForm::Weierstrass) == Rational(0));
    CHECK(delta("III", ModelForm::Twisted) == Rational(2));
    CHECK(delta("IV", ModelForm::Intermediate) == Rational(1));
    CHECK(delta("N1", ModelForm::Twisted) == Rational(0));
    CHECK(delta("II*", ModelForm::Twisted) == Rational(0));
    // weight-based overload
    CHECK(delta_coefficient(FiberType::parse("II"), Rational(9, 10)) == Rational(4));
    CHECK(delta_coefficient(FiberType::parse("II"), Rational(1, 2)) == Rational(0));
}

TEST_CASE("singularity records print and compare") {
    SingularityRecord a1{SingularityRecord::Kind::A, 1, {}, "E"};
    SingularityRecord a1_other{SingularityRecord::Kind::A, 1, {}, "F"};
    CHECK(a1 == a1_other);  // carrier ignored
    CHECK(a1.str() == "A1");
    SingularityRecord astar{SingularityRecord::Kind::Astar, 2, {}, ""};
    CHECK(astar.str() == "A2*");
    SingularityRecord d4{SingularityRecord::Kind::D, 4, {}, ""};
    CHECK(d4.str() == "D4");
}

TEST_CASE("singularity tables") {
    auto table = [](const char* t, ModelForm f) {
        return singularity_list_str(singularity_table(FiberType::parse(t), f));
    };
    CHECK(table("II*", ModelForm::Intermediate) == "A1 + A2 + A4");
    CHECK(table("III", ModelForm::Twisted) == "A1 + A3* + A3*");
    CHECK(table("I1*", ModelForm::Twisted) == "A1 + A1 + A3");
    CHECK(table("I0*", ModelForm::Intermediate) == "A1 + A1 + A1");
    CHECK(table("I4*", ModelForm::Intermediate) == "A1 + D6");
    CHECK(table("I5", ModelForm::Weierstrass) == "A4");
    CHECK(table("II", ModelForm::Weierstrass) == "none");
    CHECK_THROWS_AS(singularity_table(FiberType::parse("I5"), ModelForm::Twisted), InputError);
}
