#include <doctest.h>

#include "elsurf/errors.hpp"
#include "elsurf/surface.hpp"

using namespace elsurf;

namespace {

Mark mark(const char* t, const char* w) {
    return Mark{FiberType::parse(t), Rational::parse(w)};
}

SurfaceConfig two_istar() {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    cfg.marks = {mark("I0*", "1/3"), mark("I0*", "1")};
    cfg.generic_marks = {Rational(1, 3)};
    return cfg;
}

WeightPath two_istar_path() {
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly(1)};
    path.generic_weights = {Poly::variable()};
    return path;
}

}  // namespace

TEST_CASE("config validation") {
    SurfaceConfig cfg;
    cfg.marks = {mark("II", "7/6")};
    CHECK_THROWS_AS(cfg.validate(), InputError);
    cfg.marks = {mark("N1", "1/2")};
    CHECK_THROWS_AS(cfg.validate(), InputError);  // N fiber on non-isotrivial config
    cfg.isotrivial_j_infinity = true;
    CHECK_NOTHROW(cfg.validate());
    cfg.marks.push_back(mark("II", "1/2"));
    CHECK_THROWS_AS(cfg.validate(), InputError);  // non-N fiber on isotrivial config
}

TEST_CASE("canonical class") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    CHECK(canonical_class(cfg).coefficient("G") == Rational(-1));

    cfg.deg_L = 2;
    CHECK(canonical_class(cfg).coeff.empty());  // K = 0

    cfg.marks = {mark("II", "9/10"), mark("III", "1"), mark("IV", "1/2"), mark("I3", "1")};
    DivisorClass k = canonical_class(cfg);
    CHECK(k.coefficient("E1") == Rational(4));  // II intermediate
    CHECK(k.coefficient("E2") == Rational(2));  // III twisted
    CHECK(k.coefficient("E3") == Rational(0));  // IV still Weierstrass
    CHECK(k.coefficient("E4") == Rational(0));  // I(n) never contributes
}

TEST_CASE("section pairing and contraction") {
    SurfaceConfig cfg;
    cfg.genus = 1;
    cfg.deg_L = 1;
    CHECK(section_pairing(cfg) == Rational(0));
    CHECK(section_contracted(cfg));
    cfg.marks = {mark("I1", "1/5")};
    CHECK(section_pairing(cfg) == Rational(1, 5));
    CHECK_FALSE(section_contracted(cfg));

    cfg = two_istar();
    CHECK(section_pairing(cfg) == Rational(-1, 3));
    CHECK(section_contracted(cfg));
}

TEST_CASE("weight paths") {
    SurfaceConfig cfg = two_istar();
    WeightPath path = two_istar_path();
    CHECK_NOTHROW(path.validate(cfg));
    CHECK(path.total() == Poly::linear(Rational(1), Rational(2)));
    SurfaceConfig at = path.at(cfg, Rational(3, 4));
    CHECK(at.marks[0].weight == Rational(3, 4));
    CHECK(at.marks[1].weight == Rational(1));
    CHECK(at.generic_marks[0] == Rational(3, 4));

    WeightPath bad = path;
    bad.mark_weights.pop_back();
    CHECK_THROWS_AS(bad.validate(cfg), InputError);
    bad = path;
    bad.generic_weights = {Poly::linear(Rational(0), Rational(2))};  // leaves [0,1]
    CHECK_THROWS_AS(bad.validate(cfg), InputError);
    bad = path;
    bad.mark_weights[0] = Poly::variable() * Poly::variable();  // nonlinear
    CHECK_THROWS_AS(bad.validate(cfg), InputError);
}

TEST_CASE("twisted section corrections") {
    CHECK(twisted_section_correction(FiberType::parse("I0*")) == Rational(1, 2));
    CHECK(twisted_section_correction(FiberType::parse("II")) == Rational(1, 6));
    CHECK_THROWS_AS(twisted_section_correction(FiberType::parse("I3")), InputError);
}

TEST_CASE("pullback class of the rational example") {
    LcSquareT lc = lc_square_and_t(two_istar(), two_istar_path(), Rational(2, 5));
    CHECK(lc.t == Poly::linear(Rational(-1), Rational(4)));
    CHECK(lc.square == Poly::linear(Rational(-1), Rational(3)) *
                           Poly::linear(Rational(-1), Rational(5)) * Rational(1, 2));
    CHECK(lc.section_self == Rational(-1, 2));
}

TEST_CASE("pseudoelliptic computation preconditions") {
    SurfaceConfig cfg = two_istar();
    cfg.genus = 1;
    CHECK_THROWS_AS(lc_square_and_t(cfg), InputError);
    cfg = two_istar();
    cfg.marks[0].weight = Rational(1);
    cfg.generic_marks[0] = Rational(1);  // sum 3 > 2: section survives
    CHECK_THROWS_AS(lc_square_and_t(cfg), InputError);
}

TEST_CASE("global model decision") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 3;
    GlobalModel m = global_model(cfg);
    CHECK(m.kind == GlobalKind::Pseudoelliptic);
    CHECK(m.iitaka_dimension == 2);

    cfg.deg_L = 2;
    CHECK(global_model(cfg).kind == GlobalKind::Point);
    cfg.marks = {mark("I1", "1/4")};
    CHECK(global_model(cfg).kind == GlobalKind::Pseudoelliptic);

    cfg = SurfaceConfig{};
    cfg.genus = 1;
    cfg.deg_L = 0;
    CHECK_THROWS_AS(global_model(cfg), InputError);  // deg_L = 0 needs product/isotrivial
    cfg.is_product = true;
    CHECK(global_model(cfg).kind == GlobalKind::ProductToEllipticCurve);

    SurfaceConfig ell = two_istar();
    ell.marks[0].weight = Rational(1);
    ell.generic_marks[0] = Rational(1);
    GlobalModel em = global_model(ell);
    CHECK(em.kind == GlobalKind::EllipticLcModel);
    CHECK_FALSE(em.section_contracted);
    CHECK(em.label(ell).find("twisted") != std::string::npos);

    // deg_L = 1 trichotomy along the example's chambers
    SurfaceConfig pt = two_istar();
    pt.marks[0].weight = pt.generic_marks[0] = Rational(1, 5);
    CHECK(global_model(pt).kind == GlobalKind::Point);  // the spurious square root
    SurfaceConfig curve = two_istar();
    curve.marks[0].weight = curve.generic_marks[0] = Rational(3, 10);
    CHECK(global_model(curve).kind == GlobalKind::Curve);
    SurfaceConfig pe = two_istar();
    pe.marks[0].weight = pe.generic_marks[0] = Rational(2, 5);
    CHECK(global_model(pe).kind == GlobalKind::Pseudoelliptic);
}
