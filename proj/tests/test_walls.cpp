#include <doctest.h>

#include "elsurf/walls.hpp"

using namespace elsurf;

namespace {

Mark mark(const char* t, const char* w) {
    return Mark{FiberType::parse(t), Rational::parse(w)};
}

}  // namespace

TEST_CASE("fiber walls") {
    CHECK(fiber_walls(FiberType::parse("II")) == std::set<Rational>{Rational(5, 6), Rational(1)});
    CHECK(fiber_walls(FiberType::parse("III")) == std::set<Rational>{Rational(3, 4), Rational(1)});
    CHECK(fiber_walls(FiberType::parse("I3")).empty());
    CHECK(fiber_walls(FiberType::parse("N0")).empty());
    CHECK(fiber_walls(FiberType::parse("I2*")) == std::set<Rational>{Rational(0), Rational(1)});
    CHECK(fiber_walls(FiberType::parse("IV*")) == std::set<Rational>{Rational(0), Rational(1)});
    CHECK(fiber_walls(FiberType::parse("N1")) == std::set<Rational>{Rational(1, 2), Rational(1)});
}

TEST_CASE("section wall") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 2;
    cfg.marks = {mark("I1", "1/2"), mark("I1", "1/2"), mark("I1", "1/2")};
    auto sw = section_wall(cfg);
    REQUIRE(sw.has_value());
    CHECK(sw->total == Rational(2));
    CHECK_FALSE(sw->degenerate);

    cfg.marks = {mark("I1", "1/2")};
    CHECK_FALSE(section_wall(cfg).has_value());  // one weight cannot sum to 2

    cfg.genus = 2;
    cfg.marks.clear();
    CHECK_FALSE(section_wall(cfg).has_value());

    cfg.genus = 1;
    sw = section_wall(cfg);
    REQUIRE(sw.has_value());
    CHECK(sw->total == Rational(0));
    CHECK(sw->degenerate);
}

TEST_CASE("sum-of-weights-one wall for deg_L 1") {
    // Three marked nodal fibers at equal weight: K + S + F is trivial on the
    // pseudoelliptic exactly at total weight 1, big above it.
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    cfg.marks = {mark("I1", "1/6"), mark("I1", "1/6"), mark("I1", "1/6")};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly::variable(), Poly::variable()};
    ChamberReport rep = parametric_walls(cfg, path);
    REQUIRE(rep.walls.size() == 2);
    CHECK(rep.walls[0].value == Rational(1, 3));  // sum = 1
    CHECK(rep.walls[0].kind == WallKind::PseudoellipticTriviality);
    CHECK(rep.walls[1].value == Rational(2, 3));  // sum = 2
    CHECK(rep.walls[1].kind == WallKind::SectionContraction);
    REQUIRE(rep.chambers.size() == 3);
    CHECK(rep.chambers[0].label == "point");
    CHECK(rep.chambers[0].interval_str() == "[0, 1/3]");
    CHECK(rep.chambers[1].label.rfind("pseudoelliptic", 0) == 0);
    CHECK(rep.chambers[1].interval_str() == "(1/3, 2/3]");
    CHECK(rep.chambers[2].interval_str() == "(2/3, 1]");
}

TEST_CASE("no pseudoelliptic walls for deg_L 3") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 3;
    cfg.marks = {mark("II", "1/2"), mark("I2", "1/2")};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly::variable()};
    ChamberReport rep = parametric_walls(cfg, path);
    for (const auto& w : rep.walls) {
        CHECK(w.kind != WallKind::PseudoellipticTriviality);
        CHECK(w.kind != WallKind::PseudoellipticBigness);
    }
}

TEST_CASE("fiber transition wall shows up where the label changes") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 3;  // big throughout: chamber labels change only with mark forms
    cfg.marks = {mark("II", "1/2"), mark("I5", "1/2")};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly::variable()};
    ChamberReport rep = parametric_walls(cfg, path);
    REQUIRE(rep.walls.size() == 2);
    CHECK(rep.walls[0].value == Rational(5, 6));
    CHECK(rep.walls[0].kind == WallKind::FiberTransition);
    CHECK(rep.walls[0].mark_index == 0);
    CHECK(rep.walls[1].value == Rational(1));
    REQUIRE(rep.chambers.size() == 3);
    CHECK(rep.chambers[0].label.find("Weierstrass") != std::string::npos);
    CHECK(rep.chambers[1].label.find("intermediate") != std::string::npos);
    CHECK(rep.chambers[2].label.find("twisted") != std::string::npos);
}

TEST_CASE("constant path gives a single chamber") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 3;
    cfg.marks = {mark("IV", "1/2")};
    ChamberReport rep = parametric_walls(cfg, WeightPath::constant(cfg));
    CHECK(rep.walls.empty());
    REQUIRE(rep.chambers.size() == 1);
    CHECK(rep.chambers[0].interval_str() == "[0, 1]");
}

TEST_CASE("chamber labels are constant on samples") {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    cfg.marks = {mark("I0*", "1/3"), mark("I0*", "1")};
    cfg.generic_marks = {Rational(1, 3)};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly(1)};
    path.generic_weights = {Poly::variable()};
    ChamberReport rep = parametric_walls(cfg, path);
    for (const auto& c : rep.chambers) {
        if (c.lo == c.hi) continue;
        for (int k = 1; k <= 3; ++k) {
            Rational s = c.lo + (c.hi - c.lo) * Rational(k, 4);
            SurfaceConfig at = path.at(cfg, s);
            CHECK(global_model(at).label(at) == c.label);
        }
    }
}
