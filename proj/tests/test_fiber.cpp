#include <doctest.h>

#include <set>
#include <vector>

#include "elsurf/errors.hpp"
#include "elsurf/fiber.hpp"

using namespace elsurf;

namespace {

std::vector<FiberType> all_types() {
    std::vector<FiberType> out;
    for (int n = 0; n <= 6; ++n) out.push_back({FiberKind::I, n});
    for (int n = 0; n <= 4; ++n) out.push_back({FiberKind::Istar, n});
    for (FiberKind k : {FiberKind::II, FiberKind::III, FiberKind::IV, FiberKind::IIstar,
                        FiberKind::IIIstar, FiberKind::IVstar})
        out.push_back({k, 0});
    for (int n = 0; n <= 2; ++n) out.push_back({FiberKind::N, n});
    return out;
}

}  // namespace

TEST_CASE("type parsing") {
    CHECK(FiberType::parse("I5") == FiberType{FiberKind::I, 5});
    CHECK(FiberType::parse("I2*") == FiberType{FiberKind::Istar, 2});
    CHECK(FiberType::parse("II*") == FiberType{FiberKind::IIstar, 0});
    CHECK(FiberType::parse("iv") == FiberType{FiberKind::IV, 0});
    CHECK(FiberType::parse("n1") == FiberType{FiberKind::N, 1});
    CHECK(FiberType::parse("I0*").str() == "I0*");
    CHECK_THROWS_AS(FiberType::parse("V"), InputError);
    CHECK_THROWS_AS(FiberType::parse("I-1"), InputError);
    CHECK_THROWS_AS(FiberType::parse("N3"), InputError);
    CHECK_THROWS_AS(FiberType::parse(""), InputError);
    for (const auto& t : all_types()) CHECK(FiberType::parse(t.str()) == t);
}

TEST_CASE("component counts") {
    CHECK(build_fiber_graph({FiberKind::I, 1}).components.size() == 1);
    CHECK(build_fiber_graph({FiberKind::I, 5}).components.size() == 5);
    CHECK(build_fiber_graph({FiberKind::Istar, 0}).components.size() == 5);
    CHECK(build_fiber_graph({FiberKind::Istar, 3}).components.size() == 8);
    CHECK(build_fiber_graph({FiberKind::IIstar, 0}).components.size() == 9);
    CHECK(build_fiber_graph({FiberKind::IIIstar, 0}).components.size() == 8);
    CHECK(build_fiber_graph({FiberKind::IVstar, 0}).components.size() == 7);
    CHECK(build_fiber_graph({FiberKind::II, 0}).components.size() == 1);
    CHECK(log_resolution_graph({FiberKind::II, 0}).components.size() == 4);
    CHECK(log_resolution_graph({FiberKind::III, 0}).components.size() == 4);
    CHECK(log_resolution_graph({FiberKind::IV, 0}).components.size() == 4);
}

TEST_CASE("II resolution multiplicities") {
    FiberGraph g = log_resolution_graph({FiberKind::II, 0});
    std::multiset<int> mults;
    for (const auto& c : g.components) mults.insert(c.multiplicity);
    CHECK(mults == std::multiset<int>{1, 2, 3, 6});
    CHECK(g.component("E").multiplicity == 6);
    CHECK_FALSE(g.component("E").in_strict_transform);
    CHECK(g.component("A").in_strict_transform);
}

TEST_CASE("fiber class pairs to zero on every MMP input") {
    for (const auto& t : all_types()) {
        FiberGraph g = mmp_input_graph(t);
        IntersectionForm form = g.intersection_form();
        DivisorClass fiber = g.fiber_class();
        for (const auto& c : g.components) {
            DivisorClass unit;
            unit.add(c.id, Rational(1));
            CHECK_MESSAGE(form.pair(fiber, unit).is_zero(),
                          t.str(), " fiber class pairs nonzero with ", c.id);
        }
    }
}

TEST_CASE("adjunction on smooth rational components") {
    for (const auto& t : all_types()) {
        FiberGraph g = mmp_input_graph(t);
        for (const auto& c : g.components) {
            if (c.geometry != ComponentGeometry::SmoothRational) continue;
            CHECK_MESSAGE(c.k_degree == Rational(-2) - c.self_intersection,
                          t.str(), " component ", c.id, " violates adjunction");
        }
    }
}

TEST_CASE("section sits on one multiplicity-one component") {
    for (const auto& t : all_types()) {
        FiberGraph g = mmp_input_graph(t);
        int on_section = 0;
        for (const auto& c : g.components) {
            if (!c.meets_section) continue;
            ++on_section;
            CHECK(c.multiplicity == 1);
            CHECK(g.section_pairing.at(c.id) == Rational(1));
        }
        CHECK_MESSAGE(on_section == 1, t.str(), " must carry the section exactly once");
    }
}

TEST_CASE("I2 has a double edge") {
    FiberGraph g = build_fiber_graph({FiberKind::I, 2});
    CHECK(g.edge_multiplicity("A", "D1") == Rational(2));
}
