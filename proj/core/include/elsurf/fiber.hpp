#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "elsurf/lattice.hpp"
#include "elsurf/rational.hpp"

namespace elsurf {

enum class FiberKind { I, Istar, II, III, IV, IIstar, IIIstar, IVstar, N };

/// A Kodaira-type fiber label: the kind plus an index where the kind is a
/// family (I(n), I(n)*, N(k)). For II, III, IV and their stars the index is 0.
struct FiberType {
    FiberKind kind = FiberKind::I;
    int index = 0;

    /// Accepts "I5", "I2*", "II", "III*", "N1", ... (case-insensitive,
    /// "In"/"In*" with decimal n >= 0, "N0"/"N1"/"N2").
    static FiberType parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const FiberType& a, const FiberType& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

/// What a fiber component looks like as a curve, beyond its numerics. Smooth
/// rational is the generic case; the other values mark the non-log-smooth
/// configurations that force a log resolution, plus the two smooth-fiber
/// possibilities (smooth elliptic for I0, nodal cubic for the isotrivial
/// j = infinity degeneration).
enum class ComponentGeometry {
    SmoothRational,
    NodalRational,
    SmoothElliptic,
    NodalCubic,
    CuspidalCubic,
    TangentPair,
    ConcurrentTriple,
};

bool geometry_is_log_smooth(ComponentGeometry g);
std::string geometry_str(ComponentGeometry g);

/// One irreducible component of a fiber graph.
struct Component {
    std::string id;
    int multiplicity = 1;         // coefficient in the fiber class
    Rational self_intersection;   // C^2
    Rational k_degree;            // K . C
    bool meets_section = false;
    bool in_strict_transform = true;  // carries the marked weight a (vs. exceptional)
    ComponentGeometry geometry = ComponentGeometry::SmoothRational;
};

/// Unordered edge with multiplicity (local intersection count of the two
/// components; 2 for a tangency or the double edge of I(2)).
struct Edge {
    std::string a;
    std::string b;
    Rational mult = 1;
};

enum class FiberStage { Minimal, LogResolution, MmpInput };

/// Decorated dual graph of one fiber, with enough numerics attached to run
/// intersection theory on it without any ambient geometry.
struct FiberGraph {
    FiberType type;
    FiberStage stage = FiberStage::Minimal;
    std::vector<Component> components;
    std::vector<Edge> edges;
    /// Pairing of the section S with each component (0 when absent).
    std::map<std::string, Rational> section_pairing;

    const Component& component(const std::string& id) const;
    bool has_component(const std::string& id) const;
    std::vector<std::string> component_ids() const;
    /// Sum of edge multiplicities between the two components (0 when no edge).
    Rational edge_multiplicity(const std::string& a, const std::string& b) const;
    std::vector<std::string> neighbors(const std::string& id) const;

    /// The full fiber class sum(mult_i * C_i) as a formal divisor.
    DivisorClass fiber_class() const;
    /// Intersection form on the components (section excluded).
    IntersectionForm intersection_form() const;
    /// Intersection form on components plus the section under label "S",
    /// with S^2 = s_self.
    IntersectionForm intersection_form_with_section(const Rational& s_self) const;
};

/// The minimal model of the fiber itself: Kodaira's configuration, possibly
/// not log smooth (II, III, IV, N1 have non-snc points).
FiberGraph build_fiber_graph(const FiberType& type);

/// Log smooth model: blows up the bad points of the minimal configuration.
/// Identity on the types that are already log smooth.
FiberGraph log_resolution_graph(const FiberType& type);

/// The graph the MMP starts from: the log resolution, with the section
/// attached to the multiplicity-one component it meets.
FiberGraph mmp_input_graph(const FiberType& type);

}  // namespace elsurf
