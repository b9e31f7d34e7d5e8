#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elsurf/rational.hpp"
#include "elsurf/surface.hpp"

namespace elsurf {

/// Weights of one fiber type at which its relative model changes shape:
/// {a0, 1} when the type has a transition, empty for I(n) and N0/N2.
/// Starred types get {0, 1}, the 0 separating Weierstrass (only at a = 0)
/// from intermediate.
std::set<Rational> fiber_walls(const FiberType& type);

/// The hyperplane where the section's log degree vanishes.
struct SectionWall {
    Rational total;   // sum of weights equals this value
    bool degenerate;  // g = 1: only reachable with every weight at 0
};

/// Present for g in {0, 1} when the hyperplane meets the weight domain:
/// g = 0 needs at least two weights for the sum to reach 2.
std::optional<SectionWall> section_wall(const SurfaceConfig& cfg);

enum class WallKind {
    FiberTransition,
    SectionContraction,
    PseudoellipticBigness,
    PseudoellipticTriviality,
};

std::string wall_kind_str(WallKind k);

/// One wall crossed by a weight path, located at path parameter `value`.
/// Irrational wall positions (possible for synthetic configs, never for
/// rational data in the catalog examples) are flagged exact = false and
/// carry the isolating interval [lo, hi].
struct Wall {
    WallKind kind = WallKind::FiberTransition;
    Rational value;
    bool exact = true;
    Rational lo, hi;
    int mark_index = -1;  // 0-based mark for fiber transitions, else -1
    std::string label;

    friend bool operator<(const Wall& a, const Wall& b) { return a.value < b.value; }
};

/// A maximal parameter interval on which the global model label is
/// constant. Endpoints follow the closed/open side each wall value belongs
/// to; a wall value matching neither neighbour becomes a degenerate
/// chamber with lo = hi.
struct Chamber {
    Rational lo, hi;
    bool lo_open = false, hi_open = false;
    std::string label;

    std::string interval_str() const;
};

struct ChamberReport {
    std::string description;
    std::vector<Wall> walls;
    std::vector<Chamber> chambers;
};

/// Wall-and-chamber decomposition of the weight path s in [0, 1]: fiber
/// transition and section walls are solved linearly; within each segment
/// in the pseudoelliptic regime (g = 0, deg_L = 1, section contracted) the
/// exact polynomials t and square from lc_square_and_t contribute walls at
/// t = 0 and at roots of square where t >= 0. Chambers are labelled by the
/// global model at interior sample points.
ChamberReport parametric_walls(const SurfaceConfig& cfg, const WeightPath& path);

}  // namespace elsurf
