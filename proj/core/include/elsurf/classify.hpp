#pragma once

#include <set>
#include <string>
#include <vector>

#include "elsurf/fiber.hpp"
#include "elsurf/rational.hpp"

namespace elsurf {

/// Shape of the relative log canonical model of one fiber.
enum class ModelForm { Weierstrass, Intermediate, Twisted, N0 };

std::string model_form_str(ModelForm f);

/// One singular point of a relative model, recorded as the type of the
/// contracted configuration. A and D carry the usual index; Astar(k) is the
/// cyclic-quotient point from contracting a single curve of self-intersection
/// -(k+1) (so Astar(1) is the same point as A(1), and is canonicalized to
/// it); Chain is the fallback for a contracted chain matching none of the
/// standard shapes, with the reduced self-intersections recorded.
struct SingularityRecord {
    enum class Kind { A, D, E, Astar, Chain };
    Kind kind = Kind::A;
    int index = 0;
    std::vector<Rational> chain;  // only for Kind::Chain
    std::string carrier;          // a surviving component through the point

    std::string str() const;

    /// Ordering and equality ignore the carrier; used for multiset compares.
    friend bool operator==(const SingularityRecord& a, const SingularityRecord& b) {
        return a.kind == b.kind && a.index == b.index && a.chain == b.chain;
    }
    friend bool operator<(const SingularityRecord& a, const SingularityRecord& b);
};

std::string singularity_list_str(const std::vector<SingularityRecord>& sings);

/// Classifies the singular points produced by contracting `pool` (original
/// component ids) inside `original`. The pool is split into connected pieces
/// in the original dual graph; each piece is reduced by blowing down
/// (-1)-curves, then matched against the A / D / E / Astar shapes.
/// Pieces that reduce to nothing are smooth points and are dropped.
std::vector<SingularityRecord> classify_contracted_set(const FiberGraph& original,
                                                       const std::set<std::string>& pool);

/// The weight threshold a0 at which the relative model leaves Weierstrass
/// form: 5/6 for II, 3/4 for III, 2/3 for IV, 1/2 for N1, 0 for every
/// starred type. Throws InputError for I(n), N0 and N2, whose models stay
/// Weierstrass at every weight (N2 after its forced contraction to N0).
Rational threshold_a0(const FiberType& type);

/// Predicted model form at weight a from the thresholds alone:
/// Weierstrass for a <= a0, Intermediate for a0 < a < 1, Twisted at a = 1.
/// I(n) and N0 are Weierstrass throughout; N2 collapses to N0.
ModelForm relative_model_form(const FiberType& type, const Rational& a);

/// Coefficient alpha in the canonical bundle correction term Delta = alpha*E
/// of the relative model: 4, 2, 1 for II, III, IV away from Weierstrass
/// form, and 0 in every other case.
Rational delta_coefficient(const FiberType& type, ModelForm form);
Rational delta_coefficient(const FiberType& type, const Rational& a);

/// The singular points of the relative model in the given regime, computed
/// by running the fiberwise MMP at a representative weight. Throws
/// InputError for regimes the type never realizes.
std::vector<SingularityRecord> singularity_table(const FiberType& type, ModelForm regime);

}  // namespace elsurf
