#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elsurf/classify.hpp"
#include "elsurf/lattice.hpp"
#include "elsurf/poly.hpp"
#include "elsurf/rational.hpp"

namespace elsurf {

/// One marked singular fiber with its weight.
struct Mark {
    FiberType type;
    Rational weight;  // in [0, 1]
};

/// Global datum of a weighted elliptic surface pair: base genus, degree of
/// the fundamental line bundle, marked singular fibers, marked smooth
/// (generic) fibers. The surface itself is never constructed; everything is
/// derived from this combinatorial data.
struct SurfaceConfig {
    int genus = 0;
    int deg_L = 0;
    std::vector<Mark> marks;
    std::vector<Rational> generic_marks;
    bool isotrivial_j_infinity = false;
    bool is_product = false;

    /// Throws InputError on out-of-range weights or an isotrivial config
    /// marking non-N fibers.
    void validate() const;
    /// Sum of every weight, marks plus generic marks.
    Rational weight_sum() const;
};

/// Weights as linear polynomials in one path parameter; a constant config
/// is the special case of constant polynomials.
struct WeightPath {
    std::vector<Poly> mark_weights;
    std::vector<Poly> generic_weights;

    static WeightPath constant(const SurfaceConfig& cfg);
    /// Throws InputError unless every entry is affine-linear, the counts
    /// match cfg, and values stay inside [0, 1] over s in [0, 1].
    void validate(const SurfaceConfig& cfg) const;
    /// The config with every weight evaluated at s.
    SurfaceConfig at(const SurfaceConfig& cfg, const Rational& s) const;
    Poly total() const;
    std::string str(const std::string& var = "a") const;
};

/// Canonical class K = (2g - 2 + deg_L) G + sum_i alpha_i E_i over basis
/// labels "G" and "E<i>" (1-based mark index), with alpha_i the canonical
/// correction of mark i's relative model form at its weight.
DivisorClass canonical_class(const SurfaceConfig& cfg);

/// (K + S + F_A) . S = 2g - 2 + sum of all weights.
Rational section_pairing(const SurfaceConfig& cfg);

/// Whether the log MMP contracts the section: section_pairing <= 0.
bool section_contracted(const SurfaceConfig& cfg);

/// Data of the class pulled back from the pseudoelliptic: writing
/// mu*(K_X + F_A) = K_Y + t S + F~_A on the elliptic side, t is the
/// S-coefficient and square its self-intersection. Both are polynomials in
/// the path parameter (constants for a constant path).
struct LcSquareT {
    Poly t;
    Poly square;
    Rational section_self;  // S^2 on the relative lc model, twisted-corrected
};

/// Requires g = 0 and a section contracted at the sample point (the
/// pseudoelliptic regime); regimes of the marks are read off at `sample`
/// and assumed constant, which holds within one chamber segment.
LcSquareT lc_square_and_t(const SurfaceConfig& cfg, const WeightPath& path,
                          const Rational& sample);
LcSquareT lc_square_and_t(const SurfaceConfig& cfg);

/// 1/(-A^2) at the moment the section component of a twisted fiber is
/// contracted; the correction added to S^2 per twisted marked fiber.
Rational twisted_section_correction(const FiberType& type);

enum class GlobalKind {
    EllipticLcModel,
    Pseudoelliptic,
    Curve,
    Point,
    ProductToEllipticCurve,
};

std::string global_kind_str(GlobalKind k);

struct GlobalModel {
    GlobalKind kind = GlobalKind::EllipticLcModel;
    std::vector<ModelForm> mark_forms;  // per mark, in cfg order
    bool section_contracted = false;
    std::optional<int> iitaka_dimension;

    /// Human-readable label, detailed enough to distinguish chambers
    /// (includes per-mark forms for the elliptic kind).
    std::string label(const SurfaceConfig& cfg) const;
};

GlobalModel global_model(const SurfaceConfig& cfg);

}  // namespace elsurf
