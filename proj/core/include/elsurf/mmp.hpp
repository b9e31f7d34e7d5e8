#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elsurf/classify.hpp"
#include "elsurf/fiber.hpp"
#include "elsurf/rational.hpp"

namespace elsurf {

/// Log degree of every component: (K + S + sum of boundary) . C, where the
/// boundary carries the marked weight a on strict-transform components and
/// coefficient one on exceptional ones.
using LogDegreeReport = std::map<std::string, Rational>;

LogDegreeReport log_degrees(const FiberGraph& g, const Rational& a);

/// One contraction in the fiberwise MMP. `lc` marks the final step, which
/// contracts the degree-zero components instead of the strictly negative
/// ones. `pullback` records, per surviving component (plus the canonical
/// class under "K" and the section under "S"), the coefficients on the
/// contracted components that make the pulled-back class pair to zero with
/// each of them.
struct ContractionStep {
    bool lc = false;
    std::vector<std::string> contracted;
    LogDegreeReport degrees_before;
    std::map<std::string, std::map<std::string, Rational>> pullback;
};

struct MmpTrace {
    FiberGraph initial;
    Rational weight;
    std::vector<ContractionStep> steps;

    /// Union of everything contracted across all steps.
    std::set<std::string> contracted_pool() const;
};

/// Result of running the fiberwise MMP to the relative log canonical model.
struct RelativeModel {
    FiberGraph graph;  // surviving components with corrected numerics
    ModelForm form = ModelForm::Weierstrass;
    std::vector<SingularityRecord> singularities;
    MmpTrace trace;
    /// Set when every remaining component has log degree zero, in which case
    /// the fiber is reported intact instead of being contracted away. Never
    /// happens for catalog inputs.
    bool lc_class_trivial_on_fiber = false;
};

struct MmpOptions {
    /// Contract negative components one at a time in a shuffled order
    /// instead of all at once. The end result must not depend on this.
    bool randomize_order = false;
    unsigned seed = 0;
    /// Called after every contraction with the graph before, the step, and
    /// the graph after. Used by property tests.
    std::function<void(const FiberGraph&, const ContractionStep&, const FiberGraph&)> observer;
};

/// Contracts the named components of g in place, correcting every surviving
/// pairing, self-intersection, canonical degree and section pairing by the
/// pullback trick. Throws InputError if the contracted set's intersection
/// form is not negative definite.
ContractionStep contract(FiberGraph& g, const std::vector<std::string>& ids, bool lc);

/// Runs the fiberwise MMP on the log-smooth model of the fiber at weight a:
/// repeatedly contracts every component of strictly negative log degree,
/// then finishes with one log canonical contraction of the degree-zero
/// components. Requires 0 <= a <= 1.
RelativeModel run_relative_mmp(const FiberType& type, const Rational& a,
                               const MmpOptions& options = {});
RelativeModel run_relative_mmp(const FiberGraph& input, const Rational& a,
                               const MmpOptions& options = {});

/// Coefficient of each contracted component in the pullback of the final
/// model's log canonical class, composed through the trace steps; the
/// discrepancy of the component is the negative of that coefficient. The
/// model is log canonical iff every discrepancy is >= -1.
std::map<std::string, Rational> pullback_coefficients(const MmpTrace& trace,
                                                      const FiberGraph& final_graph);
std::map<std::string, Rational> log_discrepancies(const MmpTrace& trace,
                                                  const FiberGraph& final_graph);

}  // namespace elsurf
