#include "elsurf/mmp.hpp"

#include <algorithm>
#include <random>

#include "elsurf/errors.hpp"
#include "elsurf/lattice.hpp"

namespace elsurf {

LogDegreeReport log_degrees(const FiberGraph& g, const Rational& a) {
    IntersectionForm form = g.intersection_form();
    LogDegreeReport out;
    for (const auto& c : g.components) {
        Rational deg = c.k_degree;
        auto it = g.section_pairing.find(c.id);
        if (it != g.section_pairing.end()) deg += it->second;
        for (const auto& d : g.components) {
            Rational coeff = d.in_strict_transform ? a : Rational(1);
            deg += coeff * form.pairing(d.id, c.id);
        }
        out[c.id] = deg;
    }
    return out;
}

ContractionStep contract(FiberGraph& g, const std::vector<std::string>& ids, bool lc) {
    if (ids.empty()) throw InputError("empty contraction set");
    std::set<std::string> zset(ids.begin(), ids.end());
    if (zset.size() != ids.size()) throw InputError("repeated id in contraction set");
    for (const auto& id : ids) {
        if (!g.has_component(id)) throw InputError("cannot contract unknown component '" + id + "'");
        if (!lc && g.component(id).meets_section) {
            throw InputError("extremal step may not contract the section component '" + id + "'");
        }
    }
    if (zset.size() >= g.components.size()) {
        throw InternalError("contraction would remove every component");
    }

    IntersectionForm full = g.intersection_form();
    std::vector<std::string> z(zset.begin(), zset.end());
    IntersectionForm mz = full.restrict(z);
    if (!mz.is_negative_definite()) {
        throw InputError("contracted set is not negative definite");
    }

    ContractionStep step;
    step.lc = lc;
    step.contracted = z;

    auto solve_for = [&](const std::map<std::string, Rational>& rhs) {
        return mz.solve_contraction_coefficients(rhs);
    };

    std::vector<std::string> survivors;
    for (const auto& c : g.components) {
        if (!zset.count(c.id)) survivors.push_back(c.id);
    }

    for (const auto& t : survivors) {
        std::map<std::string, Rational> rhs;
        for (const auto& zi : z) rhs[zi] = full.pairing(t, zi);
        step.pullback[t] = solve_for(rhs);
    }
    {
        std::map<std::string, Rational> rhs_k, rhs_s;
        for (const auto& zi : z) {
            rhs_k[zi] = g.component(zi).k_degree;
            auto it = g.section_pairing.find(zi);
            rhs_s[zi] = (it == g.section_pairing.end()) ? Rational(0) : it->second;
        }
        step.pullback["K"] = solve_for(rhs_k);
        step.pullback["S"] = solve_for(rhs_s);
    }

    // Corrected pairings among survivors: pull both classes back and pair.
    auto corrected_pair = [&](const std::string& t, const std::string& u) {
        Rational v = full.pairing(t, u);
        for (const auto& [zi, c] : step.pullback.at(t)) v += c * full.pairing(zi, u);
        return v;
    };

    FiberGraph out;
    out.type = g.type;
    out.stage = g.stage;
    for (const auto& c : g.components) {
        if (zset.count(c.id)) continue;
        Component nc = c;
        nc.self_intersection = corrected_pair(c.id, c.id);
        Rational k = c.k_degree;
        for (const auto& [zi, ck] : step.pullback.at("K")) k += ck * full.pairing(zi, c.id);
        nc.k_degree = k;
        out.components.push_back(std::move(nc));
    }
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
            Rational m = corrected_pair(survivors[i], survivors[j]);
            if (!m.is_zero()) out.edges.push_back(Edge{survivors[i], survivors[j], m});
        }
    }
    for (const auto& t : survivors) {
        auto it = g.section_pairing.find(t);
        Rational s = (it == g.section_pairing.end()) ? Rational(0) : it->second;
        for (const auto& [zi, cs] : step.pullback.at("S")) s += cs * full.pairing(zi, t);
        if (!s.is_zero()) out.section_pairing[t] = s;
    }
    for (auto& c : out.components) c.meets_section = out.section_pairing.count(c.id) != 0;

    g = std::move(out);
    return step;
}

std::set<std::string> MmpTrace::contracted_pool() const {
    std::set<std::string> pool;
    for (const auto& s : steps) pool.insert(s.contracted.begin(), s.contracted.end());
    return pool;
}

namespace {

ModelForm classify_final_graph(const FiberGraph& g) {
    if (g.components.size() == 1) {
        const Component& c = g.components.front();
        if (c.geometry == ComponentGeometry::NodalCubic) return ModelForm::N0;
        if (c.multiplicity > 1) return ModelForm::Twisted;
        return ModelForm::Weierstrass;
    }
    if (g.components.size() == 2) {
        const Component* a = nullptr;
        const Component* e = nullptr;
        for (const auto& c : g.components) {
            if (c.multiplicity > 1) e = &c;
            else a = &c;
        }
        if (a && e && a->meets_section && !g.edge_multiplicity(a->id, e->id).is_zero()) {
            return ModelForm::Intermediate;
        }
    }
    throw InternalError("relative model has an unrecognized component configuration");
}

}  // namespace

RelativeModel run_relative_mmp(const FiberGraph& input, const Rational& a,
                               const MmpOptions& options) {
    if (a < Rational(0) || a > Rational(1)) {
        throw InputError("weight must lie in [0, 1], got " + a.str());
    }
    RelativeModel model;
    model.trace.initial = input;
    model.trace.weight = a;
    model.graph = input;

    std::mt19937 rng(options.seed);
    auto do_contract = [&](const std::vector<std::string>& ids, bool lc,
                           const LogDegreeReport& degrees) {
        FiberGraph before = model.graph;
        ContractionStep step = contract(model.graph, ids, lc);
        step.degrees_before = degrees;
        if (options.observer) options.observer(before, step, model.graph);
        model.trace.steps.push_back(std::move(step));
    };

    for (;;) {
        LogDegreeReport degrees = log_degrees(model.graph, a);
        std::vector<std::string> negative;
        for (const auto& [id, d] : degrees) {
            if (d.sign() < 0) negative.push_back(id);
        }
        if (!negative.empty()) {
            if (options.randomize_order) {
                std::shuffle(negative.begin(), negative.end(), rng);
                do_contract({negative.front()}, false, degrees);
            } else {
                do_contract(negative, false, degrees);
            }
            continue;
        }
        std::vector<std::string> zero;
        for (const auto& [id, d] : degrees) {
            if (d.is_zero()) zero.push_back(id);
        }
        if (!zero.empty()) {
            if (zero.size() == model.graph.components.size()) {
                // The log canonical class is trivial on the whole fiber;
                // report the fiber intact rather than contracting to nothing.
                model.lc_class_trivial_on_fiber = true;
                break;
            }
            do_contract(zero, true, degrees);
            for (const auto& [id, d] : log_degrees(model.graph, a)) {
                if (d.sign() < 0) {
                    throw InternalError("negative log degree on '" + id +
                                        "' after log canonical contraction");
                }
            }
            continue;
        }
        break;
    }

    if (!model.lc_class_trivial_on_fiber) {
        model.form = classify_final_graph(model.graph);
    }
    model.singularities = classify_contracted_set(model.trace.initial,
                                                  model.trace.contracted_pool());
    return model;
}

RelativeModel run_relative_mmp(const FiberType& type, const Rational& a,
                               const MmpOptions& options) {
    return run_relative_mmp(mmp_input_graph(type), a, options);
}

std::map<std::string, Rational> pullback_coefficients(const MmpTrace& trace,
                                                      const FiberGraph& final_graph) {
    // Boundary coefficients downstairs: the marked weight on strict
    // transforms, one on surviving exceptional components.
    std::map<std::string, Rational> down;
    for (const auto& c : final_graph.components) {
        down[c.id] = c.in_strict_transform ? trace.weight : Rational(1);
    }
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        std::map<std::string, Rational> lifted;
        for (const auto& zi : it->contracted) {
            Rational b = it->pullback.at("K").at(zi) + it->pullback.at("S").at(zi);
            for (const auto& [label, coeff] : down) {
                b += coeff * it->pullback.at(label).at(zi);
            }
            lifted[zi] = b;
        }
        down.insert(lifted.begin(), lifted.end());
    }
    std::set<std::string> pool = trace.contracted_pool();
    std::map<std::string, Rational> out;
    for (const auto& id : pool) out[id] = down.at(id);
    return out;
}

std::map<std::string, Rational> log_discrepancies(const MmpTrace& trace,
                                                  const FiberGraph& final_graph) {
    auto out = pullback_coefficients(trace, final_graph);
    for (auto& [id, b] : out) b = -b;
    return out;
}

}  // namespace elsurf
