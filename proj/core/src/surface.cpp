#include "elsurf/surface.hpp"

#include <algorithm>
#include <map>

#include "elsurf/errors.hpp"
#include "elsurf/mmp.hpp"

namespace elsurf {

void SurfaceConfig::validate() const {
    if (genus < 0) throw InputError("negative base genus");
    if (deg_L < 0) throw InputError("negative deg_L");
    auto check_weight = [](const Rational& w) {
        if (w < Rational(0) || w > Rational(1)) {
            throw InputError("mark weight must lie in [0, 1], got " + w.str());
        }
    };
    for (const auto& m : marks) check_weight(m.weight);
    for (const auto& w : generic_marks) check_weight(w);
    for (const auto& m : marks) {
        bool is_n = m.type.kind == FiberKind::N;
        if (isotrivial_j_infinity && !is_n) {
            throw InputError("isotrivial j = infinity config may only mark N fibers, got " +
                             m.type.str());
        }
        if (!isotrivial_j_infinity && is_n) {
            throw InputError("N fibers occur only on isotrivial j = infinity configs");
        }
    }
}

Rational SurfaceConfig::weight_sum() const {
    Rational total(0);
    for (const auto& m : marks) total += m.weight;
    for (const auto& w : generic_marks) total += w;
    return total;
}

WeightPath WeightPath::constant(const SurfaceConfig& cfg) {
    WeightPath p;
    for (const auto& m : cfg.marks) p.mark_weights.emplace_back(m.weight);
    for (const auto& w : cfg.generic_marks) p.generic_weights.emplace_back(w);
    return p;
}

void WeightPath::validate(const SurfaceConfig& cfg) const {
    if (mark_weights.size() != cfg.marks.size() ||
        generic_weights.size() != cfg.generic_marks.size()) {
        throw InputError("weight path length does not match the config's marks");
    }
    auto check = [](const Poly& w) {
        if (w.degree() > 1) throw InputError("weight path must be linear: " + w.str());
        for (const Rational& s : {Rational(0), Rational(1)}) {
            Rational v = w.eval(s);
            if (v < Rational(0) || v > Rational(1)) {
                throw InputError("weight path leaves [0, 1]: " + w.str());
            }
        }
    };
    for (const auto& w : mark_weights) check(w);
    for (const auto& w : generic_weights) check(w);
}

SurfaceConfig WeightPath::at(const SurfaceConfig& cfg, const Rational& s) const {
    SurfaceConfig out = cfg;
    for (std::size_t i = 0; i < mark_weights.size(); ++i) {
        out.marks[i].weight = mark_weights[i].eval(s);
    }
    for (std::size_t i = 0; i < generic_weights.size(); ++i) {
        out.generic_marks[i] = generic_weights[i].eval(s);
    }
    return out;
}

Poly WeightPath::total() const {
    Poly t;
    for (const auto& w : mark_weights) t += w;
    for (const auto& w : generic_weights) t += w;
    return t;
}

std::string WeightPath::str(const std::string& var) const {
    std::string out;
    bool first = true;
    for (const auto* list : {&mark_weights, &generic_weights}) {
        for (const auto& w : *list) {
            if (!first) out += ",";
            out += w.str(var);
            first = false;
        }
    }
    return out;
}

DivisorClass canonical_class(const SurfaceConfig& cfg) {
    cfg.validate();
    DivisorClass k;
    k.add("G", Rational(2 * cfg.genus - 2 + cfg.deg_L));
    for (std::size_t i = 0; i < cfg.marks.size(); ++i) {
        Rational alpha = delta_coefficient(cfg.marks[i].type, cfg.marks[i].weight);
        if (!alpha.is_zero()) k.add("E" + std::to_string(i + 1), alpha);
    }
    return k;
}

Rational section_pairing(const SurfaceConfig& cfg) {
    cfg.validate();
    return Rational(2 * cfg.genus - 2) + cfg.weight_sum();
}

bool section_contracted(const SurfaceConfig& cfg) {
    return section_pairing(cfg) <= Rational(0);
}

Rational twisted_section_correction(const FiberType& type) {
    Rational a_self;
    bool found = false;
    MmpOptions opts;
    opts.observer = [&](const FiberGraph& before, const ContractionStep& step, const FiberGraph&) {
        for (const auto& id : step.contracted) {
            const Component& c = before.component(id);
            if (c.meets_section) {
                a_self = c.self_intersection;
                found = true;
            }
        }
    };
    run_relative_mmp(type, Rational(1), opts);
    if (!found) {
        throw InputError("fiber type " + type.str() + " has no twisted model at weight 1");
    }
    if (a_self.sign() >= 0) {
        throw InternalError("non-negative self-intersection at section contraction");
    }
    return Rational(1) / (-a_self);
}

namespace {

struct MarkLattice {
    // Pairing data of one non-twisted marked fiber's reduced class F and
    // (for intermediate forms) its non-reduced component E.
    Rational ff, fe, ee;
    bool has_e = false;
};

MarkLattice mark_lattice(const FiberType& type, const Rational& weight) {
    RelativeModel model = run_relative_mmp(type, weight);
    MarkLattice out;
    if (model.form == ModelForm::Intermediate) {
        const Component* a = nullptr;
        const Component* e = nullptr;
        for (const auto& c : model.graph.components) {
            (c.multiplicity > 1 ? e : a) = &c;
        }
        Rational a2 = a->self_intersection;
        Rational e2 = e->self_intersection;
        Rational ae = model.graph.edge_multiplicity(a->id, e->id);
        out.ff = a2 + Rational(2) * ae + e2;
        out.fe = ae + e2;
        out.ee = e2;
        out.has_e = true;
    } else {
        out.ff = model.graph.components.front().self_intersection;
    }
    return out;
}

}  // namespace

LcSquareT lc_square_and_t(const SurfaceConfig& cfg, const WeightPath& path,
                          const Rational& sample) {
    cfg.validate();
    path.validate(cfg);
    if (cfg.genus != 0) {
        throw InputError("pseudoelliptic computation requires base genus 0");
    }
    SurfaceConfig at_sample = path.at(cfg, sample);
    if (!section_contracted(at_sample)) {
        throw InputError("pseudoelliptic computation outside the section-contracted regime");
    }
    if (cfg.deg_L < 1) {
        throw InputError("pseudoelliptic computation requires deg_L >= 1");
    }

    LcSquareT out;
    Rational s_self(-cfg.deg_L);
    Poly coeff_g = Poly(Rational(2 * cfg.genus - 2 + cfg.deg_L));
    for (const auto& w : path.generic_weights) coeff_g += w;

    // Basis: S, G, plus F<i>/E<i> per non-twisted marked singular fiber;
    // twisted fibers fold into G as 1/m of the fiber class and correct S^2.
    std::map<std::string, Poly> coeff;
    std::map<std::string, std::map<std::string, Rational>> pairing;
    auto set_pair = [&](const std::string& x, const std::string& y, const Rational& v) {
        pairing[x][y] = v;
        pairing[y][x] = v;
    };

    for (std::size_t i = 0; i < cfg.marks.size(); ++i) {
        const FiberType& type = cfg.marks[i].type;
        const Poly& w = path.mark_weights[i];
        ModelForm form = relative_model_form(type, w.eval(sample));
        Rational delta = delta_coefficient(type, form);
        if (form == ModelForm::Twisted) {
            RelativeModel model = run_relative_mmp(type, Rational(1));
            Rational m(model.graph.components.front().multiplicity);
            s_self += twisted_section_correction(type);
            coeff_g += w * (Rational(1) / m);
            if (!delta.is_zero()) coeff_g += Poly(delta / m);
            continue;
        }
        MarkLattice lat = mark_lattice(type, w.eval(sample));
        std::string f = "F" + std::to_string(i + 1);
        coeff[f] = w;
        set_pair(f, f, lat.ff);
        set_pair(f, "S", Rational(1));
        if (lat.has_e && !delta.is_zero()) {
            std::string e = "E" + std::to_string(i + 1);
            coeff[e] = Poly(delta);
            set_pair(e, e, lat.ee);
            set_pair(e, f, lat.fe);
        }
    }
    out.section_self = s_self;

    // t from adjunction: (K + S + F_A).S = 2g - 2 + sum(a_i), so the
    // S-coefficient of the pullback is 1 - (2g - 2 + sum(a_i)) / S^2.
    Poly total = path.total() + Poly(Rational(2 * cfg.genus - 2));
    out.t = Poly(Rational(1)) - total * (Rational(1) / s_self);

    coeff["S"] = out.t;
    coeff["G"] = coeff_g;
    set_pair("S", "S", s_self);
    set_pair("S", "G", Rational(1));
    // G pairs to zero with everything else; missing entries default to 0.

    Poly square;
    for (const auto& [la, ca] : coeff) {
        for (const auto& [lb, cb] : coeff) {
            auto row = pairing.find(la);
            if (row == pairing.end()) continue;
            auto it = row->second.find(lb);
            if (it == row->second.end() || it->second.is_zero()) continue;
            square += ca * cb * it->second;
        }
    }
    out.square = square;
    return out;
}

LcSquareT lc_square_and_t(const SurfaceConfig& cfg) {
    return lc_square_and_t(cfg, WeightPath::constant(cfg), Rational(1, 2));
}

std::string global_kind_str(GlobalKind k) {
    switch (k) {
        case GlobalKind::EllipticLcModel: return "elliptic lc model";
        case GlobalKind::Pseudoelliptic: return "pseudoelliptic";
        case GlobalKind::Curve: return "curve";
        case GlobalKind::Point: return "point";
        case GlobalKind::ProductToEllipticCurve: return "product to elliptic curve";
    }
    throw InternalError("unhandled global model kind");
}

std::string GlobalModel::label(const SurfaceConfig& cfg) const {
    std::string out = global_kind_str(kind);
    // The marked fibers keep their relative models on an elliptic or
    // pseudoelliptic surface, so their forms distinguish chambers there; on
    // a curve or point everything fiberwise has collapsed.
    if ((kind == GlobalKind::EllipticLcModel || kind == GlobalKind::Pseudoelliptic) &&
        !mark_forms.empty()) {
        out += " (";
        for (std::size_t i = 0; i < mark_forms.size(); ++i) {
            if (i) out += ", ";
            out += cfg.marks[i].type.str() + ": " + model_form_str(mark_forms[i]);
        }
        out += ")";
    }
    return out;
}

GlobalModel global_model(const SurfaceConfig& cfg) {
    cfg.validate();
    if (cfg.deg_L == 0 && !cfg.isotrivial_j_infinity && !cfg.is_product) {
        throw InputError("deg_L = 0 forces an isotrivial fibration or a product");
    }
    GlobalModel out;
    for (const auto& m : cfg.marks) {
        out.mark_forms.push_back(relative_model_form(m.type, m.weight));
    }
    out.section_contracted = section_contracted(cfg);
    if (!out.section_contracted) {
        out.kind = GlobalKind::EllipticLcModel;
        return out;
    }
    if (cfg.is_product) {
        out.kind = GlobalKind::ProductToEllipticCurve;
        return out;
    }
    if (cfg.deg_L >= 3) {
        out.kind = GlobalKind::Pseudoelliptic;
        out.iitaka_dimension = 2;
        return out;
    }
    if (cfg.deg_L == 2) {
        bool any_positive = cfg.weight_sum().sign() > 0;
        out.kind = any_positive ? GlobalKind::Pseudoelliptic : GlobalKind::Point;
        out.iitaka_dimension = any_positive ? 2 : 0;
        return out;
    }
    if (cfg.deg_L == 1) {
        LcSquareT lc = lc_square_and_t(cfg);
        Rational t = lc.t.constant_value();
        Rational square = lc.square.constant_value();
        if (t.sign() <= 0) {
            out.kind = GlobalKind::Point;
            out.iitaka_dimension = 0;
        } else if (square.sign() > 0) {
            out.kind = GlobalKind::Pseudoelliptic;
            out.iitaka_dimension = 2;
        } else {
            out.kind = GlobalKind::Curve;
            out.iitaka_dimension = 1;
        }
        return out;
    }
    throw InputError("log canonical model undetermined for deg_L = 0 without is_product");
}

}  // namespace elsurf
