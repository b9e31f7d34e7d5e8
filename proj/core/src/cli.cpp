#include "elsurf/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elsurf/classify.hpp"
#include "elsurf/errors.hpp"
#include "elsurf/mmp.hpp"
#include "elsurf/selftest.hpp"
#include "elsurf/surface.hpp"
#include "elsurf/walls.hpp"

namespace elsurf {

namespace {

using nlohmann::json;

constexpr int kMaxIndex = 100;

FiberType parse_type_arg(const std::string& text) {
    FiberType t = FiberType::parse(text);
    if (t.index > kMaxIndex) {
        throw InputError("fiber index capped at " + std::to_string(kMaxIndex));
    }
    return t;
}

// ---- config file ----

SurfaceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InputError("config '" + path + "': " + e.what());
    }
    SurfaceConfig cfg;
    try {
        cfg.genus = doc.value("genus", 0);
        cfg.deg_L = doc.value("deg_L", 0);
        cfg.isotrivial_j_infinity = doc.value("isotrivial_j_infinity", false);
        cfg.is_product = doc.value("is_product", false);
        for (const auto& m : doc.value("marks", json::array())) {
            cfg.marks.push_back(Mark{parse_type_arg(m.at("type").get<std::string>()),
                                     Rational::parse(m.at("weight").get<std::string>())});
        }
        for (const auto& w : doc.value("generic_marks", json::array())) {
            cfg.generic_marks.push_back(Rational::parse(w.get<std::string>()));
        }
    } catch (const json::exception& e) {
        throw InputError("config '" + path + "': " + e.what());
    }
    cfg.validate();
    return cfg;
}

// ---- path SPEC: comma-separated linear expressions in one symbol ----

Poly parse_path_entry(const std::string& text, std::string& var) {
    // Grammar: signed sum of terms; term = rational | rational '*' symbol
    // | symbol | symbol '/' rational.
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InputError("empty path entry");
    Poly out;
    std::size_t i = 0;
    auto read_rational = [&]() {
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (start == i) throw InputError("expected a number in path entry '" + text + "'");
        return Rational::parse(s.substr(start, i - start));
    };
    auto read_symbol = [&]() {
        std::size_t start = i;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::string name = s.substr(start, i - start);
        if (name.empty()) throw InputError("expected a symbol in path entry '" + text + "'");
        if (var.empty()) var = name;
        if (name != var) {
            throw InputError("path entries must use a single symbol, got '" + var + "' and '" +
                             name + "'");
        }
        return name;
    };
    while (i < s.size()) {
        Rational sign(1);
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = Rational(-1);
            ++i;
        }
        Poly term;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            read_symbol();
            Rational coeff(1);
            if (i < s.size() && s[i] == '/') {
                ++i;
                coeff = Rational(1) / read_rational();
            }
            term = Poly::linear(Rational(0), coeff);
        } else {
            Rational c = read_rational();
            if (i < s.size() && s[i] == '*') {
                ++i;
                read_symbol();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    c /= read_rational();
                }
                term = Poly::linear(Rational(0), c);
            } else {
                term = Poly(c);
            }
        }
        out += term * sign;
        if (i < s.size() && s[i] != '+' && s[i] != '-') {
            throw InputError("cannot parse path entry '" + text + "' at '" + s.substr(i) + "'");
        }
    }
    return out;
}

WeightPath parse_path_spec(const SurfaceConfig& cfg, const std::string& spec, std::string& var) {
    std::vector<Poly> entries;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(parse_path_entry(item, var));
    if (var.empty()) var = "a";
    std::size_t want = cfg.marks.size() + cfg.generic_marks.size();
    if (entries.size() != want) {
        throw InputError("path has " + std::to_string(entries.size()) + " entries, config has " +
                         std::to_string(want) + " weights (marks first, then generic marks)");
    }
    WeightPath path;
    path.mark_weights.assign(entries.begin(),
                             entries.begin() + static_cast<std::ptrdiff_t>(cfg.marks.size()));
    path.generic_weights.assign(entries.begin() + static_cast<std::ptrdiff_t>(cfg.marks.size()),
                                entries.end());
    path.validate(cfg);
    return path;
}

// ---- serialization ----

json rational_json(const Rational& r) { return r.str(); }

json graph_json(const FiberGraph& g) {
    json out;
    out["type"] = g.type.str();
    out["components"] = json::array();
    for (const auto& c : g.components) {
        out["components"].push_back({{"id", c.id},
                                     {"multiplicity", c.multiplicity},
                                     {"self_intersection", rational_json(c.self_intersection)},
                                     {"k_degree", rational_json(c.k_degree)},
                                     {"meets_section", c.meets_section},
                                     {"strict_transform", c.in_strict_transform},
                                     {"geometry", geometry_str(c.geometry)}});
    }
    out["edges"] = json::array();
    for (const auto& e : g.edges) {
        out["edges"].push_back({{"a", e.a}, {"b", e.b}, {"mult", rational_json(e.mult)}});
    }
    out["section_pairing"] = json::object();
    for (const auto& [id, v] : g.section_pairing) out["section_pairing"][id] = rational_json(v);
    return out;
}

json map_json(const std::map<std::string, Rational>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = rational_json(v);
    return out;
}

json step_json(const ContractionStep& s) {
    json out;
    out["kind"] = s.lc ? "log canonical" : "extremal";
    out["contracted"] = s.contracted;
    out["degrees_before"] = map_json(s.degrees_before);
    out["pullback"] = json::object();
    for (const auto& [label, coeffs] : s.pullback) out["pullback"][label] = map_json(coeffs);
    return out;
}

json singularities_json(const std::vector<SingularityRecord>& sings) {
    json out = json::array();
    for (const auto& s : sings) out.push_back(s.str());
    return out;
}

std::string divisor_str(const DivisorClass& d) {
    if (d.coeff.empty()) return "0";
    std::string out;
    for (const auto& [label, c] : d.coeff) {
        std::string abs = c.abs() == Rational(1) ? label : c.abs().str() + "*" + label;
        if (out.empty()) out += (c.sign() < 0 ? "-" : "") + abs;
        else out += (c.sign() < 0 ? " - " : " + ") + abs;
    }
    return out;
}

json model_json(const GlobalModel& m, const SurfaceConfig& cfg) {
    json out;
    out["kind"] = global_kind_str(m.kind);
    out["label"] = m.label(cfg);
    out["section_contracted"] = m.section_contracted;
    if (m.iitaka_dimension) out["iitaka_dimension"] = *m.iitaka_dimension;
    out["mark_forms"] = json::array();
    for (std::size_t i = 0; i < m.mark_forms.size(); ++i) {
        out["mark_forms"].push_back({{"type", cfg.marks[i].type.str()},
                                     {"weight", rational_json(cfg.marks[i].weight)},
                                     {"form", model_form_str(m.mark_forms[i])}});
    }
    return out;
}

json report_json(const ChamberReport& rep) {
    json out;
    out["description"] = rep.description;
    out["walls"] = json::array();
    for (const auto& w : rep.walls) {
        json wj{{"kind", wall_kind_str(w.kind)},
                {"value", rational_json(w.value)},
                {"exact", w.exact},
                {"label", w.label}};
        if (!w.exact) {
            wj["enclosure_lo"] = rational_json(w.lo);
            wj["enclosure_hi"] = rational_json(w.hi);
        }
        if (w.mark_index >= 0) wj["mark_index"] = w.mark_index;
        out["walls"].push_back(std::move(wj));
    }
    out["chambers"] = json::array();
    for (const auto& c : rep.chambers) {
        out["chambers"].push_back({{"lo", rational_json(c.lo)},
                                   {"hi", rational_json(c.hi)},
                                   {"lo_open", c.lo_open},
                                   {"hi_open", c.hi_open},
                                   {"interval", c.interval_str()},
                                   {"label", c.label}});
    }
    return out;
}

void print_report(std::ostream& out, const ChamberReport& rep) {
    out << rep.description << "\n";
    if (rep.walls.empty()) out << "no walls\n";
    for (const auto& w : rep.walls) {
        out << "wall at " << (w.exact ? w.value.str()
                                      : w.lo.str() + " .. " + w.hi.str() + " (irrational)")
            << "  [" << wall_kind_str(w.kind) << "]  " << w.label << "\n";
    }
    for (const auto& c : rep.chambers) {
        out << c.interval_str() << "  " << c.label << "\n";
    }
}

// ---- subcommand bodies ----

int cmd_fiber_classify(std::ostream& out, const std::string& type_s, const std::string& weight_s,
                       bool as_json) {
    FiberType t = parse_type_arg(type_s);
    Rational a = Rational::parse(weight_s);
    RelativeModel m = run_relative_mmp(t, a);
    if (as_json) {
        out << json{{"type", t.str()},
                    {"weight", rational_json(a)},
                    {"form", model_form_str(m.form)},
                    {"singularities", singularities_json(m.singularities)}}
                   .dump(2)
            << "\n";
    } else {
        out << t.str() << " at weight " << a.str() << ": " << model_form_str(m.form)
            << "; singularities: " << singularity_list_str(m.singularities) << "\n";
    }
    return 0;
}

int cmd_fiber_mmp(std::ostream& out, const std::string& type_s, const std::string& weight_s,
                  bool trace, bool as_json) {
    FiberType t = parse_type_arg(type_s);
    Rational a = Rational::parse(weight_s);
    RelativeModel m = run_relative_mmp(t, a);
    if (as_json) {
        json doc{{"type", t.str()},
                 {"weight", rational_json(a)},
                 {"form", model_form_str(m.form)},
                 {"lc_class_trivial_on_fiber", m.lc_class_trivial_on_fiber},
                 {"singularities", singularities_json(m.singularities)},
                 {"final_graph", graph_json(m.graph)},
                 {"log_discrepancies", map_json(log_discrepancies(m.trace, m.graph))}};
        if (trace) {
            doc["trace"] = json::array();
            for (const auto& s : m.trace.steps) doc["trace"].push_back(step_json(s));
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << t.str() << " at weight " << a.str() << " -> " << model_form_str(m.form);
    if (m.lc_class_trivial_on_fiber) out << " (log canonical class trivial on the fiber)";
    out << "\n" << "singularities: " << singularity_list_str(m.singularities) << "\n";
    out << "surviving components:\n";
    for (const auto& c : m.graph.components) {
        out << "  " << c.id << ": mult " << c.multiplicity << ", self "
            << c.self_intersection.str() << ", K-degree " << c.k_degree.str()
            << (c.meets_section ? ", meets section" : "") << "\n";
    }
    if (trace) {
        int n = 0;
        for (const auto& s : m.trace.steps) {
            out << "step " << ++n << (s.lc ? " (log canonical)" : " (extremal)")
                << ": contract {";
            for (std::size_t i = 0; i < s.contracted.size(); ++i)
                out << (i ? ", " : "") << s.contracted[i];
            out << "}\n  degrees before:";
            for (const auto& [id, d] : s.degrees_before) out << " " << id << "=" << d.str();
            out << "\n";
        }
        auto disc = log_discrepancies(m.trace, m.graph);
        out << "log discrepancies:";
        for (const auto& [id, d] : disc) out << " " << id << "=" << d.str();
        out << "\n";
    }
    return 0;
}

int cmd_surface_canonical(std::ostream& out, const std::string& config_path, bool as_json) {
    SurfaceConfig cfg = load_config(config_path);
    DivisorClass k = canonical_class(cfg);
    if (as_json) {
        json doc{{"canonical_class", map_json(k.coeff)}, {"display", divisor_str(k)}};
        doc["section_pairing"] = rational_json(section_pairing(cfg));
        out << doc.dump(2) << "\n";
    } else {
        out << "K = " << divisor_str(k) << "\n";
        out << "(K + S + F).S = " << section_pairing(cfg).str() << "\n";
    }
    return 0;
}

int cmd_surface_model(std::ostream& out, const std::string& config_path, bool as_json) {
    SurfaceConfig cfg = load_config(config_path);
    GlobalModel m = global_model(cfg);
    if (as_json) out << model_json(m, cfg).dump(2) << "\n";
    else {
        out << "log canonical model: " << m.label(cfg) << "\n";
        if (m.iitaka_dimension) out << "iitaka dimension: " << *m.iitaka_dimension << "\n";
    }
    return 0;
}

int cmd_walls(std::ostream& out, const std::string& config_path, const std::string& path_spec,
              bool as_json) {
    SurfaceConfig cfg = load_config(config_path);
    std::string var;
    WeightPath path = path_spec.empty() ? WeightPath::constant(cfg)
                                        : parse_path_spec(cfg, path_spec, var);
    ChamberReport rep = parametric_walls(cfg, path);
    if (as_json) out << report_json(rep).dump(2) << "\n";
    else print_report(out, rep);
    return 0;
}

int cmd_example(std::ostream& out, bool as_json) {
    // Rational elliptic surface with two I0* fibers: weights (a, 1) on the
    // marked fibers and a on one smooth fiber.
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    cfg.marks = {Mark{FiberType{FiberKind::Istar, 0}, Rational(1, 3)},
                 Mark{FiberType{FiberKind::Istar, 0}, Rational(1)}};
    cfg.generic_marks = {Rational(1, 3)};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly(1)};
    path.generic_weights = {Poly::variable()};
    LcSquareT lc = lc_square_and_t(cfg, path, Rational(2, 5));
    ChamberReport rep = parametric_walls(cfg, path);
    if (as_json) {
        json doc{{"t", lc.t.str()},
                 {"square", lc.square.str()},
                 {"square_factored", lc.square.factored_str()},
                 {"section_self", rational_json(lc.section_self)},
                 {"report", report_json(rep)}};
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "rational elliptic surface, deg_L = 1, two I0* fibers at weights (a, 1), one\n"
        << "smooth fiber at weight a\n";
    out << "S^2 on the twisted model = " << lc.section_self.str() << "\n";
    out << "t = " << lc.t.str() << "\n";
    out << "square = " << lc.square.factored_str() << "\n";
    print_report(out, rep);
    return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact log canonical models of weighted elliptic surface pairs"};
    app.require_subcommand(1);

    std::string type_s, weight_s, config_path, path_spec, example_name;
    bool as_json = false, trace = false;

    auto* fiber = app.add_subcommand("fiber", "per-fiber relative models");
    fiber->require_subcommand(1);
    auto* classify = fiber->add_subcommand("classify", "model form and singularities");
    classify->add_option("--type", type_s, "fiber type, e.g. I5, I2*, II, IV*, N1")->required();
    classify->add_option("--weight", weight_s, "weight in [0,1], e.g. 5/6")->required();
    classify->add_flag("--json", as_json, "machine-readable output");
    auto* mmp = fiber->add_subcommand("mmp", "run the fiberwise MMP");
    mmp->add_option("--type", type_s, "fiber type")->required();
    mmp->add_option("--weight", weight_s, "weight in [0,1]")->required();
    mmp->add_flag("--trace", trace, "print every contraction step");
    mmp->add_flag("--json", as_json, "machine-readable output");

    auto* surface = app.add_subcommand("surface", "global surface computations");
    surface->require_subcommand(1);
    auto* canonical = surface->add_subcommand("canonical", "canonical class of the pair");
    canonical->add_option("--config", config_path, "surface config file (JSON)")->required();
    canonical->add_flag("--json", as_json, "machine-readable output");
    auto* model = surface->add_subcommand("model", "global log canonical model");
    model->add_option("--config", config_path, "surface config file (JSON)")->required();
    model->add_flag("--json", as_json, "machine-readable output");

    auto* walls = app.add_subcommand("walls", "wall-and-chamber report");
    walls->add_option("--config", config_path, "surface config file (JSON)")->required();
    walls->add_option("--path", path_spec,
                      "weight path, one linear expression per weight (marks first), e.g. a,1,a");
    walls->add_flag("--json", as_json, "machine-readable output");

    auto* example = app.add_subcommand("example", "built-in worked examples");
    example->add_option("name", example_name, "example name (rational-i0star)")->required();
    example->add_flag("--json", as_json, "machine-readable output");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) return cmd_fiber_classify(out, type_s, weight_s, as_json);
        if (mmp->parsed()) return cmd_fiber_mmp(out, type_s, weight_s, trace, as_json);
        if (canonical->parsed()) return cmd_surface_canonical(out, config_path, as_json);
        if (model->parsed()) return cmd_surface_model(out, config_path, as_json);
        if (walls->parsed()) return cmd_walls(out, config_path, path_spec, as_json);
        if (example->parsed()) {
            if (example_name != "rational-i0star") {
                throw InputError("unknown example '" + example_name + "'");
            }
            return cmd_example(out, as_json);
        }
        if (selftest->parsed()) return run_acceptance(out) == 0 ? 0 : 1;
        throw InputError("missing subcommand (try --help)");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace elsurf
