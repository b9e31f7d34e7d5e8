#include "elsurf/fiber.hpp"

#include <algorithm>
#include <cctype>

#include "elsurf/errors.hpp"

namespace elsurf {

namespace {

int parse_index(const std::string& digits, const std::string& full) {
    if (digits.empty()) throw InputError("missing index in fiber type '" + full + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InputError("bad index in fiber type '" + full + "'");
        }
    }
    if (digits.size() > 6) throw InputError("fiber index out of range in '" + full + "'");
    return std::stoi(digits);
}

}  // namespace

FiberType FiberType::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) throw InputError("empty fiber type");

    bool star = false;
    if (s.back() == '*') {
        star = true;
        s.pop_back();
    }

    if (s == "II" || s == "III" || s == "IV") {
        FiberType t;
        if (s == "II") t.kind = star ? FiberKind::IIstar : FiberKind::II;
        if (s == "III") t.kind = star ? FiberKind::IIIstar : FiberKind::III;
        if (s == "IV") t.kind = star ? FiberKind::IVstar : FiberKind::IV;
        return t;
    }
    if (s.size() >= 2 && s[0] == 'N') {
        if (star) throw InputError("no starred N fiber type: '" + text + "'");
        int k = parse_index(s.substr(1), text);
        if (k > 2) throw InputError("N fiber index must be 0, 1 or 2: '" + text + "'");
        return FiberType{FiberKind::N, k};
    }
    if (!s.empty() && s[0] == 'I') {
        int n = parse_index(s.substr(1), text);
        return FiberType{star ? FiberKind::Istar : FiberKind::I, n};
    }
    throw InputError("unrecognized fiber type '" + text + "'");
}

std::string FiberType::str() const {
    switch (kind) {
        case FiberKind::I: return "I" + std::to_string(index);
        case FiberKind::Istar: return "I" + std::to_string(index) + "*";
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IIstar: return "II*";
        case FiberKind::IIIstar: return "III*";
        case FiberKind::IVstar: return "IV*";
        case FiberKind::N: return "N" + std::to_string(index);
    }
    throw InternalError("unhandled fiber kind");
}

bool geometry_is_log_smooth(ComponentGeometry g) {
    switch (g) {
        case ComponentGeometry::SmoothRational:
        case ComponentGeometry::NodalRational:
        case ComponentGeometry::SmoothElliptic:
        case ComponentGeometry::NodalCubic:
            return true;
        case ComponentGeometry::CuspidalCubic:
        case ComponentGeometry::TangentPair:
        case ComponentGeometry::ConcurrentTriple:
            return false;
    }
    throw InternalError("unhandled component geometry");
}

std::string geometry_str(ComponentGeometry g) {
    switch (g) {
        case ComponentGeometry::SmoothRational: return "smooth rational";
        case ComponentGeometry::NodalRational: return "nodal rational";
        case ComponentGeometry::SmoothElliptic: return "smooth elliptic";
        case ComponentGeometry::NodalCubic: return "nodal cubic";
        case ComponentGeometry::CuspidalCubic: return "cuspidal cubic";
        case ComponentGeometry::TangentPair: return "tangent pair member";
        case ComponentGeometry::ConcurrentTriple: return "concurrent triple member";
    }
    throw InternalError("unhandled component geometry");
}

const Component& FiberGraph::component(const std::string& id) const {
    for (const auto& c : components) {
        if (c.id == id) return c;
    }
    throw InputError("no component '" + id + "' in fiber graph");
}

bool FiberGraph::has_component(const std::string& id) const {
    return std::any_of(components.begin(), components.end(),
                       [&](const Component& c) { return c.id == id; });
}

std::vector<std::string> FiberGraph::component_ids() const {
    std::vector<std::string> ids;
    ids.reserve(components.size());
    for (const auto& c : components) ids.push_back(c.id);
    return ids;
}

Rational FiberGraph::edge_multiplicity(const std::string& a, const std::string& b) const {
    Rational total(0);
    for (const auto& e : edges) {
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) total += e.mult;
    }
    return total;
}

std::vector<std::string> FiberGraph::neighbors(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& c : components) {
        if (c.id != id && !edge_multiplicity(id, c.id).is_zero()) out.push_back(c.id);
    }
    return out;
}

DivisorClass FiberGraph::fiber_class() const {
    DivisorClass f;
    for (const auto& c : components) f.add(c.id, Rational(c.multiplicity));
    return f;
}

IntersectionForm FiberGraph::intersection_form() const {
    auto ids = component_ids();
    const std::size_t n = ids.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = component(ids[i]).self_intersection;
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = m[j][i] = edge_multiplicity(ids[i], ids[j]);
        }
    }
    return IntersectionForm(ids, std::move(m));
}

IntersectionForm FiberGraph::intersection_form_with_section(const Rational& s_self) const {
    auto ids = component_ids();
    std::vector<std::string> labels = ids;
    labels.push_back("S");
    const std::size_t n = labels.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i][i] = component(ids[i]).self_intersection;
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            m[i][j] = m[j][i] = edge_multiplicity(ids[i], ids[j]);
        }
        auto it = section_pairing.find(ids[i]);
        m[i][n - 1] = m[n - 1][i] = (it == section_pairing.end()) ? Rational(0) : it->second;
    }
    m[n - 1][n - 1] = s_self;
    return IntersectionForm(std::move(labels), std::move(m));
}

namespace {

struct GraphBuilder {
    FiberGraph g;

    void comp(std::string id, int mult, Rational self, Rational k, bool strict,
              ComponentGeometry geom = ComponentGeometry::SmoothRational) {
        g.components.push_back(Component{std::move(id), mult, std::move(self), std::move(k),
                                         false, strict, geom});
    }

    void edge(std::string a, std::string b, Rational mult = 1) {
        g.edges.push_back(Edge{std::move(a), std::move(b), std::move(mult)});
    }

    void section_on(const std::string& id) {
        for (auto& c : g.components) {
            if (c.id == id) {
                c.meets_section = true;
                g.section_pairing[id] = Rational(1);
                return;
            }
        }
        throw InternalError("section target '" + id + "' missing");
    }

    /// A chain of multiplicity-m (-2)-curves between two ids already added.
    void minus_two_chain(const std::vector<std::pair<std::string, int>>& chain) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            comp(chain[i].first, chain[i].second, -2, 0, true);
            if (i > 0) edge(chain[i - 1].first, chain[i].first);
        }
    }
};

FiberGraph minimal_graph(const FiberType& t) {
    GraphBuilder b;
    b.g.type = t;
    b.g.stage = FiberStage::Minimal;
    switch (t.kind) {
        case FiberKind::I: {
            if (t.index == 0) {
                b.comp("A", 1, 0, 0, true, ComponentGeometry::SmoothElliptic);
                b.section_on("A");
            } else if (t.index == 1) {
                b.comp("A", 1, 0, 0, true, ComponentGeometry::NodalRational);
                b.section_on("A");
            } else {
                // Cycle A, D1, ..., D_{n-1}; the section meets A.
                const int n = t.index;
                b.comp("A", 1, -2, 0, true);
                for (int i = 1; i < n; ++i) {
                    b.comp("D" + std::to_string(i), 1, -2, 0, true);
                }
                if (n == 2) {
                    b.edge("A", "D1", 2);
                } else {
                    b.edge("A", "D1");
                    for (int i = 1; i + 1 < n; ++i) {
                        b.edge("D" + std::to_string(i), "D" + std::to_string(i + 1));
                    }
                    b.edge("D" + std::to_string(n - 1), "A");
                }
                b.section_on("A");
            }
            break;
        }
        case FiberKind::Istar: {
            const int n = t.index;
            b.comp("A", 1, -2, 0, true);
            b.comp("D1", 1, -2, 0, true);
            b.comp("D2", 1, -2, 0, true);
            b.comp("D3", 1, -2, 0, true);
            std::vector<std::pair<std::string, int>> spine;
            for (int i = 0; i <= n; ++i) spine.emplace_back("E" + std::to_string(i), 2);
            b.minus_two_chain(spine);
            b.edge("A", "E0");
            b.edge("D1", "E0");
            b.edge("D2", "E" + std::to_string(n));
            b.edge("D3", "E" + std::to_string(n));
            b.section_on("A");
            break;
        }
        case FiberKind::II:
            b.comp("A", 1, 0, 0, true, ComponentGeometry::CuspidalCubic);
            b.section_on("A");
            break;
        case FiberKind::III:
            b.comp("A", 1, -2, 0, true, ComponentGeometry::TangentPair);
            b.comp("D1", 1, -2, 0, true, ComponentGeometry::TangentPair);
            b.edge("A", "D1", 2);
            b.section_on("A");
            break;
        case FiberKind::IV:
            b.comp("A", 1, -2, 0, true, ComponentGeometry::ConcurrentTriple);
            b.comp("D1", 1, -2, 0, true, ComponentGeometry::ConcurrentTriple);
            b.comp("D2", 1, -2, 0, true, ComponentGeometry::ConcurrentTriple);
            b.edge("A", "D1");
            b.edge("A", "D2");
            b.edge("D1", "D2");
            b.section_on("A");
            break;
        case FiberKind::IIstar:
            // Affine E8: A(1)-B5(2)-B4(3)-B3(4)-B2(5)-E(6)-B1(4)-D1(2), D2(3) on E.
            b.minus_two_chain({{"A", 1}, {"B5", 2}, {"B4", 3}, {"B3", 4}, {"B2", 5},
                               {"E", 6}, {"B1", 4}, {"D1", 2}});
            b.comp("D2", 3, -2, 0, true);
            b.edge("E", "D2");
            b.section_on("A");
            break;
        case FiberKind::IIIstar:
            // Affine E7: A(1)-B4(2)-B3(3)-E(4)-B2(3)-B1(2)-D1(1), D2(2) on E.
            b.minus_two_chain({{"A", 1}, {"B4", 2}, {"B3", 3}, {"E", 4}, {"B2", 3},
                               {"B1", 2}, {"D1", 1}});
            b.comp("D2", 2, -2, 0, true);
            b.edge("E", "D2");
            b.section_on("A");
            break;
        case FiberKind::IVstar:
            // Affine E6: A(1)-B3(2)-E(3)-B1(2)-D1(1), D2(1)-B2(2)-E.
            b.minus_two_chain({{"A", 1}, {"B3", 2}, {"E", 3}, {"B1", 2}, {"D1", 1}});
            b.comp("B2", 2, -2, 0, true);
            b.comp("D2", 1, -2, 0, true);
            b.edge("E", "B2");
            b.edge("B2", "D2");
            b.section_on("A");
            break;
        case FiberKind::N: {
            if (t.index == 0) {
                b.comp("A", 1, 0, 0, true, ComponentGeometry::NodalCubic);
                b.section_on("A");
            } else if (t.index == 1) {
                b.comp("A", 1, 0, 0, true, ComponentGeometry::CuspidalCubic);
                b.section_on("A");
            } else {
                b.comp("A", 1, -1, -1, true);
                b.comp("E", 1, -1, 1, true, ComponentGeometry::NodalCubic);
                b.edge("A", "E");
                b.section_on("A");
            }
            break;
        }
    }
    return b.g;
}

}  // namespace

FiberGraph build_fiber_graph(const FiberType& type) { return minimal_graph(type); }

FiberGraph log_resolution_graph(const FiberType& type) {
    GraphBuilder b;
    b.g.type = type;
    b.g.stage = FiberStage::LogResolution;
    switch (type.kind) {
        case FiberKind::II:
            // Three blowups at the cusp; E is the last exceptional and
            // meets everything.
            b.comp("A", 1, -6, 4, true);
            b.comp("D1", 2, -3, 1, false);
            b.comp("D2", 3, -2, 0, false);
            b.comp("E", 6, -1, -1, false);
            b.edge("E", "A");
            b.edge("E", "D1");
            b.edge("E", "D2");
            b.section_on("A");
            return b.g;
        case FiberKind::III:
            // Two blowups at the tangency point.
            b.comp("A", 1, -4, 2, true);
            b.comp("D1", 1, -4, 2, true);
            b.comp("D2", 2, -2, 0, false);
            b.comp("E", 4, -1, -1, false);
            b.edge("E", "A");
            b.edge("E", "D1");
            b.edge("E", "D2");
            b.section_on("A");
            return b.g;
        case FiberKind::IV:
            // One blowup at the triple point.
            b.comp("A", 1, -3, 1, true);
            b.comp("D1", 1, -3, 1, true);
            b.comp("D2", 1, -3, 1, true);
            b.comp("E", 3, -1, -1, false);
            b.edge("E", "A");
            b.edge("E", "D1");
            b.edge("E", "D2");
            b.section_on("A");
            return b.g;
        case FiberKind::N:
            if (type.index == 1) {
                // Resolution of the y^2 = x^2(x - t) total space over the
                // cusp point: two (-2)-tails on a central (-1)-curve of
                // multiplicity two. Intersections live on a singular total
                // space, so smooth-curve adjunction does not apply to E.
                b.comp("A", 1, -2, 0, true);
                b.comp("B", 1, -2, 0, false);
                b.comp("E", 2, -1, 0, false, ComponentGeometry::NodalRational);
                b.edge("A", "E");
                b.edge("B", "E");
                b.section_on("A");
                return b.g;
            }
            break;
        default:
            break;
    }
    FiberGraph g = minimal_graph(type);
    for (const auto& c : g.components) {
        if (!geometry_is_log_smooth(c.geometry)) {
            throw InternalError("log resolution missing for fiber type " + type.str());
        }
    }
    g.stage = FiberStage::LogResolution;
    return g;
}

FiberGraph mmp_input_graph(const FiberType& type) {
    FiberGraph g = log_resolution_graph(type);
    g.stage = FiberStage::MmpInput;
    return g;
}

}  // namespace elsurf
