#include "elsurf/walls.hpp"

#include <algorithm>

#include "elsurf/classify.hpp"
#include "elsurf/errors.hpp"

namespace elsurf {

std::set<Rational> fiber_walls(const FiberType& type) {
    switch (type.kind) {
        case FiberKind::I:
        case FiberKind::N:
            if (type.kind == FiberKind::N && type.index == 1) {
                return {Rational(1, 2), Rational(1)};
            }
            return {};
        case FiberKind::II: return {Rational(5, 6), Rational(1)};
        case FiberKind::III: return {Rational(3, 4), Rational(1)};
        case FiberKind::IV: return {Rational(2, 3), Rational(1)};
        case FiberKind::Istar:
        case FiberKind::IIstar:
        case FiberKind::IIIstar:
        case FiberKind::IVstar:
            return {Rational(0), Rational(1)};
    }
    throw InternalError("unhandled fiber kind in fiber_walls");
}

std::optional<SectionWall> section_wall(const SurfaceConfig& cfg) {
    cfg.validate();
    std::size_t n = cfg.marks.size() + cfg.generic_marks.size();
    if (cfg.genus == 0) {
        if (n < 2) return std::nullopt;  // sum of n weights in [0,1] cannot reach 2
        return SectionWall{Rational(2), false};
    }
    if (cfg.genus == 1) return SectionWall{Rational(0), true};
    return std::nullopt;
}

std::string wall_kind_str(WallKind k) {
    switch (k) {
        case WallKind::FiberTransition: return "fiber transition";
        case WallKind::SectionContraction: return "section contraction";
        case WallKind::PseudoellipticBigness: return "pseudoelliptic bigness";
        case WallKind::PseudoellipticTriviality: return "pseudoelliptic triviality";
    }
    throw InternalError("unhandled wall kind");
}

std::string Chamber::interval_str() const {
    if (lo == hi) return "{" + lo.str() + "}";
    return std::string(lo_open ? "(" : "[") + lo.str() + ", " + hi.str() +
           (hi_open ? ")" : "]");
}

namespace {

// Root of the linear polynomial p, if it lies in the closed interval [0, 1].
std::optional<Rational> linear_root_01(const Poly& p) {
    if (p.degree() != 1) return std::nullopt;
    Rational r = -p.coeff(0) / p.coeff(1);
    if (r < Rational(0) || r > Rational(1)) return std::nullopt;
    return r;
}

}  // namespace

ChamberReport parametric_walls(const SurfaceConfig& cfg, const WeightPath& path) {
    cfg.validate();
    path.validate(cfg);

    ChamberReport report;
    report.description = "weights (" + path.str() + "), parameter in [0, 1]";
    std::vector<Wall> candidates;

    for (std::size_t i = 0; i < path.mark_weights.size(); ++i) {
        const Poly& w = path.mark_weights[i];
        for (const Rational& v : fiber_walls(cfg.marks[i].type)) {
            if (auto s = linear_root_01(w - Poly(v))) {
                Wall wall;
                wall.kind = WallKind::FiberTransition;
                wall.value = *s;
                wall.lo = wall.hi = *s;
                wall.mark_index = static_cast<int>(i);
                wall.label = "mark " + std::to_string(i + 1) + " (" + cfg.marks[i].type.str() +
                             "): a = " + v.str();
                candidates.push_back(std::move(wall));
            }
        }
    }

    Poly total = path.total();
    if (auto sw = section_wall(cfg)) {
        if (auto s = linear_root_01(total - Poly(sw->total))) {
            Wall wall;
            wall.kind = WallKind::SectionContraction;
            wall.value = *s;
            wall.lo = wall.hi = *s;
            wall.label = "sum of weights = " + sw->total.str() +
                         (sw->degenerate ? " (degenerate)" : "");
            candidates.push_back(std::move(wall));
        }
    }
    if (cfg.genus == 0 && cfg.deg_L == 2) {
        // The degree-two pseudoelliptic degenerates to a point only when every
        // weight vanishes; catch a path reaching that corner.
        if (auto s = linear_root_01(total)) {
            Wall wall;
            wall.kind = WallKind::PseudoellipticTriviality;
            wall.value = *s;
            wall.lo = wall.hi = *s;
            wall.label = "all weights = 0";
            candidates.push_back(std::move(wall));
        }
    }

    auto breakpoints = [&]() {
        std::vector<Rational> b{Rational(0), Rational(1)};
        for (const auto& w : candidates) b.push_back(w.value);
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return b;
    };

    // Pseudoelliptic walls: inside every segment where the model is the
    // deg_L = 1 pseudoelliptic, roots of t and of square cut further walls.
    if (cfg.genus == 0 && cfg.deg_L == 1 && !cfg.is_product) {
        std::vector<Rational> b = breakpoints();
        std::vector<Wall> found;
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            Rational mid = (b[j] + b[j + 1]) / Rational(2);
            if (!section_contracted(path.at(cfg, mid))) continue;
            LcSquareT lc = lc_square_and_t(cfg, path, mid);
            std::vector<Rational> t_roots;
            for (const auto& r : lc.t.is_constant() ? std::vector<PolyRoot>{}
                                                    : lc.t.roots_in(b[j], b[j + 1])) {
                t_roots.push_back(r.value);
                Wall wall;
                wall.kind = WallKind::PseudoellipticTriviality;
                wall.value = r.value;
                wall.exact = r.exact;
                wall.lo = r.lo;
                wall.hi = r.hi;
                wall.label = "t = 0 on " + lc.t.str("a");
                found.push_back(std::move(wall));
            }
            if (lc.square.is_zero() || lc.square.is_constant()) continue;
            for (const auto& r : lc.square.roots_in(b[j], b[j + 1])) {
                if (lc.t.eval(r.value).sign() < 0) continue;  // not in the big regime
                if (std::count(t_roots.begin(), t_roots.end(), r.value)) continue;
                Wall wall;
                wall.kind = WallKind::PseudoellipticBigness;
                wall.value = r.value;
                wall.exact = r.exact;
                wall.lo = r.lo;
                wall.hi = r.hi;
                wall.label = "square = 0 on " + lc.square.factored_str("a");
                found.push_back(std::move(wall));
            }
        }
        candidates.insert(candidates.end(), found.begin(), found.end());
    }

    // Elementary pieces: every breakpoint as a singleton plus the open
    // intervals between, each labelled by the global model there; merge
    // equal-labelled neighbours into chambers.
    std::vector<Rational> b = breakpoints();
    auto label_at = [&](const Rational& s) {
        SurfaceConfig at = path.at(cfg, s);
        return global_model(at).label(at);
    };
    std::vector<Chamber> chambers;
    auto append = [&](const Rational& lo, const Rational& hi, bool open, std::string label) {
        if (!chambers.empty() && chambers.back().label == label) {
            chambers.back().hi = hi;
            chambers.back().hi_open = open;
            return;
        }
        chambers.push_back(Chamber{lo, hi, open, open, std::move(label)});
    };
    for (std::size_t j = 0; j < b.size(); ++j) {
        append(b[j], b[j], false, label_at(b[j]));
        if (j + 1 < b.size()) {
            Rational mid = (b[j] + b[j + 1]) / Rational(2);
            append(b[j], b[j + 1], true, label_at(mid));
        }
    }
    report.chambers = std::move(chambers);

    // A candidate is a genuine wall only where the chamber label changes:
    // it must sit on the boundary between two chambers.
    std::set<Rational> boundary;
    for (std::size_t j = 0; j < report.chambers.size(); ++j) {
        if (j > 0) boundary.insert(report.chambers[j].lo);
        if (j + 1 < report.chambers.size()) boundary.insert(report.chambers[j].hi);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto& w : candidates) {
        if (!boundary.count(w.value)) continue;
        if (!report.walls.empty() && report.walls.back().value == w.value) {
            report.walls.back().label += "; " + w.label;
            continue;
        }
        report.walls.push_back(std::move(w));
    }
    return report;
}

}  // namespace elsurf
