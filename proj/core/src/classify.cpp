#include "elsurf/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "elsurf/errors.hpp"
#include "elsurf/mmp.hpp"

namespace elsurf {

std::string model_form_str(ModelForm f) {
    switch (f) {
        case ModelForm::Weierstrass: return "Weierstrass";
        case ModelForm::Intermediate: return "intermediate";
        case ModelForm::Twisted: return "twisted";
        case ModelForm::N0: return "N0";
    }
    throw InternalError("unhandled model form");
}

std::string SingularityRecord::str() const {
    switch (kind) {
        case Kind::A: return "A" + std::to_string(index);
        case Kind::D: return "D" + std::to_string(index);
        case Kind::E: return "E" + std::to_string(index);
        case Kind::Astar: return "A" + std::to_string(index) + "*";
        case Kind::Chain: {
            std::string out = "chain[";
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (i) out += ",";
                out += chain[i].str();
            }
            return out + "]";
        }
    }
    throw InternalError("unhandled singularity kind");
}

bool operator<(const SingularityRecord& a, const SingularityRecord& b) {
    return std::tie(a.kind, a.index, a.chain) < std::tie(b.kind, b.index, b.chain);
}

std::string singularity_list_str(const std::vector<SingularityRecord>& sings) {
    if (sings.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < sings.size(); ++i) {
        if (i) out += " + ";
        out += sings[i].str();
    }
    return out;
}

namespace {

struct Piece {
    std::vector<std::string> ids;
    std::map<std::string, Rational> self;
    // Symmetric adjacency with multiplicity, keyed by ordered id pair.
    std::map<std::pair<std::string, std::string>, Rational> edge;

    Rational edge_mult(const std::string& a, const std::string& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = edge.find(key);
        return it == edge.end() ? Rational(0) : it->second;
    }

    void add_edge(const std::string& a, const std::string& b, const Rational& m) {
        if (m.is_zero()) return;
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        edge[key] += m;
    }

    std::vector<std::string> neighbors(const std::string& id) const {
        std::vector<std::string> out;
        for (const auto& other : ids) {
            if (other != id && !edge_mult(id, other).is_zero()) out.push_back(other);
        }
        return out;
    }

    void remove(const std::string& id) {
        ids.erase(std::find(ids.begin(), ids.end(), id));
        self.erase(id);
        for (auto it = edge.begin(); it != edge.end();) {
            if (it->first.first == id || it->first.second == id) {
                it = edge.erase(it);
            } else {
                ++it;
            }
        }
    }
};

/// Blows down (-1)-vertices until none remain.
void reduce_piece(Piece& p) {
    for (;;) {
        auto it = std::find_if(p.ids.begin(), p.ids.end(), [&](const std::string& id) {
            return p.self.at(id) == Rational(-1);
        });
        if (it == p.ids.end()) return;
        const std::string id = *it;
        auto nbrs = p.neighbors(id);
        std::vector<Rational> mults;
        mults.reserve(nbrs.size());
        for (const auto& n : nbrs) mults.push_back(p.edge_mult(id, n));
        p.remove(id);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            p.self[nbrs[i]] += mults[i] * mults[i];
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                p.add_edge(nbrs[i], nbrs[j], mults[i] * mults[j]);
            }
        }
    }
}

SingularityRecord chain_fallback(const Piece& p, std::string carrier) {
    SingularityRecord r;
    r.kind = SingularityRecord::Kind::Chain;
    r.carrier = std::move(carrier);
    for (const auto& id : p.ids) r.chain.push_back(p.self.at(id));
    std::sort(r.chain.begin(), r.chain.end());
    return r;
}

SingularityRecord recognize(Piece p, std::string carrier) {
    const int n = static_cast<int>(p.ids.size());
    SingularityRecord r;
    r.carrier = carrier;

    if (n == 1) {
        Rational s = p.self.at(p.ids[0]);
        if (s == Rational(-2)) {
            r.kind = SingularityRecord::Kind::A;
            r.index = 1;
            return r;
        }
        if (s.is_integer() && s <= Rational(-3)) {
            r.kind = SingularityRecord::Kind::Astar;
            r.index = static_cast<int>(-s.numerator()) - 1;
            return r;
        }
        return chain_fallback(p, std::move(carrier));
    }

    bool all_minus_two = std::all_of(p.ids.begin(), p.ids.end(), [&](const std::string& id) {
        return p.self.at(id) == Rational(-2);
    });
    bool simple_edges = std::all_of(p.edge.begin(), p.edge.end(), [](const auto& e) {
        return e.second == Rational(1);
    });
    int edge_count = static_cast<int>(p.edge.size());
    bool is_tree = simple_edges && edge_count == n - 1;

    std::vector<int> degrees;
    int branch_vertex = -1;
    for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(p.neighbors(p.ids[static_cast<std::size_t>(i)]).size());
        degrees.push_back(d);
        if (d >= 3) branch_vertex = i;
    }
    int num_branch = static_cast<int>(std::count_if(degrees.begin(), degrees.end(),
                                                    [](int d) { return d >= 3; }));

    if (all_minus_two && is_tree && num_branch == 0) {
        r.kind = SingularityRecord::Kind::A;
        r.index = n;
        return r;
    }
    if (all_minus_two && is_tree && num_branch == 1 &&
        degrees[static_cast<std::size_t>(branch_vertex)] == 3) {
        // Branch sizes from the unique degree-3 vertex.
        const std::string& center = p.ids[static_cast<std::size_t>(branch_vertex)];
        std::vector<int> sizes;
        for (const auto& start : p.neighbors(center)) {
            int len = 1;
            std::string prev = center, cur = start;
            for (;;) {
                auto nb = p.neighbors(cur);
                nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
                if (nb.size() != 1) break;
                prev = cur;
                cur = nb[0];
                ++len;
            }
            sizes.push_back(len);
        }
        std::sort(sizes.begin(), sizes.end());
        if (sizes.size() == 3 && sizes[0] == 1) {
            if (sizes[1] == 1) {
                r.kind = SingularityRecord::Kind::D;
                r.index = sizes[2] + 3;
                return r;
            }
            if (sizes[1] == 2 && sizes[2] >= 2 && sizes[2] <= 4) {
                r.kind = SingularityRecord::Kind::E;
                r.index = sizes[2] + 4;
                return r;
            }
        }
    }
    return chain_fallback(p, std::move(carrier));
}

}  // namespace

std::vector<SingularityRecord> classify_contracted_set(const FiberGraph& original,
                                                       const std::set<std::string>& pool) {
    for (const auto& id : pool) {
        if (!original.has_component(id)) {
            throw InputError("contracted id '" + id + "' not in original graph");
        }
    }
    // Split the pool into connected pieces of the original dual graph.
    std::set<std::string> todo = pool;
    std::vector<SingularityRecord> out;
    while (!todo.empty()) {
        std::vector<std::string> stack{*todo.begin()};
        todo.erase(todo.begin());
        std::vector<std::string> piece_ids;
        while (!stack.empty()) {
            std::string id = stack.back();
            stack.pop_back();
            piece_ids.push_back(id);
            for (const auto& n : original.neighbors(id)) {
                if (todo.erase(n)) stack.push_back(n);
            }
        }
        std::sort(piece_ids.begin(), piece_ids.end());

        Piece p;
        p.ids = piece_ids;
        for (const auto& id : piece_ids) {
            p.self[id] = original.component(id).self_intersection;
            for (const auto& other : piece_ids) {
                if (id < other) p.add_edge(id, other, original.edge_multiplicity(id, other));
            }
        }
        std::string carrier;
        for (const auto& id : piece_ids) {
            for (const auto& n : original.neighbors(id)) {
                if (!pool.count(n) && (carrier.empty() || n < carrier)) carrier = n;
            }
        }
        reduce_piece(p);
        if (p.ids.empty()) continue;  // smooth point
        out.push_back(recognize(std::move(p), std::move(carrier)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational threshold_a0(const FiberType& type) {
    switch (type.kind) {
        case FiberKind::II: return Rational(5, 6);
        case FiberKind::III: return Rational(3, 4);
        case FiberKind::IV: return Rational(2, 3);
        case FiberKind::Istar:
        case FiberKind::IIstar:
        case FiberKind::IIIstar:
        case FiberKind::IVstar:
            return Rational(0);
        case FiberKind::N:
            if (type.index == 1) return Rational(1, 2);
            throw InputError("no Weierstrass/intermediate transition for " + type.str());
        case FiberKind::I:
            throw InputError("no Weierstrass/intermediate transition for " + type.str());
    }
    throw InternalError("unhandled fiber kind");
}

ModelForm relative_model_form(const FiberType& type, const Rational& a) {
    if (a < Rational(0) || a > Rational(1)) {
        throw InputError("weight must lie in [0, 1], got " + a.str());
    }
    if (type.kind == FiberKind::I) return ModelForm::Weierstrass;
    if (type.kind == FiberKind::N && type.index != 1) return ModelForm::N0;
    Rational a0 = threshold_a0(type);
    if (a <= a0) return ModelForm::Weierstrass;
    if (a < Rational(1)) return ModelForm::Intermediate;
    return ModelForm::Twisted;
}

Rational delta_coefficient(const FiberType& type, ModelForm form) {
    if (form == ModelForm::Weierstrass || form == ModelForm::N0) return Rational(0);
    switch (type.kind) {
        case FiberKind::II: return Rational(4);
        case FiberKind::III: return Rational(2);
        case FiberKind::IV: return Rational(1);
        default: return Rational(0);
    }
}

Rational delta_coefficient(const FiberType& type, const Rational& a) {
    return delta_coefficient(type, relative_model_form(type, a));
}

std::vector<SingularityRecord> singularity_table(const FiberType& type, ModelForm regime) {
    Rational a;
    if (type.kind == FiberKind::I) {
        if (regime != ModelForm::Weierstrass) {
            throw InputError(type.str() + " has no " + model_form_str(regime) + " regime");
        }
        a = Rational(1, 2);
    } else if (type.kind == FiberKind::N && type.index != 1) {
        if (regime != ModelForm::N0) {
            throw InputError(type.str() + " has no " + model_form_str(regime) + " regime");
        }
        a = Rational(1, 2);
    } else {
        Rational a0 = threshold_a0(type);
        switch (regime) {
            case ModelForm::Weierstrass: a = a0; break;
            case ModelForm::Intermediate: a = (a0 + Rational(1)) / Rational(2); break;
            case ModelForm::Twisted: a = Rational(1); break;
            case ModelForm::N0:
                throw InputError(type.str() + " has no N0 regime");
        }
    }
    return run_relative_mmp(type, a).singularities;
}

}  // namespace elsurf
