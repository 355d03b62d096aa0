#include "cobar/cones.hpp"

#include <algorithm>

namespace cobar {

IntervalComplex cone(const GradedMap& phi) {
    if (phi.shift() != 0 || !phi.is_chain_map())
        throw error("InvalidMap", "cone requires a chain map (shift 0, commuting)");
    const IntervalComplex &x = phi.source(), &y = phi.target();
    std::vector<Generator> gens;
    gens.reserve(x.size() + y.size());
    for (auto& g : y.generators()) {
        Generator h = g;
        h.id = "t:" + g.id;
        gens.push_back(std::move(h));
    }
    for (auto& g : x.generators()) {
        Generator h = g;
        h.id = "s:" + g.id;
        h.degree -= 1;
        gens.push_back(std::move(h));
    }
    int off = y.size();
    std::vector<std::pair<int, int>> entries;
    for (auto& [s, t] : y.entries()) entries.emplace_back(s, t);
    for (auto& [s, t] : x.entries()) entries.emplace_back(s + off, t + off);
    for (auto& [s, t] : phi.entries()) entries.emplace_back(s + off, t);
    return IntervalComplex::make_indexed(std::move(gens), std::move(entries));
}

TwistedComplex TwistedComplex::make(std::vector<IntervalComplex> pieces,
                                    std::map<std::pair<int, int>, GradedMap> maps) {
    TwistedComplex t;
    int m = int(pieces.size());
    for (auto& [key, phi] : maps) {
        auto [i, j] = key;
        if (i < 0 || j <= i || j >= m)
            throw error("ShapeMismatch", "twisted map index (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") out of range");
        if (phi.shift() != i - j + 1)
            throw error("ShapeMismatch", "twisted map (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") must have shift " +
                                             std::to_string(i - j + 1));
        if (!same_complex(phi.source(), pieces[i]) || !same_complex(phi.target(), pieces[j]))
            throw error("ShapeMismatch", "twisted map (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") endpoints mismatch");
    }
    t.pieces_ = std::move(pieces);
    t.maps_ = std::move(maps);
    return t;
}

GradedMap TwistedComplex::map(int i, int j) const {
    auto it = maps_.find({i, j});
    if (it != maps_.end()) return it->second;
    return GradedMap::zero(pieces_[i], pieces_[j], i - j + 1);
}

McViolation validate_mc(const TwistedComplex& t) {
    int m = t.length();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            GradedMap lhs = compose(t.map(i, j), differential_map(t.piece(i)));
            for (int k = i + 1; k < j; ++k)
                lhs = add(lhs, compose(t.map(k, j), t.map(i, k)));
            lhs = add(lhs, compose(differential_map(t.piece(j)), t.map(i, j)));
            if (!lhs.is_zero()) {
                McViolation v;
                v.ok = false;
                v.i = i;
                v.j = j;
                v.generator = t.piece(i).gen(lhs.entries().front().first).id;
                v.detail = "MC relation fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ") on generator " + v.generator;
                return v;
            }
        }
    }
    return {};
}

IntervalComplex totalize(const TwistedComplex& t) {
    McViolation v = validate_mc(t);
    if (!v.ok) throw error("MCViolation", v.detail);
    int m = t.length();
    std::vector<Generator> gens;
    std::vector<int> offset(m, 0);
    for (int i = 0; i < m; ++i) {
        offset[i] = int(gens.size());
        for (auto& g : t.piece(i).generators()) {
            Generator h = g;
            h.id = "p" + std::to_string(i) + ":" + g.id;
            h.degree += i - (m - 1);
            gens.push_back(std::move(h));
        }
    }
    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < m; ++i)
        for (auto& [s, tg] : t.piece(i).entries())
            entries.emplace_back(s + offset[i], tg + offset[i]);
    for (auto& [key, phi] : t.maps()) {
        auto [i, j] = key;
        for (auto& [s, tg] : phi.entries()) entries.emplace_back(s + offset[i], tg + offset[j]);
    }
    return IntervalComplex::make_indexed(std::move(gens), std::move(entries));
}

namespace {

// Identifiers of piece generators inside an accumulated nest.
using IdMap = std::vector<std::vector<std::string>>;

IdMap fresh_ids(const TwistedComplex& t) {
    IdMap ids(t.length());
    for (int i = 0; i < t.length(); ++i)
        for (auto& g : t.piece(i).generators()) ids[i].push_back(g.id);
    return ids;
}

void prefix_all(IdMap& ids, int upto, const std::string& pre) {
    for (int i = 0; i <= upto; ++i)
        for (auto& s : ids[i]) s = pre + s;
}

}  // namespace

Reassociation reassociate(const TwistedComplex& t) {
    McViolation v = validate_mc(t);
    if (!v.ok) throw error("MCViolation", v.detail);
    int m = t.length();
    if (m == 0) throw error("ShapeMismatch", "reassociate needs at least one piece");

    // Left nesting: Cone(Cone(...Cone(G_0 -> G_1)...) -> G_{m-1}).
    IntervalComplex left = t.piece(0);
    {
        IdMap ids = fresh_ids(t);
        for (int j = 1; j < m; ++j) {
            std::vector<std::pair<std::string, std::string>> xi;
            for (int i = 0; i < j; ++i) {
                GradedMap phi = t.map(i, j);
                for (auto& [s, tg] : phi.entries())
                    xi.emplace_back(ids[i][s], t.piece(j).gen(tg).id);
            }
            GradedMap xi_map = GradedMap::make(left, t.piece(j), 0, std::move(xi));
            left = cone(xi_map);
            prefix_all(ids, j - 1, "s:");
            for (auto& s : ids[j]) s = "t:" + s;
        }
    }

    // Right nesting: Cone(G_0[.] -> Cone(G_1[.] -> ... Cone(G_{m-2}[.] -> G_{m-1}))).
    IntervalComplex right = t.piece(m - 1);
    {
        IdMap ids = fresh_ids(t);
        for (int i = m - 2; i >= 0; --i) {
            IntervalComplex src = degree_shift(t.piece(i), m - 2 - i);
            std::vector<std::pair<std::string, std::string>> eta;
            for (int j = i + 1; j < m; ++j) {
                GradedMap phi = t.map(i, j);
                for (auto& [s, tg] : phi.entries())
                    eta.emplace_back(t.piece(i).gen(s).id, ids[j][tg]);
            }
            GradedMap eta_map = GradedMap::make(src, right, 0, std::move(eta));
            right = cone(eta_map);
            for (int j = i + 1; j < m; ++j)
                for (auto& s : ids[j]) s = "t:" + s;
            for (auto& s : ids[i]) s = "s:" + s;
        }
    }

    Reassociation out;
    out.left_nested = std::move(left);
    out.right_nested = std::move(right);
    out.barcodes_equal = decompose(out.left_nested) == decompose(out.right_nested);
    return out;
}

GradedMap homotopy_to_chainmap(const GradedMap& psi, const GradedMap& s) {
    if (psi.shift() != 0 || !psi.is_chain_map())
        throw error("InvalidMap", "psi must be a chain map");
    if (s.shift() != -1 || !same_complex(s.source(), psi.source()) ||
        !same_complex(s.target(), psi.target()))
        throw error("ShapeMismatch", "homotopy must go source -> target with shift -1");
    if (!(add(boundary(s), psi).is_zero()))
        throw error("NotNullHomotopy", "s is not a null homotopy of psi");
    IntervalComplex c = cone(psi);
    IntervalComplex x1 = degree_shift(psi.source(), 1);
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < x1.size(); ++i)
        e.emplace_back(x1.gen(i).id, "s:" + x1.gen(i).id);
    for (auto& [i, j] : s.entries())
        e.emplace_back(psi.source().gen(i).id, "t:" + psi.target().gen(j).id);
    return GradedMap::make(std::move(x1), std::move(c), 0, std::move(e));
}

GradedMap chainmap_to_homotopy(const GradedMap& psi, const GradedMap& eta) {
    IntervalComplex c = cone(psi);
    if (!same_complex(eta.target(), c) || eta.shift() != 0 ||
        !same_complex(eta.source(), degree_shift(psi.source(), 1)))
        throw error("ShapeMismatch", "eta must be a chain map X[1] -> cone(psi)");
    if (!eta.is_chain_map()) throw error("NotNullHomotopy", "eta is not a chain map");
    const IntervalComplex &x = psi.source(), &y = psi.target();
    std::vector<std::pair<int, int>> s_entries;
    for (auto& [i, j] : eta.entries()) {
        const std::string& tid = c.gen(j).id;
        if (tid.rfind("s:", 0) == 0) {
            if (tid.substr(2) != x.gen(i).id)
                throw error("NotNullHomotopy", "projection of eta to X[1] is not the identity");
        } else {
            int yj = y.index_of(tid.substr(2));
            s_entries.emplace_back(i, yj);
        }
    }
    // projection must hit every generator exactly once; count the s: entries
    std::size_t id_hits = eta.entries().size() - s_entries.size();
    if (int(id_hits) != x.size())
        throw error("NotNullHomotopy", "projection of eta to X[1] is not the identity");
    GradedMap s = GradedMap::make_indexed(x, y, -1, std::move(s_entries));
    if (!(add(boundary(s), psi).is_zero()))
        throw error("NotNullHomotopy", "extracted map is not a null homotopy of psi");
    return s;
}

}  // namespace cobar
