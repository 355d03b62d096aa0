#include "cobar/interval_complex.hpp"

#include <algorithm>
#include <set>

namespace cobar {

int IntervalComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool IntervalComplex::has_entry(int src, int tgt) const {
    return std::binary_search(entries_.begin(), entries_.end(), std::make_pair(src, tgt));
}

IntervalComplex IntervalComplex::make_indexed(std::vector<Generator> gens,
                                              std::vector<std::pair<int, int>> entries) {
    IntervalComplex c;
    c.gens_ = std::move(gens);
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    c.entries_ = std::move(entries);
    c.out_.assign(c.gens_.size(), {});
    c.in_.assign(c.gens_.size(), {});
    for (auto& [s, t] : c.entries_) {
        if (s < 0 || t < 0 || s >= c.size() || t >= c.size())
            throw error("InvalidComplex", "entry index out of range");
        c.out_[s].push_back(t);
        c.in_[t].push_back(s);
    }
    for (std::size_t i = 0; i < c.gens_.size(); ++i) {
        if (!c.index_.emplace(c.gens_[i].id, int(i)).second)
            throw error("IdCollision", "duplicate generator id '" + c.gens_[i].id + "'");
    }
    Violation v = validate(c);
    if (!v.ok) throw error(v.kind, v.detail);
    return c;
}

IntervalComplex IntervalComplex::make(std::vector<Generator> gens,
                                      std::vector<std::pair<std::string, std::string>> entries) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!idx.emplace(gens[i].id, int(i)).second)
            throw error("IdCollision", "duplicate generator id '" + gens[i].id + "'");
    }
    std::vector<std::pair<int, int>> ie;
    ie.reserve(entries.size());
    for (auto& [s, t] : entries) {
        auto si = idx.find(s), ti = idx.find(t);
        if (si == idx.end() || ti == idx.end())
            throw error("InvalidComplex", "entry references unknown id '" +
                                              (si == idx.end() ? s : t) + "'");
        ie.emplace_back(si->second, ti->second);
    }
    return make_indexed(std::move(gens), std::move(ie));
}

Violation validate(const IntervalComplex& c) {
    for (auto& [s, t] : c.entries_) {
        const Generator &g = c.gens_[s], &h = c.gens_[t];
        if (h.degree != g.degree + 1)
            return {false, "DegreeMismatch",
                    "entry " + g.id + " -> " + h.id + " has degrees " +
                        std::to_string(g.degree) + " -> " + std::to_string(h.degree)};
        if (h.birth < g.birth)
            return {false, "BirthOrderViolation",
                    "entry " + g.id + " -> " + h.id + " has births " + g.birth.str() +
                        " -> " + h.birth.str()};
    }
    // d∘d over F2: for each source s and each second-step target u, the number
    // of length-2 paths s -> t -> u must be even.
    for (int s = 0; s < c.size(); ++s) {
        std::unordered_map<int, int> paths;
        for (int t : c.out_[s])
            for (int u : c.out_[t]) paths[u]++;
        for (auto& [u, k] : paths) {
            if (k % 2 != 0)
                return {false, "DifferentialNotSquareZero",
                        "d~2 has a nonzero component " + c.gens_[s].id + " -> " +
                            c.gens_[u].id};
        }
    }
    return {};
}

IntervalComplex translate(const IntervalComplex& c, const Rational& by) {
    std::vector<Generator> gens = c.generators();
    for (auto& g : gens) g.birth += by;
    return IntervalComplex::make_indexed(std::move(gens), c.entries());
}

IntervalComplex degree_shift(const IntervalComplex& c, int k) {
    std::vector<Generator> gens = c.generators();
    for (auto& g : gens) g.degree -= k;
    return IntervalComplex::make_indexed(std::move(gens), c.entries());
}

IntervalComplex direct_sum(const IntervalComplex& a, const IntervalComplex& b) {
    std::vector<Generator> gens = a.generators();
    for (auto& g : b.generators()) {
        if (a.index_of(g.id) >= 0)
            throw error("IdCollision", "direct_sum shares id '" + g.id + "'");
        gens.push_back(g);
    }
    std::vector<std::pair<int, int>> entries = a.entries();
    int off = a.size();
    for (auto& [s, t] : b.entries()) entries.emplace_back(s + off, t + off);
    return IntervalComplex::make_indexed(std::move(gens), std::move(entries));
}

}  // namespace cobar
