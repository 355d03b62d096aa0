#include "cobar/graded_map.hpp"

#include <algorithm>
#include <map>

namespace cobar {

namespace {

// Sort and cancel pairs mod 2.
std::vector<std::pair<int, int>> parity_reduce(std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(v[i]);
        i = j;
    }
    return out;
}

}  // namespace

GradedMap GradedMap::make_indexed(IntervalComplex src, IntervalComplex tgt, int shift,
                                  std::vector<std::pair<int, int>> entries) {
    GradedMap m;
    m.shift_ = shift;
    m.entries_ = parity_reduce(std::move(entries));
    for (auto& [s, t] : m.entries_) {
        if (s < 0 || s >= src.size() || t < 0 || t >= tgt.size())
            throw error("InvalidMap", "entry index out of range");
        const Generator &g = src.gen(s), &h = tgt.gen(t);
        if (h.degree != g.degree + shift)
            throw error("InvalidMap", "entry " + g.id + " -> " + h.id +
                                          " violates the degree shift " + std::to_string(shift));
        if (h.birth < g.birth)
            throw error("InvalidMap", "entry " + g.id + " -> " + h.id +
                                          " decreases births " + g.birth.str() + " -> " +
                                          h.birth.str());
    }
    m.src_ = std::move(src);
    m.tgt_ = std::move(tgt);
    return m;
}

GradedMap GradedMap::make(IntervalComplex src, IntervalComplex tgt, int shift,
                          std::vector<std::pair<std::string, std::string>> entries) {
    std::vector<std::pair<int, int>> ie;
    ie.reserve(entries.size());
    for (auto& [s, t] : entries) {
        int si = src.index_of(s), ti = tgt.index_of(t);
        if (si < 0 || ti < 0)
            throw error("InvalidMap", "entry references unknown id '" + (si < 0 ? s : t) + "'");
        ie.emplace_back(si, ti);
    }
    return make_indexed(std::move(src), std::move(tgt), shift, std::move(ie));
}

bool GradedMap::has_entry(int s, int t) const {
    return std::binary_search(entries_.begin(), entries_.end(), std::make_pair(s, t));
}

bool GradedMap::is_chain_map() const {
    if (shift_ != 0) return false;
    return add(compose(differential_map(tgt_), *this), compose(*this, differential_map(src_)))
        .is_zero();
}

bool same_complex(const IntervalComplex& a, const IntervalComplex& b) {
    if (a.size() != b.size() || a.entries() != b.entries()) return false;
    for (int i = 0; i < a.size(); ++i) {
        const Generator &g = a.gen(i), &h = b.gen(i);
        if (g.id != h.id || g.degree != h.degree || g.birth != h.birth) return false;
    }
    return true;
}

GradedMap differential_map(const IntervalComplex& c) {
    return GradedMap::make_indexed(c, c, 1, c.entries());
}

GradedMap identity_map(const IntervalComplex& c) {
    std::vector<std::pair<int, int>> e;
    e.reserve(c.size());
    for (int i = 0; i < c.size(); ++i) e.emplace_back(i, i);
    return GradedMap::make_indexed(c, c, 0, std::move(e));
}

GradedMap compose(const GradedMap& second, const GradedMap& first) {
    if (!same_complex(second.source(), first.target()))
        throw error("ShapeMismatch", "compose: inner complexes differ");
    std::vector<std::vector<int>> out(first.source().size());
    for (auto& [i, j] : first.entries()) out[i].push_back(j);
    std::vector<std::vector<int>> nxt(second.source().size());
    for (auto& [j, k] : second.entries()) nxt[j].push_back(k);
    std::vector<std::pair<int, int>> prod;
    for (int i = 0; i < int(out.size()); ++i)
        for (int j : out[i])
            for (int k : nxt[j]) prod.emplace_back(i, k);
    return GradedMap::make_indexed(first.source(), second.target(),
                                   first.shift() + second.shift(), std::move(prod));
}

GradedMap add(const GradedMap& a, const GradedMap& b) {
    if (a.shift() != b.shift() || !same_complex(a.source(), b.source()) ||
        !same_complex(a.target(), b.target()))
        throw error("ShapeMismatch", "add: maps do not share shape");
    std::vector<std::pair<int, int>> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return GradedMap::make_indexed(a.source(), a.target(), a.shift(), std::move(e));
}

GradedMap boundary(const GradedMap& h) {
    return add(compose(differential_map(h.target()), h),
               compose(h, differential_map(h.source())));
}

GradedMap tau(const IntervalComplex& f, const Rational& c, const Rational& d) {
    if (d < c) throw error("IllegalShiftOrder", "tau requires c <= d");
    IntervalComplex fc = translate(f, c), fd = translate(f, d);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < f.size(); ++i) e.emplace_back(i, i);
    return GradedMap::make_indexed(std::move(fc), std::move(fd), 0, std::move(e));
}

GradedMap translate_map(const GradedMap& m, const Rational& src_by, const Rational& tgt_by) {
    return GradedMap::make_indexed(translate(m.source(), src_by), translate(m.target(), tgt_by),
                                   m.shift(), m.entries());
}

HomotopyWitness is_homotopic(const GradedMap& phi, const GradedMap& psi) {
    if (phi.shift() != psi.shift() || !same_complex(phi.source(), psi.source()) ||
        !same_complex(phi.target(), psi.target()))
        throw error("ShapeMismatch", "is_homotopic: maps do not share shape");
    const IntervalComplex &x = phi.source(), &y = phi.target();
    SlotSpace hs = SlotSpace::admissible(x, y, phi.shift() - 1);
    LinSys sys;
    int hb = sys.add_block(&hs);
    int eq = sys.add_eq_space(x.size(), y.size());
    sys.op_d_after(eq, hb);
    sys.op_d_before(eq, hb);
    sys.rhs(eq, phi.entries());
    sys.rhs(eq, psi.entries());
    auto sol = sys.solve();
    HomotopyWitness w;
    if (!sol) {
        w.homotopic = false;
        w.witness = GradedMap::zero(x, y, phi.shift() - 1);
        return w;
    }
    w.homotopic = true;
    w.witness = hs.unpack(sys.block_part(*sol, hb));
    return w;
}

SlotSpace SlotSpace::admissible(const IntervalComplex& src, const IntervalComplex& tgt,
                                int shift) {
    SlotSpace sp;
    sp.src = &src;
    sp.tgt = &tgt;
    sp.shift = shift;
    sp.lookup.assign(std::size_t(src.size()) * tgt.size(), -1);
    for (int i = 0; i < src.size(); ++i) {
        for (int j = 0; j < tgt.size(); ++j) {
            const Generator &g = src.gen(i), &h = tgt.gen(j);
            if (h.degree == g.degree + shift && !(h.birth < g.birth)) {
                sp.lookup[std::size_t(i) * tgt.size() + j] = int(sp.slots.size());
                sp.slots.emplace_back(i, j);
            }
        }
    }
    return sp;
}

BitVec SlotSpace::pack(const GradedMap& m) const {
    BitVec v(size());
    for (auto& [i, j] : m.entries()) {
        int s = index(i, j);
        if (s < 0) throw error("ShapeMismatch", "map entry outside admissible lattice");
        v.flip(s);
    }
    return v;
}

GradedMap SlotSpace::unpack(const BitVec& v) const {
    std::vector<std::pair<int, int>> e;
    for (int s = 0; s < size(); ++s)
        if (v.get(s)) e.push_back(slots[s]);
    return GradedMap::make_indexed(*src, *tgt, shift, std::move(e));
}

int LinSys::add_block(const SlotSpace* sp) {
    if (!rows_.empty())
        throw error("ShapeMismatch", "all blocks must be added before equations");
    blocks_.push_back({sp, nvars_});
    nvars_ += sp->size();
    return int(blocks_.size()) - 1;
}

int LinSys::add_eq_space(int src_size, int tgt_size) {
    eq_spaces_.emplace_back(src_size, tgt_size);
    return int(eq_spaces_.size()) - 1;
}

int LinSys::row_for(int eq, int i, int k) {
    long long key = (long long(eq) << 42) | (long long(i) << 21) | k;
    auto it = row_of_.find(key);
    if (it != row_of_.end()) return it->second;
    int id = int(rows_.size());
    rows_.push_back({BitVec(0), false});
    row_keys_.push_back(key);
    row_of_.emplace(key, id);
    return id;
}

void LinSys::toggle(int eq, int i, int k, int var) {
    int r = row_for(eq, i, k);
    if (rows_[r].c.size() == 0) rows_[r].c = BitVec(nvars_);
    rows_[r].c.flip(var);
}

void LinSys::op_d_after(int eq, int block) {
    const Block& b = blocks_[block];
    for (int s = 0; s < b.sp->size(); ++s) {
        auto [i, j] = b.sp->slots[s];
        for (int k : b.sp->tgt->d_out(j)) toggle(eq, i, k, b.offset + s);
    }
}

void LinSys::op_d_before(int eq, int block) {
    const Block& b = blocks_[block];
    for (int s = 0; s < b.sp->size(); ++s) {
        auto [i, j] = b.sp->slots[s];
        for (int k : b.sp->src->d_in(i)) toggle(eq, k, j, b.offset + s);
    }
}

void LinSys::op_fixed_after(int eq, int block, const std::vector<std::pair<int, int>>& a) {
    const Block& b = blocks_[block];
    std::vector<std::vector<int>> nxt(b.sp->tgt->size());
    for (auto& [j, k] : a) nxt[j].push_back(k);
    for (int s = 0; s < b.sp->size(); ++s) {
        auto [i, j] = b.sp->slots[s];
        for (int k : nxt[j]) toggle(eq, i, k, b.offset + s);
    }
}

void LinSys::op_fixed_before(int eq, int block, const std::vector<std::pair<int, int>>& a) {
    const Block& b = blocks_[block];
    std::vector<std::vector<int>> prv(b.sp->src->size());
    for (auto& [k, i] : a) prv[i].push_back(k);
    for (int s = 0; s < b.sp->size(); ++s) {
        auto [i, j] = b.sp->slots[s];
        for (int k : prv[i]) toggle(eq, k, j, b.offset + s);
    }
}

void LinSys::op_identity(int eq, int block) {
    const Block& b = blocks_[block];
    for (int s = 0; s < b.sp->size(); ++s) {
        auto [i, j] = b.sp->slots[s];
        toggle(eq, i, j, b.offset + s);
    }
}

void LinSys::rhs(int eq, const std::vector<std::pair<int, int>>& entries) {
    for (auto& [i, k] : entries) {
        int r = row_for(eq, i, k);
        if (rows_[r].c.size() == 0) rows_[r].c = BitVec(nvars_);
        rows_[r].rhs = !rows_[r].rhs;
    }
}

std::optional<BitVec> LinSys::solve() {
    F2System sys(nvars_);
    for (auto& r : rows_)
        sys.add_row(r.c.size() == 0 ? BitVec(nvars_) : r.c, r.rhs);
    return sys.solve();
}

std::vector<BitVec> LinSys::kernel() {
    F2System sys(nvars_);
    for (auto& r : rows_)
        sys.add_row(r.c.size() == 0 ? BitVec(nvars_) : r.c, r.rhs);
    return sys.kernel();
}

BitVec LinSys::block_part(const BitVec& full, int block) const {
    const Block& b = blocks_[block];
    BitVec v(b.sp->size());
    for (int s = 0; s < b.sp->size(); ++s)
        if (full.get(b.offset + s)) v.set(s, true);
    return v;
}

}  // namespace cobar
