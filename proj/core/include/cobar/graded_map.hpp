#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobar/f2.hpp"
#include "cobar/interval_complex.hpp"

namespace cobar {

// Degree-r map between interval complexes: an F2 matrix whose nonzero entries
// (g -> h) satisfy degree(h) = degree(g) + r and birth(h) >= birth(g). A chain
// map is a GradedMap of shift 0 commuting with the differentials.
class GradedMap {
public:
    GradedMap() = default;

    static GradedMap make(IntervalComplex src, IntervalComplex tgt, int shift,
                          std::vector<std::pair<std::string, std::string>> entries);
    static GradedMap make_indexed(IntervalComplex src, IntervalComplex tgt, int shift,
                                  std::vector<std::pair<int, int>> entries);
    static GradedMap zero(IntervalComplex src, IntervalComplex tgt, int shift) {
        return make_indexed(std::move(src), std::move(tgt), shift, {});
    }

    const IntervalComplex& source() const { return src_; }
    const IntervalComplex& target() const { return tgt_; }
    int shift() const { return shift_; }
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool has_entry(int s, int t) const;

    bool is_chain_map() const;  // shift 0 and commutes with differentials

private:
    IntervalComplex src_, tgt_;
    int shift_ = 0;
    std::vector<std::pair<int, int>> entries_;  // sorted, parity-reduced
};

using ChainMap = GradedMap;

// Structural equality of complexes (ids, degrees, births, differential).
bool same_complex(const IntervalComplex& a, const IntervalComplex& b);

// The differential of C as a shift-(+1) map C -> C.
GradedMap differential_map(const IntervalComplex& c);

// Identity chain map.
GradedMap identity_map(const IntervalComplex& c);

// second ∘ first over F2 (paths of even multiplicity cancel).
GradedMap compose(const GradedMap& second, const GradedMap& first);

// Entrywise sum; maps must share source, target and shift.
GradedMap add(const GradedMap& a, const GradedMap& b);

// d_tgt ∘ h + h ∘ d_src.
GradedMap boundary(const GradedMap& h);

// The canonical map tau_{c,d}(F): translate(F,c) -> translate(F,d) with the
// identity entry pattern. Requires c <= d (error "IllegalShiftOrder").
GradedMap tau(const IntervalComplex& f, const Rational& c, const Rational& d);

// Same entries between translated complexes. Entries must stay admissible.
GradedMap translate_map(const GradedMap& m, const Rational& src_by, const Rational& tgt_by);

struct HomotopyWitness {
    bool homotopic = false;
    GradedMap witness;  // shift-(r-1) map s with phi + psi = d s + s d
};

// True iff phi and psi are chain homotopic; returns a witness homotopy.
// Throws error("ShapeMismatch") unless the two maps share source, target and
// shift. Implemented as an F2 linear system over birth-admissible entries of s.
HomotopyWitness is_homotopic(const GradedMap& phi, const GradedMap& psi);

// --- linear-system toolkit over admissible entry lattices ---------------

// The lattice of admissible matrix entries for maps src -> tgt of one shift.
struct SlotSpace {
    const IntervalComplex* src = nullptr;
    const IntervalComplex* tgt = nullptr;
    int shift = 0;
    std::vector<std::pair<int, int>> slots;
    std::vector<int> lookup;  // dense src*T+tgt -> slot index or -1

    static SlotSpace admissible(const IntervalComplex& src, const IntervalComplex& tgt,
                                int shift);
    int size() const { return int(slots.size()); }
    int index(int i, int j) const {
        return lookup.empty() ? -1 : lookup[std::size_t(i) * tgt->size() + j];
    }
    BitVec pack(const GradedMap& m) const;              // entries must be admissible slots
    GradedMap unpack(const BitVec& v) const;            // build the map
};

// Builder for joint F2 systems whose unknowns are several maps (blocks of
// slots). Equation rows are indexed by (space id, source gen, target gen);
// operators toggle coefficients, right-hand sides toggle constants.
class LinSys {
public:
    int add_block(const SlotSpace* sp);  // returns block id
    int add_eq_space(int src_size, int tgt_size);

    // E(i,k) += [d_tgt ∘ M]  where M runs over block b and d is tgt's differential.
    void op_d_after(int eq, int block);
    // E(k,j) += [M ∘ d_src].
    void op_d_before(int eq, int block);
    // E(i,k) += [A ∘ M] for a fixed matrix A (entries over (tgt(M) -> Z) indices).
    void op_fixed_after(int eq, int block, const std::vector<std::pair<int, int>>& a);
    // E(k,j) += [M ∘ A] for a fixed matrix A (entries over (W -> src(M)) indices).
    void op_fixed_before(int eq, int block, const std::vector<std::pair<int, int>>& a);
    // E(i,j) += M (identity operator; useful with reinterpreted slot spaces).
    void op_identity(int eq, int block);
    // rhs toggle.
    void rhs(int eq, const std::vector<std::pair<int, int>>& entries);

    int nvars() const { return nvars_; }
    std::optional<BitVec> solve();
    std::vector<BitVec> kernel();
    BitVec block_part(const BitVec& full, int block) const;  // project to a block's slots

private:
    struct Block {
        const SlotSpace* sp;
        int offset;
    };
    std::vector<Block> blocks_;
    std::vector<std::pair<int, int>> eq_spaces_;  // (src_size, tgt_size)
    int nvars_ = 0;

    struct Row {
        BitVec c;
        bool rhs = false;
    };
    std::vector<Row> rows_;
    std::vector<long long> row_keys_;
    std::unordered_map<long long, int> row_of_;
    int row_for(int eq, int i, int k);
    void toggle(int eq, int i, int k, int var);
};

}  // namespace cobar
