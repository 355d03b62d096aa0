#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cobar {

// The two-element field. Matrix code below works on raw bits; this type
// exists for the scalar-level API and tests.
struct F2 {
    bool value = false;
    constexpr F2() = default;
    constexpr F2(bool v) : value(v) {}
    constexpr F2(int v) : value((v & 1) != 0) {}
    friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.value != b.value); }
    friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.value && b.value); }
    F2& operator+=(F2 o) {
        value = (value != o.value);
        return *this;
    }
    friend constexpr bool operator==(F2 a, F2 b) { return a.value == b.value; }
    friend constexpr bool operator!=(F2 a, F2 b) { return a.value != b.value; }
};

// Bit vector over F2 with xor as addition.
class BitVec {
public:
    BitVec() : n_(0) {}
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    int lowest() const;  // index of lowest set bit, -1 if none
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

// Dense F2 linear system A x = b, rows added incrementally. Solving yields
// the canonical solution (free variables zero, which is the lexicographically
// least assignment w.r.t. the variable order) and, on request, a kernel basis.
class F2System {
public:
    explicit F2System(int nvars) : nvars_(nvars) {}

    int vars() const { return nvars_; }
    void add_row(BitVec coeffs, bool rhs) { rows_.push_back({std::move(coeffs), rhs}); }

    // Canonical solution or nullopt if inconsistent.
    std::optional<BitVec> solve() const;
    // Basis of the homogeneous solution space.
    std::vector<BitVec> kernel() const;
    // Both at once (single elimination).
    std::optional<std::pair<BitVec, std::vector<BitVec>>> solve_with_kernel() const;

private:
    struct Row {
        BitVec c;
        bool rhs;
    };
    int nvars_;
    std::vector<Row> rows_;
};

// Row space utility: maintains a reduced basis; used for quotient-space
// representatives (chain maps modulo homotopy).
class F2RowSpace {
public:
    explicit F2RowSpace(int n) : n_(n) {}
    // Returns true if v was independent (and absorbs it).
    bool add(BitVec v);
    // Reduces v against the basis in place; returns residue.
    BitVec reduce(BitVec v) const;
    int dim() const { return int(basis_.size()); }
    const std::vector<BitVec>& basis() const { return basis_; }

private:
    int n_;
    std::vector<BitVec> basis_;  // each with distinct pivot (lowest set bit)
    std::vector<int> pivots_;
};

}  // namespace cobar
