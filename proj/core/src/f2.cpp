#include "cobar/f2.hpp"

#include <algorithm>

namespace cobar {

int BitVec::lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
        if (w_[k]) {
            int b = __builtin_ctzll(w_[k]);
            int idx = int(k) * 64 + b;
            return idx < n_ ? idx : -1;
        }
    }
    return -1;
}

namespace {

// Gaussian elimination over augmented rows. pivot_of[v] = row index or -1.
struct Elim {
    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    std::vector<int> pivot_col;  // per reduced row

    // Returns false on inconsistency.
    bool run(int nvars) {
        std::vector<int> pivot_row(nvars, -1);
        std::vector<BitVec> out;
        std::vector<bool> orhs;
        std::vector<int> opiv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            BitVec v = rows[r];
            bool b = rhs[r];
            for (;;) {
                int p = v.lowest();
                if (p < 0) break;
                int pr = pivot_row[p];
                if (pr < 0) {
                    pivot_row[p] = int(out.size());
                    out.push_back(v);
                    orhs.push_back(b);
                    opiv.push_back(p);
                    break;
                }
                v ^= out[pr];
                b = (b != orhs[pr]);
            }
            if (v.lowest() < 0 && b) return false;
        }
        rows = std::move(out);
        rhs = std::move(orhs);
        pivot_col = std::move(opiv);
        return true;
    }
};

}  // namespace

namespace {

// Order row indices so pivots descend; a reduced row's non-pivot bits all sit
// to the right of its pivot, so this order makes one back-substitution pass valid.
std::vector<int> by_pivot_desc(const std::vector<int>& pivot_col) {
    std::vector<int> order(pivot_col.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_col[a] > pivot_col[b]; });
    return order;
}

void back_substitute(const Elim& e, const std::vector<int>& order, BitVec& x,
                     const std::vector<bool>* rhs) {
    for (int i : order) {
        bool acc = rhs ? (*rhs)[i] : false;
        const BitVec& row = e.rows[i];
        int p = e.pivot_col[i];
        for (int j = p + 1; j < x.size(); ++j)
            if (row.get(j) && x.get(j)) acc = !acc;
        x.set(p, acc);
    }
}

}  // namespace

std::optional<BitVec> F2System::solve() const {
    Elim e;
    e.rows.reserve(rows_.size());
    for (auto& r : rows_) {
        e.rows.push_back(r.c);
        e.rhs.push_back(r.rhs);
    }
    if (!e.run(nvars_)) return std::nullopt;
    BitVec x(nvars_);
    back_substitute(e, by_pivot_desc(e.pivot_col), x, &e.rhs);
    return x;
}

std::vector<BitVec> F2System::kernel() const {
    Elim e;
    e.rows.reserve(rows_.size());
    for (auto& r : rows_) {
        e.rows.push_back(r.c);
        e.rhs.push_back(false);
    }
    e.run(nvars_);
    std::vector<bool> is_pivot(nvars_, false);
    for (int p : e.pivot_col) is_pivot[p] = true;
    auto order = by_pivot_desc(e.pivot_col);
    std::vector<BitVec> basis;
    for (int f = 0; f < nvars_; ++f) {
        if (is_pivot[f]) continue;
        BitVec x(nvars_);
        x.set(f, true);
        back_substitute(e, order, x, nullptr);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::pair<BitVec, std::vector<BitVec>>> F2System::solve_with_kernel() const {
    auto s = solve();
    if (!s) return std::nullopt;
    return std::make_pair(*s, kernel());
}

bool F2RowSpace::add(BitVec v) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    int p = v.lowest();
    if (p < 0) return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

BitVec F2RowSpace::reduce(BitVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    return v;
}

}  // namespace cobar
