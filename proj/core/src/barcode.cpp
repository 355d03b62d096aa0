#include "cobar/barcode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cobar {

bool operator<(const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

void Barcode::canonicalize() { std::sort(bars.begin(), bars.end()); }

namespace {

// Column reduction over a fixed processing order. Columns are indexed by the
// killing generator and hold the positions of its differential sources; the
// pivot is the largest position. `skip` marks columns the clearing pass
// already knows reduce to zero.
struct Reducer {
    const IntervalComplex& f;
    std::vector<int> pos;        // gen index -> position in order
    std::vector<int> gen_at;     // position -> gen index
    std::vector<int> pivot_own;  // position -> column gen index or -1
    std::vector<char> killed, killer;

    explicit Reducer(const IntervalComplex& fc, const std::vector<int>& order) : f(fc) {
        int n = f.size();
        pos.assign(n, -1);
        gen_at = order;
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        pivot_own.assign(n, -1);
        killed.assign(n, 0);
        killer.assign(n, 0);
        cols.assign(n, {});
    }

    std::vector<std::vector<int>> cols;  // per gen: sorted source positions

    void load_column(int h) {
        std::vector<int> c;
        for (int g : f.d_in(h)) c.push_back(pos[g]);
        std::sort(c.begin(), c.end());
        cols[h] = std::move(c);
    }

    static std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(out));
        return out;
    }

    // Reduce column h; record the pairing if it ends nonzero.
    void reduce(int h, std::vector<std::pair<int, int>>& pairs) {
        auto& c = cols[h];
        while (!c.empty()) {
            int p = c.back();
            int owner = pivot_own[p];
            if (owner < 0) {
                pivot_own[p] = h;
                int g = gen_at[p];
                killed[g] = 1;
                killer[h] = 1;
                pairs.emplace_back(g, h);
                return;
            }
            c = sym_diff(c, cols[owner]);
        }
    }
};

std::vector<int> default_order(const IntervalComplex& f) {
    std::vector<int> order(f.size());
    for (int i = 0; i < f.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Generator &ga = f.gen(a), &gb = f.gen(b);
        if (ga.birth != gb.birth) return ga.birth < gb.birth;
        if (ga.degree != gb.degree) return ga.degree < gb.degree;
        return ga.id < gb.id;
    });
    return order;
}

Barcode bars_from(const IntervalComplex& f, const std::vector<std::pair<int, int>>& pairs,
                  const std::vector<char>& killed, const std::vector<char>& killer) {
    Barcode bc;
    for (auto& [g, h] : pairs) {
        const Rational &a = f.gen(g).birth, &b = f.gen(h).birth;
        if (a < b) bc.bars.push_back({f.gen(g).degree, a, ExtRational(b)});
        // equal births: length-zero bar, dropped
    }
    for (int i = 0; i < f.size(); ++i)
        if (!killed[i] && !killer[i])
            bc.bars.push_back({f.gen(i).degree, f.gen(i).birth, ExtRational::infinity()});
    bc.canonicalize();
    return bc;
}

}  // namespace

Barcode decompose_ordered(const IntervalComplex& f, const std::vector<int>& order) {
    Reducer red(f, order);
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < f.size(); ++p) {
        int h = order[p];
        red.load_column(h);
        red.reduce(h, pairs);
    }
    return bars_from(f, pairs, red.killed, red.killer);
}

Barcode decompose_reference(const IntervalComplex& f) {
    Violation v = validate(f);
    if (!v.ok) throw error("InvalidComplex", v.detail);
    return decompose_ordered(f, default_order(f));
}

Barcode decompose(const IntervalComplex& f) {
    Violation v = validate(f);
    if (!v.ok) throw error("InvalidComplex", v.detail);
    // Clearing: process source-degree blocks from high to low; a generator
    // paired as a pivot row in the higher block has a zero reduced column in
    // the lower one, so its column is skipped outright.
    std::vector<int> order = default_order(f);
    Reducer red(f, order);
    std::set<int> degrees;
    for (auto& g : f.generators()) degrees.insert(g.degree);
    std::vector<std::pair<int, int>> pairs;
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        int tgt_deg = *it;  // reduce columns of generators in this degree
        for (int p = 0; p < f.size(); ++p) {
            int h = order[p];
            if (f.gen(h).degree != tgt_deg) continue;
            if (red.killed[h]) continue;  // cleared
            red.load_column(h);
            red.reduce(h, pairs);
        }
    }
    return bars_from(f, pairs, red.killed, red.killer);
}

std::vector<std::pair<Rational, int>> endpoints(const Barcode& b) {
    std::vector<std::pair<Rational, int>> out;
    for (auto& bar : b.bars) {
        out.emplace_back(bar.birth, bar.degree);
        if (!bar.death.is_infinite()) out.emplace_back(bar.death.finite(), bar.degree + 1);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    return out;
}

ExtRational shortest_bar(const Barcode& b) {
    ExtRational best = ExtRational::infinity();
    for (auto& bar : b.bars) best = ExtRational::min(best, bar.length());
    return best;
}

std::string barcode_svg(const Barcode& b) {
    // Layout: bars sorted as stored, one row each, grouped by degree; infinite
    // bars run to the right margin with an open marker.
    Rational lo(0), hi(1);
    bool first = true;
    for (auto& bar : b.bars) {
        if (first) {
            lo = bar.birth;
            hi = bar.birth;
            first = false;
        }
        lo = Rational::min(lo, bar.birth);
        hi = Rational::max(hi, bar.birth);
        if (!bar.death.is_infinite()) hi = Rational::max(hi, bar.death.finite());
    }
    if (first) {
        lo = Rational(0);
        hi = Rational(1);
    }
    if (!(lo < hi)) hi = lo + Rational(1);
    Rational span = hi - lo;
    auto xcoord = [&](const Rational& v) {
        Rational t = (v - lo) / span;
        return 40.0 + 520.0 * double(t.num()) / double(t.den());
    };
    std::ostringstream svg;
    int rows = int(b.bars.size());
    int height = 40 + 18 * std::max(rows, 1);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"" << height
        << "\">\n";
    int row = 0, last_deg = 0;
    bool have_deg = false;
    for (auto& bar : b.bars) {
        if (!have_deg || bar.degree != last_deg) {
            svg << "  <text x=\"4\" y=\"" << (34 + 18 * row) << "\" font-size=\"11\">deg "
                << bar.degree << "</text>\n";
            last_deg = bar.degree;
            have_deg = true;
        }
        double x0 = xcoord(bar.birth);
        double x1 = bar.death.is_infinite() ? 585.0 : xcoord(bar.death.finite());
        int y = 30 + 18 * row;
        svg << "  <line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
            << "\" stroke=\"#1f6fb5\" stroke-width=\"4\"";
        if (bar.death.is_infinite()) svg << " stroke-dasharray=\"8,3\"";
        svg << "/>\n";
        ++row;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cobar
