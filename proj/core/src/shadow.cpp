#include "cobar/shadow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cobar {

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& z, const Point& a, const Point& b) {
    if (cross(a, b, z) != Rational(0)) return false;
    return Rational::min(a.x, b.x) <= z.x && z.x <= Rational::max(a.x, b.x) &&
           Rational::min(a.y, b.y) <= z.y && z.y <= Rational::max(a.y, b.y);
}

struct Dir {
    Rational dx, dy;
};

// CCW order starting at the +x axis.
bool angle_less(const Dir& a, const Dir& b) {
    auto half = [](const Dir& d) {
        if (d.dy != Rational(0)) return d.dy > Rational(0) ? 0 : 1;
        return d.dx > Rational(0) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cr = a.dx * b.dy - a.dy * b.dx;
    return cr > Rational(0);
}

}  // namespace

ShadowRegion ShadowRegion::make(std::vector<std::vector<Point>> curves,
                                std::vector<int> ends_minus, std::vector<int> ends_plus) {
    auto check_heights = [](std::vector<int>& h, const char* side) {
        std::vector<int> s = h;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < int(s.size()); ++i)
            if (s[i] != i)
                throw error("DegenerateArrangement",
                            std::string("declared ") + side + " heights must be exactly 0..m-1");
        h = s;
    };
    check_heights(ends_minus, "minus");
    check_heights(ends_plus, "plus");
    for (auto& c : curves) {
        if (c.size() < 2)
            throw error("DegenerateArrangement", "curve with fewer than two vertices");
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            const Point &a = c[k], &b = c[k + 1];
            if (a == b) throw error("DegenerateArrangement", "zero-length curve segment");
            // Any segment reaching outside the band must be horizontal at a
            // declared end height of that side.
            Rational lo = Rational::min(a.x, b.x), hi = Rational::max(a.x, b.x);
            auto outside_ok = [&](const std::vector<int>& heights) {
                if (a.y != b.y) return false;
                for (int hgt : heights)
                    if (a.y == Rational(hgt)) return true;
                return false;
            };
            if (lo < Rational(-1) && !outside_ok(ends_minus))
                throw error("DegenerateArrangement",
                            "segment left of the band must be horizontal at a minus-end height");
            if (Rational(1) < hi && !outside_ok(ends_plus))
                throw error("DegenerateArrangement",
                            "segment right of the band must be horizontal at a plus-end height");
        }
    }
    // Every declared end height must be realized by a horizontal germ at the
    // band edge.
    auto realized = [&](const Rational& x_edge, int h) {
        Point edge{x_edge, Rational(h)};
        for (auto& c : curves)
            for (std::size_t k = 0; k + 1 < c.size(); ++k)
                if (c[k].y == Rational(h) && c[k + 1].y == Rational(h) &&
                    on_segment(edge, c[k], c[k + 1]))
                    return true;
        return false;
    };
    for (int h : ends_minus)
        if (!realized(Rational(-1), h))
            throw error("DegenerateArrangement",
                        "minus end height " + std::to_string(h) + " has no ray germ at s=-1");
    for (int h : ends_plus)
        if (!realized(Rational(1), h))
            throw error("DegenerateArrangement",
                        "plus end height " + std::to_string(h) + " has no ray germ at s=+1");
    ShadowRegion r;
    r.curves_ = std::move(curves);
    r.ends_minus_ = std::move(ends_minus);
    r.ends_plus_ = std::move(ends_plus);
    return r;
}

std::vector<std::pair<Point, Point>> region_segments(const ShadowRegion& r) {
    std::vector<std::pair<Point, Point>> segs;
    for (auto& c : r.curves())
        for (std::size_t k = 0; k + 1 < c.size(); ++k) segs.emplace_back(c[k], c[k + 1]);
    return segs;
}

Arrangement::Arrangement(std::vector<std::pair<Point, Point>> segments) {
    // 1. split every segment at intersections with every other
    struct Cut {
        Rational t;  // parameter along the segment
        friend bool operator<(const Cut& a, const Cut& b) { return a.t < b.t; }
    };
    int n = int(segments.size());
    std::vector<std::set<Rational>> cuts(n);
    for (int i = 0; i < n; ++i) {
        cuts[i].insert(Rational(0));
        cuts[i].insert(Rational(1));
    }
    auto param = [](const std::pair<Point, Point>& s, const Point& z) {
        Rational dx = s.second.x - s.first.x, dy = s.second.y - s.first.y;
        if (dx != Rational(0)) return (z.x - s.first.x) / dx;
        return (z.y - s.first.y) / dy;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Point &a = segments[i].first, &b = segments[i].second;
            const Point &p = segments[j].first, &q = segments[j].second;
            Rational d1x = b.x - a.x, d1y = b.y - a.y;
            Rational d2x = q.x - p.x, d2y = q.y - p.y;
            Rational den = d1x * d2y - d1y * d2x;
            if (den != Rational(0)) {
                Rational t = ((p.x - a.x) * d2y - (p.y - a.y) * d2x) / den;
                Rational u = ((p.x - a.x) * d1y - (p.y - a.y) * d1x) / den;
                if (Rational(0) <= t && t <= Rational(1) && Rational(0) <= u &&
                    u <= Rational(1)) {
                    cuts[i].insert(t);
                    cuts[j].insert(u);
                }
            } else if (cross(a, b, p) == Rational(0)) {
                // collinear: cut each at the other's endpoints (clamped)
                for (const Point* z : {&p, &q}) {
                    Rational t = param(segments[i], *z);
                    if (Rational(0) < t && t < Rational(1)) cuts[i].insert(t);
                }
                for (const Point* z : {&a, &b}) {
                    Rational u = param(segments[j], *z);
                    if (Rational(0) < u && u < Rational(1)) cuts[j].insert(u);
                }
            }
        }
    }
    std::map<Point, int> vid;
    auto vertex = [&](const Point& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = int(verts_.size());
        verts_.push_back(p);
        vid.emplace(p, id);
        return id;
    };
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i) {
        const Point &a = segments[i].first, &b = segments[i].second;
        std::vector<Point> pts;
        for (auto& t : cuts[i])
            pts.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            if (pts[k] == pts[k + 1]) continue;
            int u = vertex(pts[k]), v = vertex(pts[k + 1]);
            edge_set.insert({std::min(u, v), std::max(u, v)});  // merges overlaps
        }
    }
    edges_.assign(edge_set.begin(), edge_set.end());

    // 2. half-edge structure: sorted outgoing edges per vertex
    int ne = int(edges_.size());
    std::vector<std::vector<int>> out(verts_.size());  // directed edge ids; e and e+ne
    auto he_from = [&](int he) { return he < ne ? edges_[he].first : edges_[he - ne].second; };
    auto he_to = [&](int he) { return he < ne ? edges_[he].second : edges_[he - ne].first; };
    for (int e = 0; e < ne; ++e) {
        out[edges_[e].first].push_back(e);
        out[edges_[e].second].push_back(e + ne);
    }
    for (auto& lst : out) {
        std::sort(lst.begin(), lst.end(), [&](int h1, int h2) {
            const Point &o = verts_[he_from(h1)], &p1 = verts_[he_to(h1)],
                        &p2 = verts_[he_to(h2)];
            return angle_less({p1.x - o.x, p1.y - o.y}, {p2.x - o.x, p2.y - o.y});
        });
    }
    std::vector<int> pos(2 * ne);  // position of each directed edge in its source list
    for (auto& lst : out)
        for (int k = 0; k < int(lst.size()); ++k) pos[lst[k]] = k;

    auto twin = [&](int he) { return he < ne ? he + ne : he - ne; };
    // next half-edge in the face walk (interior on the left): rotate the twin
    // clockwise by one at the head vertex.
    auto next = [&](int he) {
        int tw = twin(he);
        int v = he_to(he);
        const auto& lst = out[v];
        int k = pos[tw];
        return lst[(k + int(lst.size()) - 1) % int(lst.size())];
    };

    // 3. trace loops
    std::vector<char> seen(2 * ne, 0);
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (seen[h0]) continue;
        Loop loop;
        Rational area2(0);
        int h = h0;
        do {
            seen[h] = 1;
            int u = he_from(h), v = he_to(h);
            loop.verts.push_back(u);
            area2 += verts_[u].x * verts_[v].y - verts_[v].x * verts_[u].y;
            h = next(h);
        } while (h != h0);
        loop.area2 = area2;
        loops_.push_back(std::move(loop));
    }

    // 4. per connected component, exclude the unbounded-side cycle (the
    //    unique most-negative loop)
    std::vector<int> comp(verts_.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = int(i);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto& [u, v] : edges_) comp[find(u)] = find(v);
    std::map<int, int> best;  // component root -> loop index with minimal area
    for (int li = 0; li < int(loops_.size()); ++li) {
        int root = find(loops_[li].verts.front());
        auto it = best.find(root);
        if (it == best.end() || loops_[li].area2 < loops_[it->second].area2) best[root] = li;
    }
    for (auto& [root, li] : best) loops_[li].included = false;
}

Rational Arrangement::bounded_area() const {
    Rational acc(0);
    for (auto& l : loops_)
        if (l.included) acc += l.area2;
    return acc / Rational(2);
}

bool Arrangement::point_on_curves(const Point& z) const {
    for (auto& [u, v] : edges_)
        if (on_segment(z, verts_[u], verts_[v])) return true;
    return false;
}

bool Arrangement::point_in_bounded(const Point& z) const {
    // Count signed crossings over included loops; bounded regions score 1.
    long long score = 0;
    for (auto& l : loops_) {
        if (!l.included) continue;
        if (l.area2 == Rational(0)) continue;
        // even-odd parity of an upward ray from z against the loop's edges
        bool inside = false;
        int m = int(l.verts.size());
        for (int k = 0; k < m; ++k) {
            const Point &p = verts_[l.verts[k]], &q = verts_[l.verts[(k + 1) % m]];
            bool pa = p.y > z.y, qa = q.y > z.y;
            if (pa == qa) continue;
            // x coordinate where the edge crosses the horizontal through z
            Rational xi = p.x + (q.x - p.x) * (z.y - p.y) / (q.y - p.y);
            if (xi > z.x) inside = !inside;
        }
        if (inside) score += (l.area2 > Rational(0)) ? 1 : -1;
    }
    return score >= 1;
}

Rational shadow_area(const ShadowRegion& r) {
    Arrangement arr(region_segments(r));
    return arr.bounded_area();
}

namespace {

Rational fence_gain(const ShadowRegion& r, const Rational& x, int height, const Rational& base) {
    if (height == 0) return Rational(0);
    auto segs = region_segments(r);
    segs.emplace_back(Point{x, Rational(0)}, Point{x, Rational(height)});
    Arrangement arr(std::move(segs));
    return arr.bounded_area() - base;
}

}  // namespace

Rational lower_envelope_integral(const ShadowRegion& r) {
    // Lower envelope of all segments clipped to the band; vertical segments
    // carry no measure and are skipped.
    struct Lin {
        Rational x0, x1;  // clipped span
        Rational y0, y1;  // values at x0, x1
        Rational at(const Rational& x) const {
            if (x1 == x0) return y0;
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    };
    std::vector<Lin> lins;
    std::set<Rational> xs;
    xs.insert(Rational(-1));
    xs.insert(Rational(1));
    for (auto& [a0, b0] : region_segments(r)) {
        Point a = a0, b = b0;
        if (a.x == b.x) continue;
        if (b.x < a.x) std::swap(a, b);
        Rational lo = Rational::max(a.x, Rational(-1)), hi = Rational::min(b.x, Rational(1));
        if (!(lo < hi)) continue;
        Lin l;
        l.x0 = lo;
        l.x1 = hi;
        Rational slope = (b.y - a.y) / (b.x - a.x);
        l.y0 = a.y + slope * (lo - a.x);
        l.y1 = a.y + slope * (hi - a.x);
        xs.insert(lo);
        xs.insert(hi);
        lins.push_back(l);
    }
    // crossing x's
    for (std::size_t i = 0; i < lins.size(); ++i) {
        for (std::size_t j = i + 1; j < lins.size(); ++j) {
            Rational lo = Rational::max(lins[i].x0, lins[j].x0);
            Rational hi = Rational::min(lins[i].x1, lins[j].x1);
            if (!(lo < hi)) continue;
            Rational ai = (lins[i].y1 - lins[i].y0) / (lins[i].x1 - lins[i].x0);
            Rational aj = (lins[j].y1 - lins[j].y0) / (lins[j].x1 - lins[j].x0);
            if (ai == aj) continue;
            Rational bi = lins[i].y0 - ai * lins[i].x0;
            Rational bj = lins[j].y0 - aj * lins[j].x0;
            Rational xc = (bj - bi) / (ai - aj);
            if (lo < xc && xc < hi) xs.insert(xc);
        }
    }
    std::vector<Rational> bps(xs.begin(), xs.end());
    Rational acc(0);
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const Rational &x0 = bps[k], &x1 = bps[k + 1];
        Rational xm = (x0 + x1) / Rational(2);
        bool have = false;
        Rational besty0, besty1, bestym;
        for (auto& l : lins) {
            if (l.x0 <= x0 && x1 <= l.x1) {
                Rational ym = l.at(xm);
                if (!have || ym < bestym) {
                    have = true;
                    bestym = ym;
                    besty0 = l.at(x0);
                    besty1 = l.at(x1);
                }
            }
        }
        if (!have)
            throw error("BoundaryNotChainDecomposable",
                        "band fiber at s=" + xm.str() + " misses the region");
        acc += (besty0 + besty1) / Rational(2) * (x1 - x0);
    }
    return acc;
}

EndShifts end_shifts(const ShadowRegion& r) {
    Rational base = shadow_area(r);
    EndShifts out;
    int m = int(r.ends_minus().size()), n = int(r.ends_plus().size());
    for (int i = 0; i < m; ++i)
        out.c_minus.push_back(fence_gain(r, Rational(-1), i, base));
    Rational lower = lower_envelope_integral(r);
    for (int j = 0; j < n; ++j)
        out.c_plus.push_back(fence_gain(r, Rational(1), j, base) - lower);
    for (std::size_t k = 1; k < out.c_minus.size(); ++k)
        if (out.c_minus[k] < out.c_minus[k - 1])
            throw error("BoundaryNotChainDecomposable", "c_i sequence not non-decreasing");
    for (std::size_t k = 1; k < out.c_plus.size(); ++k)
        if (out.c_plus[k] < out.c_plus[k - 1])
            throw error("BoundaryNotChainDecomposable", "c'_j sequence not non-decreasing");
    return out;
}

Rational StepFunction::integral() const {
    Rational acc(0);
    for (std::size_t k = 0; k < values.size(); ++k) acc += values[k] * (cuts[k + 1] - cuts[k]);
    return acc;
}

Rational StepFunction::value_at(const Rational& s) const {
    for (std::size_t k = 0; k < values.size(); ++k)
        if (s < cuts[k + 1] || k + 1 == values.size()) return values[k];
    return values.back();
}

CompressionResult compress(const ShadowRegion& r, const Rational& eps) {
    if (!(Rational(0) < eps)) throw error("DegenerateArrangement", "eps must be positive");
    auto segs = region_segments(r);
    Arrangement arr(segs);

    // Pitch from eps and the total L1 length of band segments: a segment of
    // L1 length L touches at most L/p + 3 cells, so the cover's overshoot is
    // at most p*(sum L + 3*#segs).
    Rational total_l1(0);
    int nseg = 0;
    for (auto& [a, b] : segs) {
        Rational lo = Rational::max(Rational(-1), Rational::min(a.x, b.x));
        Rational hi = Rational::min(Rational(1), Rational::max(a.x, b.x));
        if (hi < lo) continue;
        total_l1 += (a.x - b.x).abs() + (a.y - b.y).abs();
        ++nseg;
    }
    Rational denom = Rational(3) * (Rational(2) * total_l1 + Rational(10 * nseg + 1));
    Rational pitch = Rational::min(Rational(1, 2), eps / denom);
    // uniform columns over [-1,1]
    Rational ncols_r = Rational::ceil_int(Rational(2) / pitch);
    long long ncols = ncols_r.num();
    Rational w = Rational(2) / ncols_r;

    struct Band {
        Rational lo, hi;
    };
    std::vector<std::vector<Band>> col_bands(std::size_t(ncols));
    auto col_of = [&](const Rational& x) {
        Rational rel = (x - Rational(-1)) / w;
        long long c = Rational::floor_int(rel).num();
        if (c < 0) c = 0;
        if (c >= ncols) c = ncols - 1;
        return std::size_t(c);
    };

    // Arrangement breakpoints inside the band; between two consecutive ones
    // the vertical order of edges and the bounded flags are constant, so the
    // point-location sampling runs once per interval, not once per column.
    std::set<Rational> axset;
    axset.insert(Rational(-1));
    axset.insert(Rational(1));
    for (auto& v : arr.vertices())
        if (Rational(-1) < v.x && v.x < Rational(1)) axset.insert(v.x);
    std::vector<Rational> axs(axset.begin(), axset.end());

    const auto& edges = arr.edges();
    const auto& verts = arr.vertices();
    for (std::size_t k = 0; k + 1 < axs.size(); ++k) {
        const Rational &ax0 = axs[k], &ax1 = axs[k + 1];
        Rational xm = (ax0 + ax1) / Rational(2);
        struct Act {
            Rational x0, y0, slope, ym;
            Rational at(const Rational& x) const { return y0 + slope * (x - x0); }
        };
        std::vector<Act> act;
        for (auto& [u, v] : edges) {
            Point a = verts[u], b = verts[v];
            if (a.x == b.x) continue;
            if (b.x < a.x) std::swap(a, b);
            if (a.x <= ax0 && ax1 <= b.x) {
                Act t;
                t.x0 = a.x;
                t.y0 = a.y;
                t.slope = (b.y - a.y) / (b.x - a.x);
                t.ym = t.at(xm);
                act.push_back(t);
            }
        }
        std::sort(act.begin(), act.end(), [](const Act& a, const Act& b) { return a.ym < b.ym; });
        std::vector<char> gap_bounded(act.empty() ? 0 : act.size() - 1, 0);
        for (std::size_t i = 0; i + 1 < act.size(); ++i) {
            if (!(act[i].ym < act[i + 1].ym)) continue;
            Point sample{xm, (act[i].ym + act[i + 1].ym) / Rational(2)};
            gap_bounded[i] = arr.point_in_bounded(sample) ? 1 : 0;
        }
        // distribute to overlapped columns
        long long c0 = Rational::floor_int((ax0 - Rational(-1)) / w).num();
        if (c0 < 0) c0 = 0;
        for (long long c = c0; c < ncols; ++c) {
            Rational colx0 = Rational(-1) + w * Rational(c);
            Rational colx1 = Rational(-1) + w * Rational(c + 1);
            if (!(colx0 < ax1)) break;
            Rational ov0 = Rational::max(ax0, colx0), ov1 = Rational::min(ax1, colx1);
            if (!(ov0 < ov1)) continue;
            auto& dst = col_bands[std::size_t(c)];
            for (auto& t : act) {
                Rational ya = t.at(ov0), yb = t.at(ov1);
                dst.push_back({Rational::min(ya, yb), Rational::max(ya, yb)});
            }
            for (std::size_t i = 0; i + 1 < act.size(); ++i) {
                if (!gap_bounded[i]) continue;
                Rational la = act[i].at(ov0), lb = act[i].at(ov1);
                Rational ua = act[i + 1].at(ov0), ub = act[i + 1].at(ov1);
                dst.push_back({Rational::min(la, lb), Rational::max(ua, ub)});
            }
        }
    }
    // vertical segments: attribute to the column containing their x
    for (auto& [u, v] : edges) {
        const Point &a = verts[u], &b = verts[v];
        if (a.x != b.x) continue;
        if (a.x < Rational(-1) || Rational(1) < a.x) continue;
        col_bands[col_of(a.x)].push_back({Rational::min(a.y, b.y), Rational::max(a.y, b.y)});
    }

    // Column cover: snap merged y-intervals outward to the cell grid.
    StepFunction sigma;
    sigma.cuts.push_back(Rational(-1));
    Rational cover(0);
    for (long long c = 0; c < ncols; ++c) {
        auto bands = col_bands[std::size_t(c)];
        std::sort(bands.begin(), bands.end(),
                  [](const Band& a, const Band& b) { return a.lo < b.lo; });
        // merge, then snap each to [floor(lo/w), ceil(hi/w)] cells (at least one)
        std::vector<std::pair<long long, long long>> cells;
        for (std::size_t i = 0; i < bands.size();) {
            Rational lo = bands[i].lo, hi = bands[i].hi;
            std::size_t j = i + 1;
            while (j < bands.size() && bands[j].lo <= hi) {
                hi = Rational::max(hi, bands[j].hi);
                ++j;
            }
            long long klo = Rational::floor_int(lo / w).num();
            long long khi = Rational::floor_int(hi / w).num() + 1;
            cells.emplace_back(klo, khi);
            i = j;
        }
        long long covered = 0;
        for (std::size_t i = 0; i < cells.size();) {
            long long lo = cells[i].first, hi = cells[i].second;
            std::size_t j = i + 1;
            while (j < cells.size() && cells[j].first <= hi) {
                hi = std::max(hi, cells[j].second);
                ++j;
            }
            covered += hi - lo;
            i = j;
        }
        Rational height = Rational(covered) * w;
        cover += height * w;
        sigma.cuts.push_back(Rational(-1) + w * Rational(c + 1));
        sigma.values.push_back(height);
    }
    sigma.cuts.back() = Rational(1);

    // endpoint constraints sigma(-1) >= m, sigma(+1) >= n on thin margins
    int m = int(r.ends_minus().size()), n = int(r.ends_plus().size());
    Rational margin = Rational::min(w, eps / (Rational(6) * Rational(m + n + 1)));
    auto bump = [&](bool left, int floor_h) {
        Rational fh(floor_h);
        std::size_t idx = left ? 0 : sigma.values.size() - 1;
        if (sigma.values[idx] >= fh) return;
        if (left) {
            sigma.cuts.insert(sigma.cuts.begin() + 1, Rational(-1) + margin);
            sigma.values.insert(sigma.values.begin(), fh);
        } else {
            sigma.cuts.insert(sigma.cuts.end() - 1, Rational(1) - margin);
            sigma.values.push_back(fh);
        }
    };
    bump(true, m);
    bump(false, n);
    // coalesce equal adjacent steps
    StepFunction out;
    out.cuts.push_back(sigma.cuts.front());
    for (std::size_t k = 0; k < sigma.values.size(); ++k) {
        if (!out.values.empty() && out.values.back() == sigma.values[k]) {
            out.cuts.back() = sigma.cuts[k + 1];
        } else {
            out.values.push_back(sigma.values[k]);
            out.cuts.push_back(sigma.cuts[k + 1]);
        }
    }

    CompressionResult res;
    res.sigma_plus = std::move(out);
    res.cover_area = cover;
    res.area = res.sigma_plus.integral();
    res.pitch = w;
    Rational base = arr.bounded_area();
    if (res.area > base + eps)
        throw error("DegenerateArrangement",
                    "compression overshoot exceeds eps; pitch selection failed");
    return res;
}

std::string shadow_svg(const ShadowRegion& r) {
    Arrangement arr(region_segments(r));
    Rational xlo(-2), xhi(2), ylo(-1), yhi(2);
    for (auto& v : arr.vertices()) {
        xlo = Rational::min(xlo, v.x);
        xhi = Rational::max(xhi, v.x);
        ylo = Rational::min(ylo, v.y);
        yhi = Rational::max(yhi, v.y);
    }
    auto fx = [&](const Rational& v) {
        Rational t = (v - xlo) / (xhi - xlo);
        return 20.0 + 560.0 * double(t.num()) / double(t.den());
    };
    auto fy = [&](const Rational& v) {
        Rational t = (v - ylo) / (yhi - ylo);
        return 380.0 - 360.0 * double(t.num()) / double(t.den());
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"400\">\n";
    // shaded bounded faces via even-odd fill over included loops
    svg << "  <path fill=\"#bcd8ef\" fill-rule=\"evenodd\" stroke=\"none\" d=\"";
    for (auto& l : arr.loops()) {
        if (!l.included || l.area2 == Rational(0)) continue;
        for (std::size_t k = 0; k < l.verts.size(); ++k) {
            const Point& p = arr.vertices()[l.verts[k]];
            svg << (k == 0 ? "M" : "L") << fx(p.x) << " " << fy(p.y) << " ";
        }
        svg << "Z ";
    }
    svg << "\"/>\n";
    for (auto& [u, v] : arr.edges()) {
        const Point &p = arr.vertices()[u], &q = arr.vertices()[v];
        svg << "  <line x1=\"" << fx(p.x) << "\" y1=\"" << fy(p.y) << "\" x2=\"" << fx(q.x)
            << "\" y2=\"" << fy(q.y) << "\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cobar
