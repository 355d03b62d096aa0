#include "cobar/scenario.hpp"

#include <algorithm>
#include <set>

namespace cobar {

IntervalComplex gen_hom_barcode(const PairingPlan& plan, std::optional<int> slope) {
    std::vector<Generator> gens;
    gens.reserve(plan.points.size());
    for (auto& p : plan.points) {
        Generator g;
        g.id = p.name;
        g.degree = p.degree;
        g.birth = p.action;
        g.tag = p.name;
        g.slope = slope;
        gens.push_back(std::move(g));
    }
    std::vector<std::pair<std::string, std::string>> entries;
    auto find = [&](const std::string& n) -> const ScenarioPoint* {
        for (auto& p : plan.points)
            if (p.name == n) return &p;
        return nullptr;
    };
    for (auto& [a, b] : plan.pairs) {
        const ScenarioPoint *pa = find(a), *pb = find(b);
        if (!pa || !pb)
            throw error("InconsistentPairing", "pair references unknown point '" +
                                                   (pa ? b : a) + "'");
        if (pb->degree != pa->degree + 1)
            throw error("InconsistentPairing", "paired points " + a + "," + b +
                                                   " must differ by one degree");
        if (!(pa->action < pb->action))
            throw error("InconsistentPairing",
                        "pair " + a + "," + b + " has non-positive bar length");
        entries.emplace_back(a, b);
    }
    return IntervalComplex::make(std::move(gens), std::move(entries));
}

SlopeSplit slope_split(const IntervalComplex& f, SplitSide side) {
    for (auto& g : f.generators())
        if (!g.slope.has_value())
            throw error("SlopeOrderViolation", "generator '" + g.id + "' carries no slope label");
    for (auto& [s, t] : f.entries()) {
        int ss = *f.gen(s).slope, st = *f.gen(t).slope;
        if (side == SplitSide::minus ? st < ss : st > ss)
            throw error("SlopeOrderViolation",
                        "entry " + f.gen(s).id + " -> " + f.gen(t).id +
                            (side == SplitSide::minus ? " decreases" : " increases") +
                            " the slope label");
    }
    int max_slope = 0;
    for (auto& g : f.generators()) max_slope = std::max(max_slope, *g.slope);
    int m = max_slope + 1;

    SlopeSplit out;
    for (int pos = 0; pos < m; ++pos)
        out.piece_slopes.push_back(side == SplitSide::minus ? pos : m - 1 - pos);

    // position of each generator's piece and its index within the piece
    std::vector<int> piece_of(f.size()), local(f.size());
    std::vector<std::vector<Generator>> gens(m);
    std::vector<std::vector<std::pair<int, int>>> inner(m);
    for (int i = 0; i < f.size(); ++i) {
        int sl = *f.gen(i).slope;
        int pos = side == SplitSide::minus ? sl : m - 1 - sl;
        piece_of[i] = pos;
        local[i] = int(gens[pos].size());
        Generator g = f.gen(i);
        g.degree += (m - 1) - pos;  // undo the totalize re-grading
        gens[pos].push_back(std::move(g));
    }
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross;
    for (auto& [s, t] : f.entries()) {
        int ps = piece_of[s], pt = piece_of[t];
        if (ps == pt)
            inner[ps].emplace_back(local[s], local[t]);
        else
            cross[{ps, pt}].emplace_back(local[s], local[t]);
    }
    std::vector<IntervalComplex> pieces;
    for (int pos = 0; pos < m; ++pos)
        pieces.push_back(IntervalComplex::make_indexed(std::move(gens[pos]), std::move(inner[pos])));
    std::map<std::pair<int, int>, GradedMap> maps;
    for (auto& [key, entries] : cross) {
        auto [i, j] = key;
        maps.emplace(key, GradedMap::make_indexed(pieces[i], pieces[j], i - j + 1,
                                                  std::move(entries)));
    }
    out.twisted = TwistedComplex::make(std::move(pieces), std::move(maps));
    for (int pos = 0; pos < m; ++pos) {
        int sl = out.piece_slopes[pos];
        Rational by = side == SplitSide::minus ? Rational(-sl) : Rational(sl);
        out.normalized.push_back(translate(out.twisted.piece(pos), by));
    }
    return out;
}

ActionData CobordismScenario::actions() const {
    ActionData a;
    for (auto& plan : nl) {
        std::vector<Rational> vals;
        for (auto& p : plan.points) vals.push_back(p.action);
        a.nl.push_back(std::move(vals));
    }
    a.ll = ll;
    return a;
}

namespace {

// Derived shadow curve pieces of one trajectory, in band coordinates
// (movie parameter u in [0,1] maps to s = 2u-1, so heights are -b'(u)/2).
std::vector<std::pair<Point, Point>> trajectory_curve(
    const std::vector<std::pair<Rational, Rational>>& traj) {
    std::vector<std::pair<Point, Point>> out;
    std::vector<std::pair<Rational, Rational>> seg;  // (band x, height)
    for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
        Rational x0 = Rational(2) * traj[k].first - Rational(1);
        Rational x1 = Rational(2) * traj[k + 1].first - Rational(1);
        Rational h = -(traj[k + 1].second - traj[k].second) / (x1 - x0);
        seg.emplace_back(x0, h);
        seg.emplace_back(x1, h);
    }
    for (std::size_t k = 0; k + 1 < seg.size(); k += 2)
        out.push_back({Point{seg[k].first, seg[k].second},
                       Point{seg[k + 1].first, seg[k + 1].second}});
    // vertical jumps at interior breakpoints
    for (std::size_t k = 1; k + 1 < seg.size(); k += 2) {
        if (seg[k].second != seg[k + 1].second)
            out.push_back({Point{seg[k].first, seg[k].second},
                           Point{seg[k + 1].first, seg[k + 1].second}});
    }
    return out;
}

// Is the (axis-parallel or slanted) segment contained in the union of
// collinear declared segments?
bool segment_covered(const Point& a, const Point& b,
                     const std::vector<std::pair<Point, Point>>& declared) {
    auto collinear = [](const Point& p, const Point& q, const Point& r) {
        return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == Rational(0);
    };
    // parametrize by x unless vertical, then by y
    bool vertical = a.x == b.x;
    auto par = [&](const Point& z) { return vertical ? z.y : z.x; };
    Rational lo = Rational::min(par(a), par(b)), hi = Rational::max(par(a), par(b));
    std::vector<std::pair<Rational, Rational>> cover;
    for (auto& [p, q] : declared) {
        if (!collinear(a, b, p) || !collinear(a, b, q)) continue;
        if (vertical && p.x != a.x) continue;
        Rational l = Rational::min(par(p), par(q)), h = Rational::max(par(p), par(q));
        Rational cl = Rational::max(l, lo), ch = Rational::min(h, hi);
        if (cl <= ch) cover.emplace_back(cl, ch);
    }
    std::sort(cover.begin(), cover.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    Rational reach = lo;
    for (auto& [l, h] : cover) {
        if (reach < l) return false;
        reach = Rational::max(reach, h);
        if (!(reach < hi)) return true;
    }
    return !(reach < hi);
}

int integer_height(const Rational& h, const char* what) {
    if (h.den() != 1 || h.num() < 0)
        throw error("InconsistentScenario",
                    std::string(what) + " must be a non-negative integer, got " + h.str());
    return int(h.num());
}

}  // namespace

DistanceReport check_distance_vs_shadow(const CobordismScenario& sc, long long cap) {
    if (!sc.movie.has_value())
        throw error("InconsistentScenario", "check-distance requires a movie");
    if (!sc.shadow.has_value())
        throw error("InconsistentScenario", "check-distance requires a shadow region");
    const Movie& mv = *sc.movie;
    const ShadowRegion& region = *sc.shadow;
    auto declared = region_segments(region);

    // Trajectory-derived curves must be covered by the declared ones.
    for (int i = 0; i < mv.skeleton().size(); ++i) {
        for (auto& [p, q] : trajectory_curve(mv.trajectories()[i])) {
            if (!segment_covered(p, q, declared))
                throw error("InconsistentScenario",
                            "derived curve of generator '" + mv.skeleton().gen(i).id +
                                "' is not covered by the declared shadow curves");
        }
    }

    // End slopes: first/last trajectory legs give the end heights.
    IntervalComplex slice_minus = mv.slice(Rational(0));
    IntervalComplex slice_plus = mv.slice(Rational(1));
    std::vector<Generator> gm = slice_minus.generators(), gp = slice_plus.generators();
    for (int i = 0; i < mv.skeleton().size(); ++i) {
        const auto& tr = mv.trajectories()[i];
        Rational h0 = -(tr[1].second - tr[0].second) /
                      (Rational(2) * (tr[1].first - tr[0].first));
        auto l = tr.size() - 1;
        Rational h1 = -(tr[l].second - tr[l - 1].second) /
                      (Rational(2) * (tr[l].first - tr[l - 1].first));
        int sm = integer_height(h0, "minus-end slope");
        int sp = integer_height(h1, "plus-end slope");
        if (mv.skeleton().gen(i).slope.has_value() && *mv.skeleton().gen(i).slope != sm)
            throw error("InconsistentScenario",
                        "declared slope of '" + mv.skeleton().gen(i).id +
                            "' disagrees with the trajectory");
        if (sm >= int(region.ends_minus().size()) || sp >= int(region.ends_plus().size()))
            throw error("InconsistentScenario", "trajectory end height exceeds declared ends");
        gm[i].slope = sm;
        gp[i].slope = sp;
    }
    slice_minus = IntervalComplex::make_indexed(std::move(gm), slice_minus.entries());
    slice_plus = IntervalComplex::make_indexed(std::move(gp), slice_plus.entries());

    DistanceReport rep;
    rep.shadow_value = shadow_area(region);
    rep.shifts = end_shifts(region);
    rep.epsilon = sc.epsilon;

    // Assemble F~_{-1} and F~_{+1}: normalized pieces translated by the end
    // shifts; entries whose birth gap turns negative are zero maps and are
    // dropped, and the result must still satisfy MC.
    auto assemble = [&](const IntervalComplex& slice, SplitSide side,
                        const std::vector<Rational>& shifts, int sign) {
        SlopeSplit sp = slope_split(slice, side);
        int m = sp.twisted.length();
        std::vector<IntervalComplex> pieces;
        for (int pos = 0; pos < m; ++pos) {
            int sl = sp.piece_slopes[pos];
            Rational norm = side == SplitSide::minus ? Rational(-sl) : Rational(sl);
            Rational shift = sl < int(shifts.size()) ? shifts[sl] : Rational(0);
            pieces.push_back(translate(sp.twisted.piece(pos), norm + Rational(sign) * shift));
        }
        std::map<std::pair<int, int>, GradedMap> maps;
        for (auto& [key, phi] : sp.twisted.maps()) {
            auto [i, j] = key;
            std::vector<std::pair<int, int>> kept;
            for (auto& [s, t] : phi.entries()) {
                if (!(pieces[j].gen(t).birth < pieces[i].gen(s).birth)) kept.emplace_back(s, t);
            }
            if (!kept.empty())
                maps.emplace(key, GradedMap::make_indexed(pieces[i], pieces[j], i - j + 1,
                                                          std::move(kept)));
        }
        try {
            return totalize(TwistedComplex::make(std::move(pieces), std::move(maps)));
        } catch (const error& e) {
            throw error("InconsistentScenario",
                        std::string("end assembly failed after shifts: ") + e.what());
        }
    };
    rep.f_minus_tilde = assemble(slice_minus, SplitSide::minus, rep.shifts.c_minus, +1);
    rep.f_plus_tilde = assemble(slice_plus, SplitSide::plus, rep.shifts.c_plus, -1);

    // Search (a,b) with a+b <= shadow + epsilon in ascending total order.
    Rational budget = rep.shadow_value + sc.epsilon;
    std::vector<Rational> grid = interleaving_candidate_grid(rep.f_minus_tilde, rep.f_plus_tilde);
    std::vector<std::pair<Rational, std::pair<Rational, Rational>>> cells;
    for (auto& a : grid) {
        if (budget < a) break;
        for (auto& b : grid) {
            if (budget < a + b) break;
            cells.push_back({a + b, {a, b}});
        }
    }
    std::sort(cells.begin(), cells.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    for (auto& [tot, ab] : cells) {
        if (is_weakly_ab_isomorphic(rep.f_minus_tilde, rep.f_plus_tilde, ab.first, ab.second, cap)
                .feasible) {
            rep.feasible = true;
            rep.a = ab.first;
            rep.b = ab.second;
            return rep;
        }
    }
    rep.feasible = false;
    return rep;
}

RigidityReport check_rigidity(const CobordismScenario& sc) {
    if (!sc.no_triple_intersections)
        throw error("HypothesisViolation",
                    "triple intersections declared non-empty; the bound does not apply");
    if (int(sc.nl.size()) != sc.m)
        throw error("InconsistentScenario", "need one (N,L_i) action plan per minus end");
    if (!sc.shadow.has_value())
        throw error("InconsistentScenario", "check-rigidity requires a shadow region");

    RigidityReport rep;
    ActionData acts = sc.actions();
    rep.delta = sc.m >= 2 ? delta_uniform(acts) : delta_simple(acts);
    rep.shadow_value = shadow_area(*sc.shadow);

    std::vector<IntervalComplex> pieces;
    for (int i = 0; i < sc.m; ++i) pieces.push_back(gen_hom_barcode(sc.nl[i], i));
    for (auto& p : pieces) rep.minus_endpoints += int(endpoints(decompose(p)).size());
    rep.plus_endpoints = int(endpoints(decompose(gen_hom_barcode(sc.nl_prime))).size());

    std::map<std::pair<int, int>, GradedMap> maps;
    for (auto& [key, entries] : sc.end_maps) {
        auto [i, j] = key;
        if (i < 0 || j <= i || j >= sc.m)
            throw error("InconsistentScenario", "end map index out of range");
        std::vector<std::pair<std::string, std::string>> e = entries;
        try {
            maps.emplace(key, GradedMap::make(pieces[i], pieces[j], i - j + 1, std::move(e)));
        } catch (const error& err) {
            throw error("InconsistentScenario",
                        std::string("end map (") + std::to_string(i) + "," + std::to_string(j) +
                            ") invalid: " + err.what());
        }
    }
    TwistedComplex tw = TwistedComplex::make(pieces, std::move(maps));
    McViolation mc = validate_mc(tw);
    if (!mc.ok) throw error("InconsistentScenario", mc.detail);

    if (ExtRational(rep.shadow_value) < rep.delta) {
        LiftTower tower = lift_tower(tw);
        rep.bij = tower.shifts;
        for (auto& [key, b] : tower.shifts) {
            auto [i, j] = key;
            if (b.is_infinite()) {
                // unbounded lift: the map is null-homotopic; membership vacuous
                rep.bij_in_action_set[key] = true;
                continue;
            }
            auto sums = action_chain_sums(acts, i, j);
            rep.bij_in_action_set[key] =
                std::find(sums.begin(), sums.end(), b.finite()) != sums.end();
        }
        IntervalComplex total = totalize(tower.lifted);
        Barcode bc = decompose(total);
        rep.tower_endpoints = int(endpoints(bc).size());
        rep.tower_shortest_bar = shortest_bar(bc);
        rep.min_energy = ExtRational::infinity();
        for (int i = 0; i < tower.lifted.length(); ++i)
            rep.min_energy = ExtRational::min(
                rep.min_energy, map_energy(differential_map(tower.lifted.piece(i))));
        for (auto& [key, phi] : tower.lifted.maps())
            rep.min_energy = ExtRational::min(rep.min_energy, map_energy(phi));
        bool no_cancellation = rep.tower_endpoints == rep.minus_endpoints &&
                               !(rep.tower_shortest_bar < rep.min_energy);
        rep.verdict = (no_cancellation && rep.plus_endpoints >= rep.minus_endpoints)
                          ? Verdict::holds
                          : Verdict::violated;
    } else {
        rep.verdict = Verdict::not_applicable;
        // witness: the shortest finite bar of the un-lifted totalization
        Barcode bc = decompose(totalize(tw));
        for (auto& bar : bc.bars) {
            if (bar.death.is_infinite()) continue;
            if (!rep.witness_cancellation.has_value() ||
                bar.length() < rep.witness_cancellation->length())
                rep.witness_cancellation = bar;
        }
        rep.tower_shortest_bar = shortest_bar(bc);
    }
    return rep;
}

}  // namespace cobar
