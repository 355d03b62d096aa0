#include "cobar/energy.hpp"

#include <algorithm>
#include <set>

namespace cobar {

ExtRational map_energy(const GradedMap& phi) {
    ExtRational best = ExtRational::infinity();
    for (auto& [s, t] : phi.entries())
        best = ExtRational::min(
            best, ExtRational(phi.target().gen(t).birth - phi.source().gen(s).birth));
    return best;
}

namespace {

// Candidate shifts for lifting src -> tgt: non-negative birth gaps.
std::vector<Rational> lift_grid(const IntervalComplex& src, const IntervalComplex& tgt) {
    std::set<Rational> grid;
    grid.insert(Rational(0));
    for (auto& g : src.generators())
        for (auto& h : tgt.generators()) {
            Rational d = h.birth - g.birth;
            if (!(d < Rational(0))) grid.insert(d);
        }
    return {grid.begin(), grid.end()};
}

struct LiftAttempt {
    bool feasible = false;
    GradedMap lift, witness;
};

// Solve for a shift-`sigma` map lift: src -> translate(tgt, -b) with
//   d lift + lift d = psi_tilde_entries      (exact null homotopy; empty for chain-map lifts)
//   tau . lift + phi = d h1 + h1 d + psi . h2,  d h2 + h2 d = 0
// where phi, psi live over (src -> tgt). For sigma = 0 and psi = 0 this is the
// plain "chain map lifting phi up to homotopy" condition.
LiftAttempt try_lift(const IntervalComplex& src, const IntervalComplex& tgt, int sigma,
                     const std::vector<std::pair<int, int>>& phi_entries,
                     const std::vector<std::pair<int, int>>& psi_entries,
                     const std::vector<std::pair<int, int>>& psi_tilde_entries,
                     const Rational& b) {
    IntervalComplex tgt_b = translate(tgt, -b);
    SlotSpace lifts = SlotSpace::admissible(src, tgt_b, sigma);
    SlotSpace h1s = SlotSpace::admissible(src, tgt, sigma - 1);
    SlotSpace h2s = SlotSpace::admissible(src, src, -1);

    LinSys sys;
    int lf = sys.add_block(&lifts);
    int h1 = sys.add_block(&h1s);
    int h2 = sys.add_block(&h2s);

    // exact null-homotopy (or chain-map) equation for the lift
    int ea = sys.add_eq_space(src.size(), tgt_b.size());
    sys.op_d_after(ea, lf);
    sys.op_d_before(ea, lf);
    sys.rhs(ea, psi_tilde_entries);

    // lift-of-phi condition up to cone homotopy
    int eb = sys.add_eq_space(src.size(), tgt.size());
    sys.op_identity(eb, lf);  // tau has the identity pattern
    sys.op_d_after(eb, h1);
    sys.op_d_before(eb, h1);
    sys.op_fixed_after(eb, h2, psi_entries);
    sys.rhs(eb, phi_entries);

    // h2 must be a chain self-map
    int ec = sys.add_eq_space(src.size(), src.size());
    sys.op_d_after(ec, h2);
    sys.op_d_before(ec, h2);

    auto sol = sys.solve();
    if (!sol) return {};
    LiftAttempt out;
    out.feasible = true;
    out.lift = lifts.unpack(sys.block_part(*sol, lf));
    out.witness = h1s.unpack(sys.block_part(*sol, h1));
    return out;
}

}  // namespace

LiftCertificate max_lift_shift(const ChainMap& phi) {
    if (phi.shift() != 0 || !phi.is_chain_map())
        throw error("InvalidMap", "max_lift_shift requires a chain map");
    const IntervalComplex &src = phi.source(), &tgt = phi.target();
    // +inf detection: a lift beyond every birth gap forces the zero lift, so
    // the condition degenerates to "phi is null-homotopic".
    auto inf_w = is_homotopic(phi, GradedMap::zero(src, tgt, 0));
    if (inf_w.homotopic) {
        LiftCertificate c;
        c.shift = ExtRational::infinity();
        c.lift = GradedMap::zero(src, tgt, 0);
        c.witness = inf_w.witness;
        return c;
    }
    std::vector<Rational> grid = lift_grid(src, tgt);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        LiftAttempt at = try_lift(src, tgt, 0, phi.entries(), {}, {}, *it);
        if (at.feasible) {
            LiftCertificate c;
            c.shift = ExtRational(*it);
            c.lift = at.lift;
            c.witness = at.witness;
            return c;
        }
    }
    throw error("InvalidMap", "lift search found no feasible shift, including 0");
}

LiftTower lift_tower(const TwistedComplex& t) {
    McViolation mc = validate_mc(t);
    if (!mc.ok) throw error("MCViolation", mc.detail);
    int m = t.length();
    LiftTower out;
    out.base = t;

    // lifts[i][j]: the fixed maximal lift of phi_{i,j} (zero map when b=inf).
    std::map<std::pair<int, int>, GradedMap> lifts;
    auto shift_of = [&](int i, int j) { return out.shifts.at({i, j}); };

    for (int span = 1; span < m; ++span) {
        for (int i = 0; i + span < m; ++i) {
            int j = i + span;
            const IntervalComplex &gi = t.piece(i), &gj = t.piece(j);
            GradedMap phi = t.map(i, j);
            int sigma = i - j + 1;
            if (span == 1) {
                LiftCertificate c = max_lift_shift(phi);
                out.shifts[{i, j}] = c.shift;
                lifts.emplace(std::make_pair(i, j), c.lift);
                continue;
            }
            // b_tilde: min over k of b_{i,k} + b_{k,j}
            ExtRational btilde = ExtRational::infinity();
            for (int k = i + 1; k < j; ++k)
                btilde = ExtRational::min(btilde, shift_of(i, k) + shift_of(k, j));
            // psi = sum phi_{k,j} phi_{i,k}; psi_tilde from the fixed lifts
            // (entry lists; tau pushes keep entries unchanged).
            std::vector<std::pair<int, int>> psi, psi_tilde;
            for (int k = i + 1; k < j; ++k) {
                GradedMap c1 = compose(t.map(k, j), t.map(i, k));
                psi.insert(psi.end(), c1.entries().begin(), c1.entries().end());
                std::vector<std::vector<int>> nxt(t.piece(k).size());
                for (auto& [u, v] : lifts.at({k, j}).entries()) nxt[u].push_back(v);
                for (auto& [u, v] : lifts.at({i, k}).entries())
                    for (int w : nxt[v]) psi_tilde.emplace_back(u, w);
            }
            auto norm = [](std::vector<std::pair<int, int>> v) {
                std::sort(v.begin(), v.end());
                std::vector<std::pair<int, int>> outp;
                for (std::size_t p = 0; p < v.size();) {
                    std::size_t q = p;
                    while (q < v.size() && v[q] == v[p]) ++q;
                    if ((q - p) % 2 == 1) outp.push_back(v[p]);
                    p = q;
                }
                return outp;
            };
            psi = norm(std::move(psi));
            psi_tilde = norm(std::move(psi_tilde));

            // Candidate grid within [0, b_tilde].
            std::vector<Rational> grid = lift_grid(gi, gj);
            if (!btilde.is_infinite()) {
                std::vector<Rational> clipped;
                for (auto& v : grid)
                    if (!(btilde < ExtRational(v))) clipped.push_back(v);
                clipped.push_back(btilde.finite());
                std::sort(clipped.begin(), clipped.end());
                clipped.erase(std::unique(clipped.begin(), clipped.end()), clipped.end());
                grid = std::move(clipped);
            }

            bool found = false;
            // +inf only possible when b_tilde is infinite: then all composite
            // lifts are zero and any shift beyond the gaps forces a zero lift.
            if (btilde.is_infinite()) {
                Rational beyond = grid.back() + Rational(1);
                LiftAttempt at = try_lift(gi, gj, sigma, phi.entries(), psi, psi_tilde, beyond);
                if (at.feasible) {
                    out.shifts[{i, j}] = ExtRational::infinity();
                    lifts.emplace(std::make_pair(i, j),
                                  GradedMap::zero(gi, gj, sigma));
                    found = true;
                }
            }
            for (auto it = grid.rbegin(); !found && it != grid.rend(); ++it) {
                LiftAttempt at = try_lift(gi, gj, sigma, phi.entries(), psi, psi_tilde, *it);
                if (at.feasible) {
                    out.shifts[{i, j}] = ExtRational(*it);
                    lifts.emplace(std::make_pair(i, j), at.lift);
                    found = true;
                }
            }
            if (!found)
                throw error("MCViolation",
                            "no lift found at any candidate shift for (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
        }
    }

    // Assemble the full-span tower at shifts applied[i] = b_{0,i} (finite part).
    out.applied.assign(m, Rational(0));
    for (int i = 1; i < m; ++i) {
        ExtRational b = shift_of(0, i);
        out.applied[i] = b.is_infinite() ? out.applied[i - 1] : b.finite();
    }
    std::vector<IntervalComplex> pieces;
    pieces.reserve(m);
    for (int i = 0; i < m; ++i) pieces.push_back(translate(t.piece(i), -out.applied[i]));
    std::map<std::pair<int, int>, GradedMap> lifted_maps;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const GradedMap& lf = lifts.at({i, j});
            if (lf.is_zero()) continue;
            ExtRational delta(out.applied[j] - out.applied[i]);
            if (shift_of(i, j) < delta)
                throw error("MCViolation",
                            "tower assembly shift exceeds b_{" + std::to_string(i) + "," +
                                std::to_string(j) + "}");
            lifted_maps.emplace(std::make_pair(i, j),
                                GradedMap::make_indexed(pieces[i], pieces[j], i - j + 1,
                                                        lf.entries()));
        }
    }
    out.lifted = TwistedComplex::make(std::move(pieces), std::move(lifted_maps));
    McViolation lv = validate_mc(out.lifted);
    if (!lv.ok) throw error("MCViolation", "lifted tower violates MC: " + lv.detail);
    return out;
}

ExtRational delta_two_ends(const std::vector<Rational>& a0, const std::vector<Rational>& a1,
                           const std::vector<Rational>& a01) {
    ExtRational best = ExtRational::infinity();
    for (auto& q : a1)
        for (auto& p : a0)
            for (auto& r : a01) {
                Rational v = q - p - r;
                if (Rational(0) < v) best = ExtRational::min(best, ExtRational(v));
            }
    return best;
}

ExtRational delta_simple(const ActionData& a) {
    ExtRational best = ExtRational::infinity();
    int m = a.ends();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (auto& p : a.nl[i])
                for (auto& q : a.nl[j]) {
                    Rational v = q - p;
                    if (Rational(0) < v) best = ExtRational::min(best, ExtRational(v));
                }
    return best;
}

namespace {

void chain_sums_rec(const ActionData& a, int at, int j, const Rational& acc,
                    std::vector<Rational>& out) {
    auto direct = a.ll.find({at, j});
    if (direct != a.ll.end())
        for (auto& v : direct->second) out.push_back(acc + v);
    for (int k = at + 1; k < j; ++k) {
        auto leg = a.ll.find({at, k});
        if (leg == a.ll.end()) continue;
        for (auto& v : leg->second) chain_sums_rec(a, k, j, acc + v, out);
    }
}

}  // namespace

std::vector<Rational> action_chain_sums(const ActionData& a, int i, int j) {
    std::vector<Rational> out;
    if (i < j) chain_sums_rec(a, i, j, Rational(0), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ExtRational delta_uniform(const ActionData& a) {
    ExtRational best = ExtRational::infinity();
    int m = a.ends();
    for (int i = 0; i < m; ++i) {
        // i = j, k = 0: gaps within one action set
        for (auto& p : a.nl[i])
            for (auto& q : a.nl[i]) {
                Rational v = q - p;
                if (Rational(0) < v) best = ExtRational::min(best, ExtRational(v));
            }
        for (int j = i + 1; j < m; ++j) {
            std::vector<Rational> sums = action_chain_sums(a, i, j);
            for (auto& s : sums)
                for (auto& p : a.nl[i])
                    for (auto& q : a.nl[j]) {
                        Rational v = q - p - s;
                        if (Rational(0) < v) best = ExtRational::min(best, ExtRational(v));
                    }
        }
    }
    return best;
}

}  // namespace cobar
