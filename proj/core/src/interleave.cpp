#include "cobar/interleave.hpp"

#include <algorithm>
#include <set>

namespace cobar {

Movie Movie::make(IntervalComplex skeleton,
                  std::vector<std::vector<std::pair<Rational, Rational>>> trajectories) {
    if (int(trajectories.size()) != skeleton.size())
        throw error("InvalidMovie", "one trajectory per generator required");
    for (int i = 0; i < skeleton.size(); ++i) {
        auto& t = trajectories[i];
        if (t.empty() || t.front().first != Rational(0) || t.back().first != Rational(1))
            throw error("InvalidMovie",
                        "trajectory of '" + skeleton.gen(i).id + "' must span s in [0,1]");
        for (std::size_t k = 1; k < t.size(); ++k)
            if (!(t[k - 1].first < t[k].first))
                throw error("InvalidMovie", "trajectory breakpoints must be increasing");
        if (t.front().second != skeleton.gen(i).birth)
            throw error("InvalidMovie", "trajectory of '" + skeleton.gen(i).id +
                                            "' must start at the skeleton birth");
    }
    Movie m;
    m.skeleton_ = std::move(skeleton);
    m.traj_ = std::move(trajectories);
    // Instantaneous validity: birth order along every entry at all breakpoints
    // (piecewise-linear, so breakpoints suffice).
    auto cuts = m.breakpoints();
    for (auto& [s, t] : m.skeleton_.entries()) {
        for (auto& c : cuts) {
            if (m.birth_at(t, c) < m.birth_at(s, c))
                throw error("InvalidMovie", "entry " + m.skeleton_.gen(s).id + " -> " +
                                                m.skeleton_.gen(t).id +
                                                " violates birth order at s=" + c.str());
        }
    }
    return m;
}

Rational Movie::birth_at(int gen, const Rational& s) const {
    const auto& t = traj_[gen];
    if (s <= t.front().first) return t.front().second;
    for (std::size_t k = 1; k < t.size(); ++k) {
        if (s <= t[k].first) {
            const Rational &s0 = t[k - 1].first, &s1 = t[k].first;
            const Rational &b0 = t[k - 1].second, &b1 = t[k].second;
            return b0 + (b1 - b0) * (s - s0) / (s1 - s0);
        }
    }
    return t.back().second;
}

std::vector<Rational> Movie::breakpoints() const {
    std::set<Rational> cuts;
    for (auto& t : traj_)
        for (auto& [s, b] : t) cuts.insert(s);
    return {cuts.begin(), cuts.end()};
}

Rational Movie::velocity(int gen, const Rational& seg_start, const Rational& seg_end) const {
    Rational b0 = birth_at(gen, seg_start), b1 = birth_at(gen, seg_end);
    return (b1 - b0) / (seg_end - seg_start);
}

IntervalComplex Movie::slice(const Rational& s) const {
    std::vector<Generator> gens = skeleton_.generators();
    for (int i = 0; i < skeleton_.size(); ++i) gens[i].birth = birth_at(i, s);
    return IntervalComplex::make_indexed(std::move(gens), skeleton_.entries());
}

Rational SpeedBounds::integral_f() const {
    Rational acc(0);
    for (std::size_t k = 0; k < f.size(); ++k) acc += f[k] * (cuts[k + 1] - cuts[k]);
    return acc;
}

Rational SpeedBounds::integral_g() const {
    Rational acc(0);
    for (std::size_t k = 0; k < g.size(); ++k) acc += g[k] * (cuts[k + 1] - cuts[k]);
    return acc;
}

namespace {

// Coset representatives of a subspace `space` modulo `mod` (mod must be a
// subspace of span(space)); enumerating xor-combinations of the returned
// vectors visits each class exactly once.
std::vector<BitVec> quotient_basis(const std::vector<BitVec>& space, F2RowSpace& mod) {
    std::vector<BitVec> reps;
    F2RowSpace seen = mod;
    for (auto& v : space) {
        BitVec r = seen.reduce(v);
        if (r.lowest() >= 0) {
            seen.add(r);
            reps.push_back(v);
        }
    }
    return reps;
}

BitVec combine(const std::vector<BitVec>& basis, unsigned long long mask, int width) {
    BitVec v(width);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((mask >> i) & 1ull) v ^= basis[i];
    return v;
}

}  // namespace

WeakIsoWitness is_weakly_ab_isomorphic(const IntervalComplex& f, const IntervalComplex& g,
                                       const Rational& a, const Rational& b, long long cap) {
    if (a < Rational(0) || b < Rational(0))
        throw error("NegativeShift", "weak isomorphism shifts must be non-negative");

    IntervalComplex ga = translate(g, a);
    IntervalComplex fb = translate(f, b);
    IntervalComplex fab = translate(f, a + b);
    IntervalComplex gab = translate(g, a + b);
    IntervalComplex g2a = translate(g, a + a);
    IntervalComplex f2b = translate(f, b + b);

    std::vector<std::pair<int, int>> idpat_f, idpat_g;
    for (int i = 0; i < f.size(); ++i) idpat_f.emplace_back(i, i);
    for (int i = 0; i < g.size(); ++i) idpat_g.emplace_back(i, i);

    SlotSpace sa = SlotSpace::admissible(f, ga, 0);
    SlotSpace sha = SlotSpace::admissible(f, ga, -1);

    // Chain maps F -> T_aG and their homotopy subspace.
    std::vector<BitVec> cm_basis;
    {
        LinSys sys;
        int blk = sys.add_block(&sa);
        int eq = sys.add_eq_space(f.size(), ga.size());
        sys.op_d_after(eq, blk);
        sys.op_d_before(eq, blk);
        auto kern = sys.kernel();
        cm_basis.reserve(kern.size());
        for (auto& k : kern) cm_basis.push_back(k);  // one block: coordinates coincide
    }
    F2RowSpace htpy_img(sa.size());
    for (int s = 0; s < sha.size(); ++s) {
        auto [i, j] = sha.slots[s];
        BitVec v(sa.size());
        for (int k : ga.d_out(j)) v.flip(sa.index(i, k));
        for (int k : f.d_in(i)) v.flip(sa.index(k, j));
        htpy_img.add(std::move(v));
    }
    std::vector<BitVec> alpha_reps = quotient_basis(cm_basis, htpy_img);

    // Chain maps with tau_{a,2a}(G)-composite null-homotopic: the delta offsets.
    std::vector<BitVec> ktau_basis;
    {
        SlotSpace sh2 = SlotSpace::admissible(f, g2a, -1);
        LinSys sys;
        int chi = sys.add_block(&sa);
        int h = sys.add_block(&sh2);
        int eq_cm = sys.add_eq_space(f.size(), ga.size());
        sys.op_d_after(eq_cm, chi);
        sys.op_d_before(eq_cm, chi);
        int eq_t = sys.add_eq_space(f.size(), g2a.size());
        sys.op_fixed_after(eq_t, chi, idpat_g);  // tau_{a,2a}(G) has the identity pattern
        sys.op_d_after(eq_t, h);
        sys.op_d_before(eq_t, h);
        for (auto& k : sys.kernel()) {
            BitVec proj = sys.block_part(k, chi);
            ktau_basis.push_back(std::move(proj));
        }
    }
    F2RowSpace htpy_img2 = htpy_img;
    std::vector<BitVec> delta_reps = quotient_basis(ktau_basis, htpy_img2);

    if (int(alpha_reps.size() + delta_reps.size()) > 62)
        throw error("CapExceeded", "weak-isomorphism class space too large");
    long long combos = 1ll << alpha_reps.size();
    combos *= 1ll << delta_reps.size();
    if (combos > cap)
        throw error("CapExceeded", "weak-isomorphism enumeration exceeds cap of " +
                                       std::to_string(cap));

    SlotSpace sb = SlotSpace::admissible(g, fb, 0);
    SlotSpace h1s = SlotSpace::admissible(f, fab, -1);
    SlotSpace h2s = SlotSpace::admissible(g, gab, -1);
    SlotSpace h3s = SlotSpace::admissible(g, f2b, -1);

    WeakIsoWitness out;
    for (unsigned long long am = 0; am < (1ull << alpha_reps.size()); ++am) {
        BitVec alpha_v = combine(alpha_reps, am, sa.size());
        GradedMap alpha = sa.unpack(alpha_v);
        for (unsigned long long dm = 0; dm < (1ull << delta_reps.size()); ++dm) {
            BitVec delta_v = combine(delta_reps, dm, sa.size());
            delta_v ^= alpha_v;
            GradedMap delta = sa.unpack(delta_v);
            ++out.combinations_tried;

            LinSys sys;
            int beta = sys.add_block(&sb);
            int gamma = sys.add_block(&sb);
            int h1 = sys.add_block(&h1s);
            int h2 = sys.add_block(&h2s);
            int h3 = sys.add_block(&h3s);

            // (1)  T_a(beta).alpha + d h1 + h1 d = tau_{0,a+b}(F)
            int e1 = sys.add_eq_space(f.size(), fab.size());
            sys.op_fixed_before(e1, beta, alpha.entries());
            sys.op_d_after(e1, h1);
            sys.op_d_before(e1, h1);
            sys.rhs(e1, idpat_f);
            // (2)  T_b(delta).gamma + d h2 + h2 d = tau_{0,a+b}(G)
            int e2 = sys.add_eq_space(g.size(), gab.size());
            sys.op_fixed_after(e2, gamma, delta.entries());
            sys.op_d_after(e2, h2);
            sys.op_d_before(e2, h2);
            sys.rhs(e2, idpat_g);
            // (3b) tau_{b,2b}(F).(beta + gamma) + d h3 + h3 d = 0
            int e3 = sys.add_eq_space(g.size(), f2b.size());
            sys.op_identity(e3, beta);
            sys.op_identity(e3, gamma);
            sys.op_d_after(e3, h3);
            sys.op_d_before(e3, h3);
            // beta and gamma must each be chain maps.
            int e4 = sys.add_eq_space(g.size(), fb.size());
            sys.op_d_after(e4, beta);
            sys.op_d_before(e4, beta);
            int e5 = sys.add_eq_space(g.size(), fb.size());
            sys.op_d_after(e5, gamma);
            sys.op_d_before(e5, gamma);

            auto sol = sys.solve();
            if (!sol) continue;
            out.feasible = true;
            out.alpha = alpha;
            out.delta = delta;
            out.beta = sb.unpack(sys.block_part(*sol, beta));
            out.gamma = sb.unpack(sys.block_part(*sol, gamma));
            out.h_fa = h1s.unpack(sys.block_part(*sol, h1));
            out.h_gb = h2s.unpack(sys.block_part(*sol, h2));
            out.h_coincide = h3s.unpack(sys.block_part(*sol, h3));
            return out;
        }
    }
    out.feasible = false;
    return out;
}

std::vector<Rational> interleaving_candidate_grid(const IntervalComplex& f,
                                                  const IntervalComplex& g) {
    std::vector<Rational> births;
    for (auto& gen : f.generators()) births.push_back(gen.birth);
    for (auto& gen : g.generators()) births.push_back(gen.birth);
    std::set<Rational> grid;
    grid.insert(Rational(0));
    for (std::size_t i = 0; i < births.size(); ++i) {
        for (std::size_t j = 0; j < births.size(); ++j) {
            Rational d = births[i] - births[j];
            if (d < Rational(0)) continue;
            grid.insert(d);
            grid.insert(d / Rational(2));
        }
    }
    return {grid.begin(), grid.end()};
}

ExtRational interleaving_distance(const IntervalComplex& f, const IntervalComplex& g,
                                  long long cap) {
    std::vector<Rational> grid = interleaving_candidate_grid(f, g);
    if (grid.empty()) return ExtRational(Rational(0));
    int n = int(grid.size());
    auto feasible = [&](int ai, int bi) {
        return is_weakly_ab_isomorphic(f, g, grid[ai], grid[bi], cap).feasible;
    };
    // Feasibility is an up-set in (a,b); walk the staircase boundary.
    if (!feasible(n - 1, n - 1)) return ExtRational::infinity();
    ExtRational best = ExtRational::infinity();
    int j = n - 1;
    for (int i = 0; i < n && j >= 0;) {
        ExtRational tot(grid[i] + grid[j]);
        if (best <= ExtRational(grid[i])) break;
        if (feasible(i, j)) {
            best = ExtRational::min(best, tot);
            --j;
        } else {
            ++i;
        }
    }
    return best;
}

MovieBound movie_bound(const Movie& m, const Rational& eps, long long cap) {
    if (!(Rational(0) < eps)) throw error("InvalidMovie", "epsilon must be positive");
    MovieBound out;
    auto cuts = m.breakpoints();
    out.bounds.cuts = cuts;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Rational vmax(0), vmin(0);
        for (int i = 0; i < m.skeleton().size(); ++i) {
            Rational v = m.velocity(i, cuts[k], cuts[k + 1]);
            vmax = Rational::max(vmax, v);
            vmin = Rational::min(vmin, v);
        }
        out.bounds.f.push_back(Rational::max(Rational(0), vmax));
        out.bounds.g.push_back(Rational::max(Rational(0), -vmin));
    }
    out.a_star = out.bounds.integral_g() + eps;
    out.b_star = out.bounds.integral_f() + eps;
    out.witness = is_weakly_ab_isomorphic(m.slice(Rational(0)), m.slice(Rational(1)),
                                          out.a_star, out.b_star, cap);
    out.verified = out.witness.feasible;
    return out;
}

}  // namespace cobar
