#pragma once

#include <vector>

#include "cobar/graded_map.hpp"

namespace cobar {

// One-parameter family of interval complexes: a fixed generator/differential
// skeleton whose births follow piecewise-linear trajectories over s in [0,1].
// The skeleton's births must equal the trajectories at s=0, and the
// instantaneous complex must be valid at every s (checked at breakpoints).
class Movie {
public:
    // trajectories[i] lists (s, birth) breakpoints for skeleton generator i,
    // s strictly increasing from 0 to 1.
    static Movie make(IntervalComplex skeleton,
                      std::vector<std::vector<std::pair<Rational, Rational>>> trajectories);

    const IntervalComplex& skeleton() const { return skeleton_; }
    const std::vector<std::vector<std::pair<Rational, Rational>>>& trajectories() const {
        return traj_;
    }
    Rational birth_at(int gen, const Rational& s) const;
    // Left/right-sided velocity data: maximal breakpoint set across generators.
    std::vector<Rational> breakpoints() const;
    Rational velocity(int gen, const Rational& seg_start, const Rational& seg_end) const;
    IntervalComplex slice(const Rational& s) const;

private:
    IntervalComplex skeleton_;
    std::vector<std::vector<std::pair<Rational, Rational>>> traj_;
};

// Piecewise-constant non-negative speed bounds on [0,1]; value[k] holds on
// [cuts[k], cuts[k+1]).
struct SpeedBounds {
    std::vector<Rational> cuts;  // size n+1, ascending, cuts.front()=0, back()=1
    std::vector<Rational> f, g;  // size n each, >= 0
    Rational integral_f() const;
    Rational integral_g() const;
};

struct WeakIsoWitness {
    bool feasible = false;
    // alpha, delta: F -> T_a G; beta, gamma: G -> T_b F; homotopies witness
    // conditions (1)-(3).
    GradedMap alpha, delta, beta, gamma;
    GradedMap h_fa, h_gb, h_coincide;
    long long combinations_tried = 0;
};

// Def.-style weak (a,b)-isomorphism test: searches chain maps
// alpha,delta: F -> T_aG and beta,gamma: G -> T_bF with
//   (1) T_a(beta) . alpha  homotopic to  tau_{0,a+b}(F),
//   (2) T_b(delta) . gamma homotopic to  tau_{0,a+b}(G),
//   (3) tau_{a,2a}(G).alpha ~ tau_{a,2a}(G).delta and
//       tau_{b,2b}(F).beta  ~ tau_{b,2b}(F).gamma.
// alpha and delta are enumerated over chain maps modulo homotopy (conditions
// are invariant under homotopy of either); for each class pair the remaining
// constraints are one F2 linear system in (beta, gamma, homotopies).
// Throws error("NegativeShift") for a<0 or b<0 and error("CapExceeded") when
// the class enumeration would exceed `cap` joint solves.
WeakIsoWitness is_weakly_ab_isomorphic(const IntervalComplex& f, const IntervalComplex& g,
                                       const Rational& a, const Rational& b,
                                       long long cap = 1 << 16);

// Candidate shift grid for the distance search: 0. pooled birth differences
// and their halves (condition (3) composites land in T_{2a}/T_{2b} targets).
std::vector<Rational> interleaving_candidate_grid(const IntervalComplex& f,
                                                  const IntervalComplex& g);

// min(a+b) over the candidate grid such that (f,g) are weakly
// (a,b)-isomorphic; +inf when no grid pair is feasible. Feasibility is
// monotone in (a,b), so the search walks the staircase boundary.
ExtRational interleaving_distance(const IntervalComplex& f, const IntervalComplex& g,
                                  long long cap = 1 << 16);

struct MovieBound {
    SpeedBounds bounds;
    Rational a_star, b_star;  // integral g + eps, integral f + eps
    bool verified = false;
    WeakIsoWitness witness;
};

// Speed-bound certificate: f bounds positive birth velocities, g negative
// ones; slices 0 and 1 are then weakly (integral g + eps, integral f + eps)-
// isomorphic, verified by the solver.
MovieBound movie_bound(const Movie& m, const Rational& eps = Rational(1, 1000),
                       long long cap = 1 << 16);

}  // namespace cobar
