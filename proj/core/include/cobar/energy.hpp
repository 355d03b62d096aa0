#pragma once

#include <map>
#include <vector>

#include "cobar/cones.hpp"

namespace cobar {

// Min over nonzero entries (g -> h) of birth(h) - birth(g); +inf for the zero
// map (empty minimum: zero maps impose no bar-cancellation constraint).
ExtRational map_energy(const GradedMap& phi);

struct LiftCertificate {
    ExtRational shift;  // the maximal b; +inf when phi is null-homotopic
    GradedMap lift;     // source -> translate(target, -b); zero map when shift is +inf
    GradedMap witness;  // homotopy with tau_{-b,0}(target) . lift + phi = d w + w d
};

// Largest b >= 0 admitting a chain map lift: source -> translate(target, -b)
// with tau . lift homotopic to phi. Scans the candidate grid
// {0} u {birth(target gen) - birth(source gen) >= 0} descending; feasibility
// at each b is one F2 linear solve. The certificate fixes the canonical
// (lexicographically least) solution.
LiftCertificate max_lift_shift(const ChainMap& phi);

struct LiftTower {
    TwistedComplex base;
    std::map<std::pair<int, int>, ExtRational> shifts;  // b_{i,j} for i<j
    // Full-span lifted tower: piece i is translate(G_i, -applied[i]) with
    // applied[0]=0, maps are the pushed maximal lifts; passes validate_mc.
    std::vector<Rational> applied;
    TwistedComplex lifted;
};

// The b_{i,j} recursion: for j-i=1, b = max_lift_shift; for j-i>=2,
// b_tilde = min_k (b_{i,k} + b_{k,j}) and b_{i,j} is the largest
// b in [0, b_tilde] such that phi_{i,j} lifts to an exact null homotopy of
// the assembled psi-tilde_{i,j;b} (lift condition up to homotopy of maps
// into Cone(psi_{i,j})). The fixed maximal lifts are reused throughout.
LiftTower lift_tower(const TwistedComplex& t);

// min{ a1 - a0 - a01 > 0 } over the three action sets; +inf if empty.
ExtRational delta_two_ends(const std::vector<Rational>& a0, const std::vector<Rational>& a1,
                           const std::vector<Rational>& a01);

// Action data: nl[i] lists the A_i values over N cap L_i; ll[(i,j)] the
// A_{i,j} values over L_i cap L_j for i<j.
struct ActionData {
    std::vector<std::vector<Rational>> nl;
    std::map<std::pair<int, int>, std::vector<Rational>> ll;
    int ends() const { return int(nl.size()); }
};

// min positive A_j(p_j) - A_i(p_i) over i <= j.
ExtRational delta_simple(const ActionData& a);

// min over chains i < i_1 < ... < i_k < j (k>=0) of
// A_j(p_j) - A_i(p_i) - sum of A_{s,t} along the chain, restricted to
// strictly positive values; i=j, k=0 reads as A_i(p) - A_i(p').
ExtRational delta_uniform(const ActionData& a);

// All chain sums A_{i,i1} + ... + A_{ik,j} (k>=0; k=0 is A_{i,j}) -- the
// membership set for the b_{i,j} of the recursion.
std::vector<Rational> action_chain_sums(const ActionData& a, int i, int j);

}  // namespace cobar
