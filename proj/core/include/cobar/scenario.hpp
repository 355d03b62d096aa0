#pragma once

#include <optional>

#include "cobar/energy.hpp"
#include "cobar/interleave.hpp"
#include "cobar/shadow.hpp"

namespace cobar {

// One intersection point of a pair (N, L): its action value, cohomological
// degree, and a name used as generator id and tag.
struct ScenarioPoint {
    std::string name;
    Rational action;
    int degree = 0;
};

// Action data plus the pairing plan: paired points bound a common finite bar.
struct PairingPlan {
    std::vector<ScenarioPoint> points;
    std::vector<std::pair<std::string, std::string>> pairs;
};

// Hom-barcode surrogate: one generator per point at its action value, one
// differential entry per planned pair. Throws error("InconsistentPairing")
// for pairs of non-positive length or degree step != 1.
IntervalComplex gen_hom_barcode(const PairingPlan& plan, std::optional<int> slope = {});

enum class SplitSide { minus, plus };

// Sub-complexes by slope label with cross-slope blocks as the twisted maps.
// On the minus side pieces are ordered by ascending slope and entries must
// not decrease the label; the plus side mirrors this (descending order,
// entries must not increase the label). Piece degrees are re-graded so that
// totalize round-trips the input's barcode exactly.
struct SlopeSplit {
    TwistedComplex twisted;
    std::vector<int> piece_slopes;             // slope label per twisted position
    std::vector<IntervalComplex> normalized;   // T_{-i}(raw) on minus, T_{+j}(raw) on plus
};
SlopeSplit slope_split(const IntervalComplex& f, SplitSide side = SplitSide::minus);

struct CobordismScenario {
    int m = 1, n = 1;
    std::vector<PairingPlan> nl;  // per minus end, size m
    std::map<std::pair<int, int>, std::vector<Rational>> ll;
    PairingPlan nl_prime;  // the plus end
    std::optional<ShadowRegion> shadow;
    std::optional<Movie> movie;
    // twisted_ends: maps (by point name) between the minus-end Hom pieces
    std::map<std::pair<int, int>, std::vector<std::pair<std::string, std::string>>> end_maps;
    bool no_triple_intersections = true;
    Rational epsilon = Rational(1, 1000);

    ActionData actions() const;
};

struct DistanceReport {
    Rational shadow_value;
    EndShifts shifts;
    bool feasible = false;
    Rational a, b;  // realized pair when feasible
    Rational epsilon;
    IntervalComplex f_minus_tilde, f_plus_tilde;
};

// Distance-vs-shadow check: derives the end decompositions from the movie's
// slices, applies the end shifts, and searches weak (a,b)-isomorphism
// witnesses with a+b <= shadow + epsilon over the candidate grid.
DistanceReport check_distance_vs_shadow(const CobordismScenario& sc, long long cap = 1 << 16);

enum class Verdict { holds, not_applicable, violated };

struct RigidityReport {
    ExtRational delta;
    Rational shadow_value;
    Verdict verdict = Verdict::not_applicable;
    int minus_endpoints = 0;  // sum over ends of the Hom-barcode endpoint counts
    int plus_endpoints = 0;
    int tower_endpoints = 0;  // endpoints of the totalized lifted tower
    std::map<std::pair<int, int>, ExtRational> bij;
    std::map<std::pair<int, int>, bool> bij_in_action_set;
    ExtRational tower_shortest_bar = ExtRational::infinity();
    ExtRational min_energy = ExtRational::infinity();
    std::optional<Bar> witness_cancellation;  // a short bar when shadow >= delta
};

// Intersection-rigidity check: delta from the uniform bound (m>=2) or the
// min positive action gap (m=1); below delta the lifted twisted Hom complex
// must keep every endpoint, and the plus end must carry at least as many.
RigidityReport check_rigidity(const CobordismScenario& sc);

}  // namespace cobar
