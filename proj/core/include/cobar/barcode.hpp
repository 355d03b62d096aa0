#pragma once

#include <string>
#include <vector>

#include "cobar/interval_complex.hpp"

namespace cobar {

// A bar [birth, death) in one cohomological degree; death may be +infinity.
struct Bar {
    int degree = 0;
    Rational birth;
    ExtRational death = ExtRational::infinity();

    ExtRational length() const {
        if (death.is_infinite()) return ExtRational::infinity();
        return ExtRational(death.finite() - birth);
    }
    friend bool operator==(const Bar& a, const Bar& b) {
        return a.degree == b.degree && a.birth == b.birth && a.death == b.death;
    }
    friend bool operator<(const Bar& a, const Bar& b);
};

// Multiset of bars, kept canonically sorted.
struct Barcode {
    std::vector<Bar> bars;

    void canonicalize();
    friend bool operator==(const Barcode& a, const Barcode& b) { return a.bars == b.bars; }
};

// Structure-theorem decomposition by persistence-style column reduction with
// the clearing optimization. Generators are processed in increasing
// (birth, degree, id) order; a pivot pairing (g, h) emits [birth(g), birth(h))
// in degree(g), dropped when the births coincide (k_{[a,a)} = 0). Unpaired
// generators emit [birth, inf).
Barcode decompose(const IntervalComplex& f);

// Unoptimized reference reduction, kept for differential testing.
Barcode decompose_reference(const IntervalComplex& f);

// Same pairing under a caller-supplied admissible processing order
// (a permutation of generator indices; sources must precede targets).
Barcode decompose_ordered(const IntervalComplex& f, const std::vector<int>& order);

// All births plus all finite deaths; births carry the bar degree, deaths the
// degree of the killing generator (bar degree + 1).
std::vector<std::pair<Rational, int>> endpoints(const Barcode& b);

// Min over finite bars of death - birth; +inf when none.
ExtRational shortest_bar(const Barcode& b);

// One horizontal segment per bar, grouped by degree. Presentation only.
std::string barcode_svg(const Barcode& b);

}  // namespace cobar
