#pragma once

#include <map>
#include <vector>

#include "cobar/barcode.hpp"
#include "cobar/graded_map.hpp"

namespace cobar {

// Mapping cone of a chain map phi: X -> Y. Generators are Y's (ids "t:<id>",
// degrees unchanged) followed by X's (ids "s:<id>", degrees lowered by one);
// the differential is the block matrix [[d_Y, phi], [0, d_X]] over F2.
IntervalComplex cone(const GradedMap& phi);

// Ordered pieces G_0..G_{m-1} with degree-(i-j+1) maps phi_{i,j} (i<j)
// subject to the Maurer-Cartan relation
//   phi_{i,j} d_i + sum_{i<k<j} phi_{k,j} phi_{i,k} = d_j phi_{i,j}.
class TwistedComplex {
public:
    static TwistedComplex make(std::vector<IntervalComplex> pieces,
                               std::map<std::pair<int, int>, GradedMap> maps);

    int length() const { return int(pieces_.size()); }
    const std::vector<IntervalComplex>& pieces() const { return pieces_; }
    const IntervalComplex& piece(int i) const { return pieces_[i]; }
    // phi_{i,j}; zero map if absent.
    GradedMap map(int i, int j) const;
    bool has_map(int i, int j) const { return maps_.count({i, j}) != 0; }
    const std::map<std::pair<int, int>, GradedMap>& maps() const { return maps_; }

private:
    std::vector<IntervalComplex> pieces_;
    std::map<std::pair<int, int>, GradedMap> maps_;
};

struct McViolation {
    bool ok = true;
    int i = -1, j = -1;
    std::string generator;  // source generator of the first bad component
    std::string detail;
};

// Verifies the MC relation entrywise over F2 for all i<j.
McViolation validate_mc(const TwistedComplex& t);

// Single complex per the upper-triangular matrix differential: generators of
// G_i re-graded by i-(m-1), ids "p<i>:<id>". Throws error("MCViolation") if
// the MC relation fails (equivalently d^2 != 0).
IntervalComplex totalize(const TwistedComplex& t);

struct Reassociation {
    IntervalComplex left_nested;   // Cone(Cone(...) -> G_{m-1})
    IntervalComplex right_nested;  // Cone(G_0[.] -> Cone(...))
    bool barcodes_equal = false;
};

// Builds both nestings (degree-aligned with totalize) and compares barcodes.
Reassociation reassociate(const TwistedComplex& t);

// Lemma-style dictionary between null homotopies and cone chain maps:
// given psi: X -> Y with null homotopy s (shift -1, psi = ds + sd), produce
// the chain map X[1] -> cone(psi) with matrix [s; id] (signs vanish over F2).
GradedMap homotopy_to_chainmap(const GradedMap& psi, const GradedMap& s);

// Inverse: extract the homotopy from a chain map eta: X[1] -> cone(psi) whose
// projection to X[1] is the identity. Throws error("NotNullHomotopy").
GradedMap chainmap_to_homotopy(const GradedMap& psi, const GradedMap& eta);

}  // namespace cobar
