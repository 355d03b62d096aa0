#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cobar/rational.hpp"

namespace cobar {

// One summand k_{[birth,inf)} placed in cohomological degree `degree`.
// `slope` is the end label of the cut-off splitting (when the complex models
// an end slice of a cobordism); `tag` carries provenance such as an
// intersection-point name.
struct Generator {
    std::string id;
    int degree = 0;
    Rational birth;
    std::optional<int> slope;
    std::string tag;
};

struct Violation {
    bool ok = true;
    std::string kind;    // DegreeMismatch | BirthOrderViolation | DifferentialNotSquareZero
    std::string detail;  // first offending entry
};

// A finite complex of shifted half-infinite interval modules over F2.
// Differential entries are (source, target) generator pairs; a nonzero entry
// g -> h requires degree(h) == degree(g)+1 and birth(h) >= birth(g), and the
// entry matrix squares to zero over F2. Immutable after construction.
class IntervalComplex {
public:
    IntervalComplex() = default;

    // Validates; throws error("InvalidComplex") listing the violation.
    static IntervalComplex make(std::vector<Generator> gens,
                                std::vector<std::pair<std::string, std::string>> entries);
    // Index-level variant used internally.
    static IntervalComplex make_indexed(std::vector<Generator> gens,
                                        std::vector<std::pair<int, int>> entries);

    int size() const { return int(gens_.size()); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(int i) const { return gens_[i]; }
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    int index_of(const std::string& id) const;  // -1 if absent
    bool has_entry(int src, int tgt) const;

    // Column/row views of the differential.
    const std::vector<int>& d_out(int src) const { return out_[src]; }
    const std::vector<int>& d_in(int tgt) const { return in_[tgt]; }

    bool empty() const { return gens_.empty(); }

private:
    std::vector<Generator> gens_;
    std::vector<std::pair<int, int>> entries_;  // sorted
    std::vector<std::vector<int>> out_, in_;
    std::unordered_map<std::string, int> index_;

    friend Violation validate(const IntervalComplex&);
};

// Checks the three invariants; reports the first violated entry.
Violation validate(const IntervalComplex& c);

// Every birth shifted by c; matrix and degrees unchanged.
IntervalComplex translate(const IntervalComplex& c, const Rational& by);

// Degrees shifted by -k (a generator of degree d appears in F[k] in degree d-k).
IntervalComplex degree_shift(const IntervalComplex& c, int k);

// Disjoint union with block-diagonal differential. Throws error("IdCollision")
// if generator ids overlap. Over F2 no sign twist is needed.
IntervalComplex direct_sum(const IntervalComplex& a, const IntervalComplex& b);

}  // namespace cobar
