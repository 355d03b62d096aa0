#pragma once

#include <string>
#include <vector>

#include "cobar/rational.hpp"

namespace cobar {

struct Point {
    Rational x, y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Piecewise-linear curves in the (s, sigma)-plane with marked end heights.
// Outside s in [-1,1] every curve runs horizontally at a declared end height.
class ShadowRegion {
public:
    static ShadowRegion make(std::vector<std::vector<Point>> curves, std::vector<int> ends_minus,
                             std::vector<int> ends_plus);

    const std::vector<std::vector<Point>>& curves() const { return curves_; }
    const std::vector<int>& ends_minus() const { return ends_minus_; }
    const std::vector<int>& ends_plus() const { return ends_plus_; }

private:
    std::vector<std::vector<Point>> curves_;
    std::vector<int> ends_minus_, ends_plus_;
};

// Exact planar arrangement: curves are split at all intersections, overlapping
// collinear pieces merged, faces traced as directed loops with interior on the
// left. Bounded faces are the loops of positive signed area (per component,
// the unique most-negative loop bounds the unbounded face).
class Arrangement {
public:
    explicit Arrangement(std::vector<std::pair<Point, Point>> segments);

    Rational bounded_area() const;
    // z must not lie on a curve; true iff z sits in a bounded complement face.
    bool point_in_bounded(const Point& z) const;
    bool point_on_curves(const Point& z) const;

    struct Loop {
        std::vector<int> verts;  // closed walk, verts.front() repeated implicitly
        Rational area2;          // twice the signed area
        bool included = true;    // false for each component's unbounded-side cycle
    };
    const std::vector<Loop>& loops() const { return loops_; }
    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    std::vector<Point> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Loop> loops_;
};

std::vector<std::pair<Point, Point>> region_segments(const ShadowRegion& r);

// Exact area of the union of curves and bounded complement faces.
Rational shadow_area(const ShadowRegion& r);

struct EndShifts {
    std::vector<Rational> c_minus;  // c_0..c_{m-1}
    std::vector<Rational> c_plus;   // c'_0..c'_{n-1}
};

// The translation bookkeeping of the distance bound: c_i is the area newly
// enclosed when the fence {-1} x [0,i] is added to the arrangement; c'_j adds
// the fence {+1} x [0,j] and subtracts the signed area between the lower
// envelope of the region and the zero section. Sequences are non-decreasing.
EndShifts end_shifts(const ShadowRegion& r);

struct StepFunction {
    std::vector<Rational> cuts;    // ascending, cuts.front()=-1, cuts.back()=+1
    std::vector<Rational> values;  // values[k] on [cuts[k], cuts[k+1])
    Rational integral() const;
    Rational value_at(const Rational& s) const;
};

struct CompressionResult {
    StepFunction sigma_plus;
    Rational area;         // = integral of sigma_plus
    Rational cover_area;   // total area of the covering grid squares
    Rational pitch;
};

// Covers the region's band part by grid squares of a pitch derived from eps
// and the segment lengths, then reports the resulting non-negative profile
// sigma_plus with sigma_plus(-1) >= m, sigma_plus(+1) >= n and
// area <= shadow_area(r) + eps.
CompressionResult compress(const ShadowRegion& r, const Rational& eps);

// Signed integral over s in [-1,1] of the lower envelope of the region's
// segments (positive where the region sits above the zero section). Throws
// error("BoundaryNotChainDecomposable") if some fiber of the band misses the
// region entirely.
Rational lower_envelope_integral(const ShadowRegion& r);

std::string shadow_svg(const ShadowRegion& r);

}  // namespace cobar
