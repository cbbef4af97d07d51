#pragma once

#include "anderson/extrat.hpp"

#include <vector>

namespace anderson {

/// Newton point (x, ord c) of a polynomial term c*X^x. An infinite ordinate
/// marks a vanishing coefficient; such points never reach a hull.
struct NewtonPoint {
    long long x = 0;
    ExtRat y;

    bool operator==(const NewtonPoint&) const = default;
};

struct HullSegment {
    Rat slope;
    long long xspan = 0;  // positive

    bool operator==(const HullSegment&) const = default;
};

/// Lower convex hull of Newton points. Slopes strictly increase left to
/// right; collinear interior points are merged into one segment.
struct NewtonPolygon {
    std::vector<NewtonPoint> vertices;  // finite ordinates, increasing x
    std::vector<HullSegment> segments;

    bool operator==(const NewtonPolygon&) const = default;
};

/// Builds the lower hull. Points with infinite ordinate are dropped first;
/// fewer than two finite points is a degenerate polygon (error). Abscissae
/// must be distinct.
NewtonPolygon lower_hull(const std::vector<NewtonPoint>& points);

struct RootOrd {
    Rat ord;
    int mult = 0;  // F_q-dimension: j - i for a segment q^i -> q^j

    bool operator==(const RootOrd&) const = default;
};

/// Root valuations of a head polygon: minus slopes of the segments, with
/// multiplicity log_q(x2) - log_q(x1) per segment (F_q-dimension convention,
/// so a full head polygon q^0..q^4 always totals 4). Ordered by decreasing
/// ord (leftmost segment first). All hull abscissae must be powers of q.
std::vector<RootOrd> root_valuations(const NewtonPolygon& p, int q);

/// Minus slope of the leftmost segment of the hull of {(0, tail_ord)} + head.
/// Since (0, tail_ord) is the leftmost point, this is the max over the finite
/// head points of (tail_ord - y)/x. tail_ord must be finite, head nonempty.
Rat leftmost_slope(const std::vector<NewtonPoint>& head, const ExtRat& tail_ord);

}  // namespace anderson
