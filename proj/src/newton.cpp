#include "anderson/newton.hpp"

#include <algorithm>

namespace anderson {

namespace {

Rat slope_between(const NewtonPoint& a, const NewtonPoint& b) {
    return (b.y.value() - a.y.value()) / Rat(b.x - a.x);
}

}  // namespace

NewtonPolygon lower_hull(const std::vector<NewtonPoint>& points) {
    std::vector<NewtonPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        if (p.y.is_finite()) pts.push_back(p);
    if (pts.size() < 2) throw std::invalid_argument("degenerate polygon");

    std::sort(pts.begin(), pts.end(),
              [](const NewtonPoint& a, const NewtonPoint& b) { return a.x < b.x; });
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x == pts[i - 1].x)
            throw std::invalid_argument("duplicate abscissa");

    // Monotone scan; the >= pop merges collinear runs into one segment.
    std::vector<NewtonPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               slope_between(hull[hull.size() - 2], hull.back()) >=
                   slope_between(hull.back(), p))
            hull.pop_back();
        hull.push_back(p);
    }

    NewtonPolygon poly;
    poly.vertices = std::move(hull);
    for (size_t i = 1; i < poly.vertices.size(); ++i)
        poly.segments.push_back({slope_between(poly.vertices[i - 1], poly.vertices[i]),
                                 poly.vertices[i].x - poly.vertices[i - 1].x});
    return poly;
}

namespace {

// log_q(x) for exact powers of q; -1 otherwise.
int power_exponent(long long x, int q) {
    if (x < 1) return -1;
    int e = 0;
    while (x > 1) {
        if (x % q != 0) return -1;
        x /= q;
        ++e;
    }
    return e;
}

}  // namespace

std::vector<RootOrd> root_valuations(const NewtonPolygon& p, int q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::vector<int> exps;
    exps.reserve(p.vertices.size());
    for (const auto& v : p.vertices) {
        int e = power_exponent(v.x, q);
        if (e < 0) throw std::invalid_argument("hull abscissa not a power of q");
        exps.push_back(e);
    }
    std::vector<RootOrd> roots;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
        roots.push_back({-p.segments[i].slope, exps[i + 1] - exps[i]});
    return roots;
}

Rat leftmost_slope(const std::vector<NewtonPoint>& head, const ExtRat& tail_ord) {
    if (tail_ord.is_inf()) throw std::invalid_argument("infinite tail ordinate");
    bool seen = false;
    Rat best;
    for (const auto& p : head) {
        if (p.y.is_inf()) continue;
        if (p.x <= 0) throw std::invalid_argument("head abscissa must be positive");
        Rat cand = (tail_ord.value() - p.y.value()) / Rat(p.x);
        if (!seen || cand > best) {
            best = cand;
            seen = true;
        }
    }
    if (!seen) throw std::invalid_argument("no finite head points");
    return best;
}

}  // namespace anderson
