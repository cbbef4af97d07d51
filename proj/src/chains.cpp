#include "anderson/chains.hpp"

#include <algorithm>

namespace anderson {

namespace {

Rat qpow(int q, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

std::string hull_signature(const std::vector<NewtonPoint>& pts) {
    NewtonPolygon poly = lower_hull(pts);
    std::string sig;
    for (const auto& v : poly.vertices) {
        if (!sig.empty()) sig += '-';
        sig += std::to_string(v.x);
    }
    return sig;
}

}  // namespace

ChainTrace minimal_sequence(const CoeffVals& c, int q, const Rat& start, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");

    ChainTrace tr;
    tr.q = q;
    tr.start = start;
    tr.coeff_head_tied = c.head_tied();
    tr.coeff_tail_uncertain = c.tail_uncertain();

    const std::vector<NewtonPoint> head = head_points(c, q);

    struct TailTerm {
        int id;          // 2,3,4 for b1k; 24 for b24
        const ExtRat* b;
        int power;       // k in q^k
        int back;        // how many steps back the term reaches
        bool uncertain;  // coefficient ord is only a lower bound
    };
    const std::vector<TailTerm> terms = {
        {4, &c.b14, 4, 1, false},
        {3, &c.b13, 3, 1, c.ties.count(Coef::B13) > 0},
        {2, &c.b12, 2, 1, c.b12_lower_bound || c.ties.count(Coef::B12) > 0},
        {24, &c.b24, 4, 2, false},
    };

    for (int i = 1; i <= max_iter; ++i) {
        ExtRat g = ExtRat::infinity();
        int hits = 0, win = 0;
        bool win_uncertain = false;
        for (const auto& t : terms) {
            if (i == 1 && t.back == 2) continue;  // first equation has no b24 term
            const Rat& prev = i - t.back >= 0 ? tr.at(i - t.back) : tr.start;
            ExtRat val = *t.b + ExtRat(prev * qpow(q, t.power));
            if (val < g) {
                g = val;
                hits = 1;
                win = t.id;
                win_uncertain = t.uncertain;
            } else if (val == g && val.is_finite()) {
                ++hits;
                win_uncertain = win_uncertain || t.uncertain;
            }
        }
        if (g.is_inf()) throw std::logic_error("tail valuation cannot be infinite");

        if (hits > 1) tr.tie_steps.push_back(i);
        if (win_uncertain) tr.uncertain_steps.push_back(i);

        Rat v = leftmost_slope(head, g);

        std::vector<NewtonPoint> all = head;
        all.push_back({0, g});
        NewtonPolygon poly = lower_hull(all);
        tr.hull_types.push_back(hull_signature(all));
        tr.first_vertex.push_back(poly.vertices.size() >= 2 ? poly.vertices[1].x : 0);
        tr.decisive_term.push_back(win);
        tr.seq.push_back(std::move(v));
    }
    return tr;
}

std::string GrowthModel::str() const {
    switch (kind) {
        case Growth::None:
            return "none";
        case Growth::Linear:
            return "linear;alpha=" + rat_str(alpha) + ";beta=" + rat_str(beta);
        case Growth::Exponential:
            return "exp;alpha=" + rat_str(alpha) + ";beta=" + rat_str(beta) +
                   ";gamma=" + rat_str(gamma);
    }
    return "none";
}

const char* chain_kind_name(ChainKind k) {
    switch (k) {
        case ChainKind::Diverges: return "DIV";
        case ChainKind::Bounded: return "BOUND";
        case ChainKind::Indeterminate: return "INDET";
    }
    return "?";
}

const char* h1_name(H1 h) {
    switch (h) {
        case H1::Zero: return "0";
        case H1::Four: return "4";
        case H1::Unknown: return "UNKNOWN";
        case H1::Indeterminate: return "INDET";
    }
    return "?";
}

namespace {

Rat rat_pow(const Rat& g, size_t e) {
    Rat r = 1;
    for (size_t i = 0; i < e; ++i) r *= g;
    return r;
}

}  // namespace

ChainVerdict classify_chain(const ChainTrace& t, int window) {
    if (window < 4) throw std::invalid_argument("window must be >= 4");
    const size_t n = t.length();
    if (n < static_cast<size_t>(window))
        throw std::invalid_argument("trace too short for window");

    ChainVerdict out;
    const size_t w = static_cast<size_t>(window);
    out.window_begin = n - w;
    out.window_end = n;

    // Hull type must have settled over the window (steps are 1-based; step i
    // produced value at absolute index i).
    for (size_t i = std::max<size_t>(out.window_begin, 1) + 1; i < n; ++i)
        if (t.hull_types[i - 1] != t.hull_types[std::max<size_t>(out.window_begin, 1) - 1])
            return out;

    std::vector<Rat> d;
    for (size_t i = out.window_begin; i + 1 < n; ++i) d.push_back(t.at(i + 1) - t.at(i));

    const bool unclean = !t.clean();
    GrowthModel m;

    bool all_equal = std::all_of(d.begin(), d.end(), [&](const Rat& x) { return x == d[0]; });
    if (all_equal) {
        m.kind = Growth::Linear;
        m.beta = d[0];
        m.alpha = t.at(out.window_begin) - m.beta * Rat(static_cast<long long>(out.window_begin));
        out.model = m;
        if (m.beta > 0) {
            out.kind = ChainKind::Diverges;
        } else if (m.beta == 0) {
            out.kind = unclean ? ChainKind::Indeterminate : ChainKind::Bounded;
        }  // beta < 0: heads to -inf, neither small nor finite-limit
        return out;
    }

    bool any_zero = std::any_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
    if (any_zero) return out;

    Rat gamma = d[1] / d[0];
    for (size_t i = 1; i + 1 < d.size(); ++i)
        if (d[i + 1] / d[i] != gamma) return out;
    if (gamma <= 0 || gamma == 1) return out;

    m.kind = Growth::Exponential;
    m.gamma = gamma;
    m.beta = d[0] / (rat_pow(gamma, out.window_begin) * (gamma - 1));
    m.alpha = t.at(out.window_begin) - m.beta * rat_pow(gamma, out.window_begin);
    out.model = m;
    if (gamma > 1) {
        if (m.beta > 0) out.kind = ChainKind::Diverges;
        // beta < 0 with gamma > 1 heads to -inf: Indeterminate
    } else {
        out.kind = unclean ? ChainKind::Indeterminate : ChainKind::Bounded;
    }
    return out;
}

ProbeResult h1_probe(const CoeffVals& c, int q, int max_iter, int window) {
    ProbeResult res;

    NewtonPolygon head = lower_hull(head_points(c, q));
    std::vector<RootOrd> roots = root_valuations(head, q);
    res.start = roots.back().ord;  // smallest: the x_40 chain

    res.trace = minimal_sequence(c, q, res.start, max_iter);
    res.verdict = classify_chain(res.trace, window);

    switch (res.verdict.kind) {
        case ChainKind::Diverges:
            if (res.trace.coeff_head_tied) {
                // Head ords are only lower bounds; the hull (and hence the
                // whole recursion) is not trustworthy in either direction.
                res.region = {H1::Indeterminate, "coefficient tie (jump possible)", false};
            } else {
                res.region = {H1::Four, "Prop 4.3 (divergent minimal chain)", false};
            }
            break;
        case ChainKind::Bounded:
            res.region = {H1::Indeterminate, "bounded minimal chain; h1<4 unproven", false};
            break;
        case ChainKind::Indeterminate:
            res.region = {H1::Indeterminate,
                          res.trace.clean() ? "no stable growth model" : "ties in chain",
                          false};
            break;
    }
    return res;
}

}  // namespace anderson
