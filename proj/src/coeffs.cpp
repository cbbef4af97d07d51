#include "anderson/coeffs.hpp"

namespace anderson {

namespace {

Rat qp(int q, int k) {  // q^k as a rational
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

}  // namespace

void MatrixOrds::validate() const {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (!w21.is_finite()) throw std::invalid_argument("ord a21 must be finite");
    switch (form) {
        case Form::Form34:
            if (!w11.is_inf() || !w22.is_inf())
                throw std::invalid_argument("form34 has zero diagonal");
            break;
        case Form::Form35:
            if (!w22.is_inf() || w11 != ExtRat(-1))
                throw std::invalid_argument("form35 needs ord a11 = -1, a22 = 0");
            break;
        case Form::General:
            break;
    }
}

MatrixOrds make_form34_uv(int q, ExtRat u, ExtRat v) {
    MatrixOrds m;
    m.q = q;
    m.form = Form::Form34;
    m.w11 = ExtRat::infinity();
    m.w12 = std::move(u);
    m.w21 = std::move(v);
    m.w22 = ExtRat::infinity();
    m.validate();
    return m;
}

MatrixOrds make_form34_vt(int q, ExtRat v, ExtRat t) {
    MatrixOrds m = make_form34_uv(q, ExtRat::infinity(), std::move(v));
    if (!t.is_finite()) throw std::invalid_argument("t must be finite");
    m.t_override = std::move(t);
    return m;
}

MatrixOrds make_form35_uv(int q, ExtRat u, ExtRat v) {
    MatrixOrds m;
    m.q = q;
    m.form = Form::Form35;
    m.w11 = ExtRat(-1);
    m.w12 = std::move(u);
    m.w21 = std::move(v);
    m.w22 = ExtRat::infinity();
    m.validate();
    return m;
}

MatrixOrds make_form35_vt(int q, ExtRat v, ExtRat t) {
    MatrixOrds m = make_form35_uv(q, ExtRat::infinity(), std::move(v));
    if (!t.is_finite()) throw std::invalid_argument("t must be finite");
    m.t_override = std::move(t);
    return m;
}

MatrixOrds make_general(int q, ExtRat w11, ExtRat w12, ExtRat w21, ExtRat w22) {
    MatrixOrds m;
    m.q = q;
    m.form = Form::General;
    m.w11 = std::move(w11);
    m.w12 = std::move(w12);
    m.w21 = std::move(w21);
    m.w22 = std::move(w22);
    m.validate();
    return m;
}

const char* coef_name(Coef c) {
    switch (c) {
        case Coef::A0: return "a0";
        case Coef::A1: return "a1";
        case Coef::A2: return "a2";
        case Coef::A3: return "a3";
        case Coef::A4: return "a4";
        case Coef::B12: return "b12";
        case Coef::B13: return "b13";
        case Coef::B14: return "b14";
        case Coef::B24: return "b24";
    }
    return "?";
}

const ExtRat& CoeffVals::head(int k) const {
    switch (k) {
        case 0: return a0;
        case 1: return a1;
        case 2: return a2;
        case 3: return a3;
        case 4: return a4;
    }
    throw std::out_of_range("head index");
}

bool CoeffVals::head_tied() const {
    return ties.count(Coef::A1) || ties.count(Coef::A2) || ties.count(Coef::A3);
}

bool CoeffVals::tail_uncertain() const {
    return b12_lower_bound || ties.count(Coef::B12) || ties.count(Coef::B13) ||
           ties.count(Coef::B14) || ties.count(Coef::B24);
}

namespace {

// min over a formula's term valuations, flagging a tie when the minimum is
// achieved twice among finite terms.
ExtRat min_of_terms(const std::vector<ExtRat>& terms, bool* tied) {
    ExtRat best = ExtRat::infinity();
    int hits = 0;
    for (const auto& t : terms) {
        if (t < best) {
            best = t;
            hits = 1;
        } else if (t == best && t.is_finite()) {
            ++hits;
        }
    }
    *tied = hits > 1;
    return best;
}

}  // namespace

CoeffVals coeff_valuations(const MatrixOrds& m) {
    m.validate();
    const int q = m.q;
    const Rat v = m.w21.value();
    const ExtRat& w11 = m.w11;
    const ExtRat& w22 = m.w22;
    const ExtRat& u = m.w12;

    auto term = [&](const ExtRat& w, int pw, const Rat& shift) {
        // ord( w-entry^{q^pw} * theta^{...} / a21^{...} ) assembled by caller;
        // here: w scaled by q^pw plus a fixed rational shift.
        return w.scale(qp(q, pw)) + ExtRat(shift);
    };

    CoeffVals c;
    auto note = [&](Coef which, bool tied) {
        if (tied) c.ties.insert(which);
    };
    bool tied = false;

    // a4 = theta^{q^3+q^2} / a21^{q^2}
    c.a4 = ExtRat(-qp(q, 3) - qp(q, 2) - qp(q, 2) * v);

    // a3 = a11^{q^2} theta^{q^2} / a21^{q^2} + a22^q theta^{q^2} / a21^q
    c.a3 = min_of_terms({term(w11, 2, -qp(q, 2) - qp(q, 2) * v),
                         term(w22, 1, -qp(q, 2) - qp(q, 1) * v)},
                        &tied);
    note(Coef::A3, tied);

    // a2 = theta^q/a21 + theta^{q^2}/a21^{q^2} + a11^q a22^q / a21^q - a12^q
    c.a2 = min_of_terms({ExtRat(-qp(q, 1) - v),
                         ExtRat(-qp(q, 2) - qp(q, 2) * v),
                         w11.scale(qp(q, 1)) + w22.scale(qp(q, 1)) + ExtRat(-qp(q, 1) * v),
                         u.scale(qp(q, 1))},
                        &tied);
    note(Coef::A2, tied);

    // a1 = a11/a21 + a22^q/a21^q
    c.a1 = min_of_terms({w11 + ExtRat(-v), term(w22, 1, -qp(q, 1) * v)}, &tied);
    note(Coef::A1, tied);

    // a0 = 1/a21
    c.a0 = ExtRat(-v);

    // b14 = -(theta^{q^3} + theta^{q^2}) / a21^{q^2}: numerator ords -q^3 and
    // -q^2 are distinct, so no tie is possible.
    c.b14 = ExtRat(-qp(q, 3) - qp(q, 2) * v);

    // b13 = -a11^{q^2}/a21^{q^2} - a22^q/a21^q
    c.b13 = min_of_terms({term(w11, 2, -qp(q, 2) * v), term(w22, 1, -qp(q, 1) * v)}, &tied);
    note(Coef::B13, tied);

    // b12 = -1/a21 - 1/a21^{q^2}; the terms tie exactly at v = 0, where only
    // the bound ord b12 >= 0 survives.
    c.b12 = min_of_terms({ExtRat(-v), ExtRat(-qp(q, 2) * v)}, &tied);
    note(Coef::B12, tied);
    if (v == 0) c.b12_lower_bound = true;

    // b24 = 1/a21^{q^2}
    c.b24 = ExtRat(-qp(q, 2) * v);

    if (m.t_override) {
        c.a2 = *m.t_override;
        c.ties.erase(Coef::A2);
    }
    return c;
}

std::vector<NewtonPoint> head_points(const CoeffVals& c, int q) {
    std::vector<NewtonPoint> pts;
    long long x = 1;
    for (int k = 0; k <= 4; ++k) {
        pts.push_back({x, c.head(k)});
        x *= q;
    }
    return pts;
}

const char* uv_domain_name(UvDomain d) {
    switch (d) {
        case UvDomain::D12: return "D12";
        case UvDomain::D13: return "D13";
        case UvDomain::D23: return "D23";
        case UvDomain::R1: return "R1";
        case UvDomain::R2: return "R2";
        case UvDomain::R3: return "R3";
        case UvDomain::Vertex: return "Vertex";
    }
    return "?";
}

UvDomain uv_domain(int q, const Rat& u, const Rat& v) {
    const Rat t1 = -qp(q, 1) - v;
    const Rat t2 = -qp(q, 2) - qp(q, 2) * v;
    const Rat t3 = qp(q, 1) * u;
    const Rat m = std::min({t1, t2, t3});
    const bool m1 = t1 == m, m2 = t2 == m, m3 = t3 == m;
    if (m1 && m2 && m3) return UvDomain::Vertex;
    if (m1 && m2) return UvDomain::R1;
    if (m1 && m3) return UvDomain::R2;
    if (m2 && m3) return UvDomain::R3;
    if (m1) return UvDomain::D12;
    if (m2) return UvDomain::D13;
    return UvDomain::D23;
}

Rat induced_t(int q, const Rat& u, const Rat& v) {
    return std::min({-qp(q, 1) - v, -qp(q, 2) - qp(q, 2) * v, qp(q, 1) * u});
}

}  // namespace anderson
