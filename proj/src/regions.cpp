#include "anderson/regions.hpp"

#include "json.hpp"

#include <algorithm>

namespace anderson {

namespace {

Rat qpow(int q, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

Rat qq1(int q) { return qpow(q, 2) / Rat(q - 1); }  // q^2/(q-1)

}  // namespace

std::pair<Rat, Rat> angle_vertex_minus(int q) { return {-qq1(q), qq1(q)}; }
std::pair<Rat, Rat> angle_vertex_plus(int q) { return {Rat(1, q - 1), -qq1(q)}; }

bool in_angle_minus(int q, const Rat& v, const Rat& t) {
    return v <= -qq1(q) && t >= -v;
}

bool in_angle_plus(int q, const Rat& v, const Rat& t) {
    return v >= Rat(1, q - 1) && t >= -qpow(q, 2) * v;
}

RegionVerdict classify_34(int q, const Rat& v, const Rat& t) {
    if (in_angle_minus(q, v, t))
        return {H1::Zero, "Thm 5.1 (A-)", v == -qq1(q) || t == -v};
    if (in_angle_plus(q, v, t))
        return {H1::Zero, "Thm 5.1 (A+)", v == Rat(1, q - 1) || t == -qpow(q, 2) * v};
    return {H1::Four, "Thm 5.1", false};
}

RegionVerdict classify_uv_34(int q, const Rat& u, const Rat& v) {
    const Rat big = qq1(q);
    const UvDomain dom = uv_domain(q, u, v);

    switch (dom) {
        case UvDomain::D12:
        case UvDomain::D13:
        case UvDomain::D23: {
            RegionVerdict rv = classify_34(q, v, induced_t(q, u, v));
            if (rv.h1 == H1::Four && u > -big && v > -big) rv.source = "Prop 6.2";
            return rv;
        }
        case UvDomain::R2:
            // tie locus v = -qu - q; h1 = 0 only possible on the subray with
            // v <= -q^2/(q-1) (initial point (1/(q-1), -q^2/(q-1)))
            if (v == -big)
                return {H1::Indeterminate, "initial point of Rbar3 (possible h1=0)", true};
            if (v < -big)
                return {H1::Indeterminate, "subray Rbar3 (possible h1=0)", false};
            break;
        case UvDomain::R3:
            // tie locus v = -u/q - 1; subray with v >= 1/(q-1)
            if (v == Rat(1, q - 1))
                return {H1::Indeterminate, "initial point of Rbar2 (possible h1=0)", true};
            if (v > Rat(1, q - 1))
                return {H1::Indeterminate, "subray Rbar2 (possible h1=0)", false};
            break;
        case UvDomain::R1:
        case UvDomain::Vertex:
            break;  // v = -q/(q+1), inside the middle band
    }
    // Remaining ray points sit in -q^2/(q-1) < v < 1/(q-1), where Thm 5.1
    // gives h1 = 4 for every t, jump or not.
    if (u > -big && v > -big) return {H1::Four, "Prop 6.2", false};
    return {H1::Four, "Thm 5.1 middle band (any t)", false};
}

bool in_dual_chart(int q, const Rat& v, const Rat& t) {
    return in_angle_plus(q, v, t) && t <= -v - q;
}

std::pair<Rat, Rat> dual_params(int q, const Rat& v, const Rat& t) {
    if (!in_dual_chart(q, v, t)) throw std::domain_error("outside duality chart U");
    return {-q * v - q, 2 * q * v + t / q + q};
}

RegionVerdict classify_35_q2(const std::optional<Rat>& u, const Rat& v,
                             const std::optional<Rat>& t_override) {
    const int q = 2;
    if (t_override) {
        const Rat& t = *t_override;
        const Rat jump_line = Rat(-16, 7) * v + Rat(-24, 7);
        if (v >= 2 && t >= jump_line)
            return {H1::Zero, "Prop 8.2", v == 2 || t == jump_line};
        if (v >= 0 && v < 2 && t >= jump_line)
            return {H1::Four, "Prop 8.1", v == 0 || t == jump_line};
        if (v > Rat(-4, 3) && v < Rat(-1, 3) && t >= -4 * v - 6)
            return {H1::Four, "Prop 8.3", t == -4 * v - 6};
        // An override matching the exact interior ord a2 adds nothing; any
        // other override lands outside the proved jump regions.
        if (!u || t != induced_t(q, *u, v))
            return {H1::Unknown, "§9 open", false};
    }
    if (!u) return {H1::Unknown, "§9 open (needs u or t)", false};

    switch (uv_domain(q, *u, v)) {
        case UvDomain::D13:
            if (v >= 0) return {H1::Four, "Prop 7.1", v == 0};
            return {H1::Four, "Prop 7.2", false};  // D13 forces v > -2/3
        case UvDomain::D12:
            if (v >= Rat(-4, 3)) return {H1::Four, "Prop 7.3", v == Rat(-4, 3)};
            return {H1::Four, "Prop 7.4", false};
        case UvDomain::D23:
            if (v <= Rat(-4, 3) && -2 * *u - 4 <= v && v <= -2 * *u - 3)
                return {H1::Four, "Prop 7.5 (D23 1.1.2)",
                        v == Rat(-4, 3) || v == -2 * *u - 4 || v == -2 * *u - 3};
            return {H1::Unknown, "§9 open", false};
        default:
            return {H1::Unknown, "§9 open (jump; needs t)", false};
    }
}

std::string AffineUVT::str() const {
    std::string s;
    auto add = [&](const Rat& c, const char* sym) {
        if (c == 0) return;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Rat a = c > 0 ? c : Rat(-c);
        if (!sym) {
            s += rat_str(a);
        } else {
            if (a != 1) s += rat_str(a) + "*";
            s += sym;
        }
    };
    add(c0, nullptr);
    add(cu, "u");
    add(cv, "v");
    add(ct, "t");
    return s.empty() ? "0" : s;
}

bool CaseRow::matches(const std::optional<Rat>& u, const Rat& v, const Rat& t) const {
    Rat uu = 0;
    if (uses_u) {
        if (!u) return false;
        uu = *u;
        if (domain && uv_domain(2, uu, v) != *domain) return false;
    }
    for (const auto& cond : conds) {
        Rat x = cond.expr.eval(uu, v, t);
        if (cond.strict ? !(x > 0) : !(x >= 0)) return false;
    }
    return true;
}

namespace {

AffineUVT aff(Rat c0, Rat cu, Rat cv, Rat ct) {
    return {std::move(c0), std::move(cu), std::move(cv), std::move(ct)};
}

LinCond ge(AffineUVT e) { return {std::move(e), false}; }
LinCond gt(AffineUVT e) { return {std::move(e), true}; }

std::vector<CaseRow> build_catalogue() {
    std::vector<CaseRow> rows;
    const AffineUVT Y1 = aff(0, 0, -1, 0);    // -v
    const AffineUVT Y2 = aff(-1, 0, -1, 0);   // -v-1
    const AffineUVT Y4u = aff(0, 2, 0, 0);    // 2u
    const AffineUVT Y4t = aff(0, 0, 0, 1);    // t
    const AffineUVT Y8 = aff(-8, 0, -4, 0);   // -4v-8
    const AffineUVT Y16 = aff(-12, 0, -4, 0); // -4v-12

    // D13, v > -1/3
    rows.push_back({"D13-a", true, UvDomain::D13,
                    {gt(aff(Rat(1, 3), 0, 1, 0))},
                    {1, 4, 8, 16},
                    {Y1, aff(-4, 0, -4, 0), Y8, Y16},
                    {{aff(Rat(4, 3), 0, 1, 0), 2}, {aff(1, 0, 0, 0), 1}, {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D13, v <= -1/3
    rows.push_back({"D13-b", true, UvDomain::D13,
                    {ge(aff(Rat(-1, 3), 0, -1, 0))},
                    {1, 2, 8, 16},
                    {Y1, Y2, Y8, Y16},
                    {{aff(1, 0, 0, 0), 1}, {aff(Rat(7, 6), 0, Rat(1, 2), 0), 2}, {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D12, v >= -4/3
    rows.push_back({"D12-a", true, UvDomain::D12,
                    {ge(aff(Rat(4, 3), 0, 1, 0))},
                    {1, 2, 8, 16},
                    {Y1, Y2, Y8, Y16},
                    {{aff(1, 0, 0, 0), 1}, {aff(Rat(7, 6), 0, Rat(1, 2), 0), 2}, {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D12, v <= -4/3
    rows.push_back({"D12-b", true, UvDomain::D12,
                    {ge(aff(Rat(-4, 3), 0, -1, 0))},
                    {1, 2, 4, 16},
                    {Y1, Y2, aff(-2, 0, -1, 0), Y16},
                    {{aff(1, 0, 0, 0), 1}, {aff(Rat(1, 2), 0, 0, 0), 1}, {aff(Rat(5, 6), 0, Rat(1, 4), 0), 2}}});
    // D23 1.1: v <= -4/3, v <= -2u-3
    rows.push_back({"D23-1.1", true, UvDomain::D23,
                    {ge(aff(Rat(-4, 3), 0, -1, 0)), ge(aff(-3, -2, -1, 0))},
                    {1, 4, 16},
                    {Y1, Y4u, Y16},
                    {{aff(0, Rat(-2, 3), Rat(-1, 3), 0), 2}, {aff(1, Rat(1, 6), Rat(1, 3), 0), 2}}});
    // D23 1.2: v <= -4/3, -2u-3 <= v <= -2u-2
    rows.push_back({"D23-1.2", true, UvDomain::D23,
                    {ge(aff(Rat(-4, 3), 0, -1, 0)), ge(aff(3, 2, 1, 0)), ge(aff(-2, -2, -1, 0))},
                    {1, 2, 4, 16},
                    {Y1, Y2, Y4u, Y16},
                    {{aff(1, 0, 0, 0), 1},
                     {aff(Rat(-1, 2), -1, Rat(-1, 2), 0), 1},
                     {aff(1, Rat(1, 6), Rat(1, 3), 0), 2}}});
    // D23 1.3: v <= -4/3, t >= -10v/7 - 18/7
    rows.push_back({"D23-1.3", false, std::nullopt,
                    {ge(aff(Rat(-4, 3), 0, -1, 0)), ge(aff(Rat(18, 7), 0, Rat(10, 7), 1))},
                    {1, 2, 16},
                    {Y1, Y2, Y16},
                    {{aff(1, 0, 0, 0), 1}, {aff(Rat(11, 14), 0, Rat(3, 14), 0), 3}}});
    // D23 2.1: -4/3 < v < -1/3, t <= -v-3 and t <= -4v-6
    rows.push_back({"D23-2.1", false, std::nullopt,
                    {gt(aff(Rat(4, 3), 0, 1, 0)), gt(aff(Rat(-1, 3), 0, -1, 0)),
                     ge(aff(-3, 0, -1, -1)), ge(aff(-6, 0, -4, -1))},
                    {1, 4, 16},
                    {Y1, Y4t, Y16},
                    {{aff(0, 0, Rat(-1, 3), Rat(-1, 3)), 2}, {aff(1, 0, Rat(1, 3), Rat(1, 12)), 2}}});
    // D23 2a.2: -4/3 < v <= -1, -v-3 < t <= -4v-6
    rows.push_back({"D23-2a.2", false, std::nullopt,
                    {gt(aff(Rat(4, 3), 0, 1, 0)), ge(aff(-1, 0, -1, 0)),
                     gt(aff(3, 0, 1, 1)), ge(aff(-6, 0, -4, -1))},
                    {1, 2, 4, 16},
                    {Y1, Y2, Y4t, Y16},
                    {{aff(1, 0, 0, 0), 1},
                     {aff(Rat(-1, 2), 0, Rat(-1, 2), Rat(-1, 2)), 1},
                     {aff(1, 0, Rat(1, 3), Rat(1, 12)), 2}}});
    // D23 2b.2: -1 < v < -1/3, -4v-6 < t < -v-3
    rows.push_back({"D23-2b.2", false, std::nullopt,
                    {gt(aff(1, 0, 1, 0)), gt(aff(Rat(-1, 3), 0, -1, 0)),
                     gt(aff(6, 0, 4, 1)), gt(aff(-3, 0, -1, -1))},
                    {1, 4, 8, 16},
                    {Y1, Y4t, Y8, Y16},
                    {{aff(0, 0, Rat(-1, 3), Rat(-1, 3)), 2},
                     {aff(2, 0, 1, Rat(1, 4)), 1},
                     {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D23 2.3 (covers the printed 2a.3/2b.3 domains):
    // -4/3 < v < -1/3, max(-v-3, -4v-6) <= t <= -2v-10/3
    rows.push_back({"D23-2.3", false, std::nullopt,
                    {gt(aff(Rat(4, 3), 0, 1, 0)), gt(aff(Rat(-1, 3), 0, -1, 0)),
                     ge(aff(3, 0, 1, 1)), ge(aff(6, 0, 4, 1)), ge(aff(Rat(-10, 3), 0, -2, -1))},
                    {1, 2, 4, 8, 16},
                    {Y1, Y2, Y4t, Y8, Y16},
                    {{aff(1, 0, 0, 0), 1},
                     {aff(Rat(-1, 2), 0, Rat(-1, 2), Rat(-1, 2)), 1},
                     {aff(2, 0, 1, Rat(1, 4)), 1},
                     {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D23 2.5: -4/3 < v < -1/3, t >= -2v-10/3
    rows.push_back({"D23-2.5", false, std::nullopt,
                    {gt(aff(Rat(4, 3), 0, 1, 0)), gt(aff(Rat(-1, 3), 0, -1, 0)),
                     ge(aff(Rat(10, 3), 0, 2, 1))},
                    {1, 2, 8, 16},
                    {Y1, Y2, Y8, Y16},
                    {{aff(1, 0, 0, 0), 1}, {aff(Rat(7, 6), 0, Rat(1, 2), 0), 2}, {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D23 3.1: v >= -1/3, v <= -u/2 - 3/2
    rows.push_back({"D23-3.1", true, UvDomain::D23,
                    {ge(aff(Rat(1, 3), 0, 1, 0)), ge(aff(Rat(-3, 2), Rat(-1, 2), -1, 0))},
                    {1, 4, 16},
                    {Y1, Y4u, Y16},
                    {{aff(0, Rat(-2, 3), Rat(-1, 3), 0), 2}, {aff(1, Rat(1, 6), Rat(1, 3), 0), 2}}});
    // D23 3.2: v >= -1/3, -u/2-3/2 <= v <= -u/2-1
    rows.push_back({"D23-3.2", true, UvDomain::D23,
                    {ge(aff(Rat(1, 3), 0, 1, 0)), ge(aff(Rat(3, 2), Rat(1, 2), 1, 0)),
                     ge(aff(-1, Rat(-1, 2), -1, 0))},
                    {1, 4, 8, 16},
                    {Y1, Y4u, Y8, Y16},
                    {{aff(0, Rat(-2, 3), Rat(-1, 3), 0), 2},
                     {aff(2, Rat(1, 2), 1, 0), 1},
                     {aff(Rat(1, 2), 0, 0, 0), 1}}});
    // D23 3.3: v >= -1/3, t >= -16v/7 - 24/7
    rows.push_back({"D23-3.3", false, std::nullopt,
                    {ge(aff(Rat(1, 3), 0, 1, 0)), ge(aff(Rat(24, 7), 0, Rat(16, 7), 1))},
                    {1, 8, 16},
                    {Y1, Y8, Y16},
                    {{aff(Rat(8, 7), 0, Rat(3, 7), 0), 3}, {aff(Rat(1, 2), 0, 0, 0), 1}}});
    return rows;
}

}  // namespace

const std::vector<CaseRow>& case_catalogue_q2() {
    static const std::vector<CaseRow> rows = build_catalogue();
    return rows;
}

CaseEval case_table_35_q2(const std::optional<Rat>& u, const Rat& v,
                          const std::optional<Rat>& t_override) {
    Rat t;
    std::optional<Rat> u_eff = u;
    if (t_override) {
        t = *t_override;
        // An override that differs from the exact interior ord a2 asserts a
        // jump-parameterized point: only the (v,t) rows apply then.
        if (u && t != induced_t(2, *u, v)) u_eff.reset();
    } else if (u) {
        t = induced_t(2, *u, v);
    } else {
        throw std::invalid_argument("need u or t_override");
    }

    for (const auto& row : case_catalogue_q2()) {
        if (!row.matches(u_eff, v, t)) continue;
        CaseEval ev;
        ev.id = row.id;
        Rat uu = u_eff ? *u_eff : Rat(0);
        for (size_t i = 0; i < row.vertex_x.size(); ++i)
            ev.vertices.push_back({row.vertex_x[i], ExtRat(row.vertex_y[i].eval(uu, v, t))});
        for (const auto& [form, mult] : row.ords)
            ev.ords.push_back({form.eval(uu, v, t), mult});
        return ev;
    }
    throw std::domain_error("uncatalogued");
}

std::string case_catalogue_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : case_catalogue_q2()) {
        nlohmann::json j;
        j["id"] = row.id;
        j["parameters"] = row.uses_u ? "uv" : "vt";
        if (row.domain) j["domain"] = uv_domain_name(*row.domain);
        nlohmann::json conds = nlohmann::json::array();
        for (const auto& c : row.conds)
            conds.push_back(c.expr.str() + (c.strict ? " > 0" : " >= 0"));
        j["predicate"] = conds;
        nlohmann::json verts = nlohmann::json::array();
        for (size_t i = 0; i < row.vertex_x.size(); ++i)
            verts.push_back({{"x", row.vertex_x[i]}, {"ord", row.vertex_y[i].str()}});
        j["vertices"] = verts;
        nlohmann::json ords = nlohmann::json::array();
        for (const auto& [form, mult] : row.ords)
            ords.push_back({{"ord", form.str()}, {"mult", mult}});
        j["initial_ords"] = ords;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace anderson
