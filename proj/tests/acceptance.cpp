// Acceptance suite: every criterion below is exact rational equality unless
// stated otherwise; one PASS/FAIL line is printed per criterion.

#include "anderson/scan.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace anderson;

namespace {

int g_failed_criteria = 0;

struct Criterion {
    std::string name;
    int failures = 0;
    std::string first_detail;

    void check(bool ok, const std::string& detail) {
        if (ok) return;
        if (failures == 0) first_detail = detail;
        ++failures;
    }
    void report() const {
        if (failures == 0) {
            std::cout << "[PASS] " << name << "\n";
        } else {
            std::cout << "[FAIL] " << name << " (" << failures
                      << " failed checks; first: " << first_detail << ")\n";
            ++g_failed_criteria;
        }
    }
};

Rat closed_form(char kase, const Rat& v, int i) {
    Rat p = 1;
    for (int k = 0; k < i; ++k) p *= 4;
    switch (kase) {
        case 'a': return v / (5 * p) + 1 - Rat(1) / (5 * p);
        case 'b': return (Rat(1, 4) - Rat(1) / (20 * p)) * v + 1 - Rat(1) / (5 * p);
        case 'c': return (1 - Rat(4, 5) * p) * v + Rat(4, 5) * p;
        case 'd': return p * (v + 4) / 5;
    }
    throw std::logic_error("bad case");
}

ProbeResult probe35_uv(const Rat& u, const Rat& v) {
    return h1_probe(coeff_valuations(make_form35_uv(2, ExtRat(u), ExtRat(v))), 2, 64, 8);
}

ProbeResult probe35_vt(const Rat& v, const Rat& t) {
    return h1_probe(coeff_valuations(make_form35_vt(2, ExtRat(v), ExtRat(t))), 2, 64, 8);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // ---- 1: Theorem 5.1 agreement sweep -------------------------------
    {
        Criterion c{"criterion 1: Thm 5.1 classifier/simulator sweep (v in [-8,4], "
                    "t in [-20,20], step 1/3, <10s)"};
        auto t0 = clock::now();
        ScanSpec spec;
        spec.q = 2;
        spec.form = Form::Form34;
        spec.plane = Plane::VT;
        spec.x_min = -8;
        spec.x_max = 4;
        spec.y_min = -20;
        spec.y_max = 20;
        spec.step = Rat(1, 3);
        spec.engine = Engine::Both;
        auto records = run_scan(spec);
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        c.check(records.size() == 37u * 121u, "grid size");
        for (const auto& r : records) {
            if (r.tie) continue;
            std::string at = "(" + rat_str(r.x) + "," + rat_str(r.y) + ")";
            bool four = r.classifier.h1 == H1::Four;
            bool zero = r.classifier.h1 == H1::Zero;
            c.check(four == (r.sim == ChainKind::Diverges), at + " 4<=>DIV");
            c.check(zero == (r.sim == ChainKind::Bounded), at + " 0<=>BOUND");
        }
        c.check(secs < 10.0, "runtime " + std::to_string(secs) + "s");
        c.report();
        std::cout << "       (" << records.size() << " points in " << secs << "s)\n";
    }

    // ---- 2: Prop 5.12 closed forms ------------------------------------
    {
        Criterion c{"criterion 2: one-segment closed forms, i = 0..6, exact"};
        struct Row { char kase; Rat v, t; };
        std::vector<Row> rows = {{'a', 1, -4}, {'a', 2, -5}, {'b', -4, 5},
                                 {'b', -6, 8}, {'c', Rat(1, 2), -3}, {'d', -2, 1}};
        for (const auto& row : rows) {
            CoeffVals cv = coeff_valuations(make_form34_vt(2, ExtRat(row.v), ExtRat(row.t)));
            Rat start = (row.v + 4) / 5;
            c.check(start == closed_form(row.kase, row.v, 0), "start mismatch");
            ChainTrace tr = minimal_sequence(cv, 2, start, 8);
            for (int i = 1; i <= 6; ++i)
                c.check(tr.at(static_cast<size_t>(i)) == closed_form(row.kase, row.v, i),
                        std::string("case ") + row.kase + " v=" + rat_str(row.v) + " i=" +
                            std::to_string(i));
        }
        c.report();
    }

    // ---- 3: duality points ---------------------------------------------
    {
        Criterion c{"criterion 3: duality map corner points (Prop 6.4 anchors)"};
        const int q = 2;
        // P1..P4 recomputed symbolically at q=2; the published images.
        struct P { Rat v, t, v2, t2; };
        std::vector<P> ps = {
            {q, -q * q * q, -q * q - q, q * q + q},                        // P1
            {Rat(1, q - 1), Rat(-q * q, q - 1), Rat(-q * q, q - 1), Rat(q * q, q - 1)},  // P2
            {Rat(1, q - 1), Rat(-q * q + q - 1, q - 1), Rat(-q * q, q - 1),
             Rat(q * q * q + q - 1, q * q - q)},                           // P3
            {q, -2 * q, -q * q - q, 2 * q * q + q - 2},                    // P4
        };
        c.check(ps[0].v == 2 && ps[0].t == -8 && ps[0].v2 == -6 && ps[0].t2 == 6, "P1 values");
        c.check(ps[3].v == 2 && ps[3].t == -4 && ps[3].v2 == -6 && ps[3].t2 == 8, "P4 values");
        for (size_t i = 0; i < ps.size(); ++i) {
            auto [v2, t2] = dual_params(q, ps[i].v, ps[i].t);
            c.check(v2 == ps[i].v2 && t2 == ps[i].t2,
                    "P" + std::to_string(i + 1) + " image (" + rat_str(v2) + "," +
                        rat_str(t2) + ")");
            c.check(in_angle_minus(q, v2, t2), "P" + std::to_string(i + 1) + " lands in A-");
        }
        c.report();
    }

    // ---- 4: subray anchor + uniformizable box --------------------------
    {
        Criterion c{"criterion 4: Rbar3 initial point + 20 interior points with u,v > -4"};
        RegionVerdict r = classify_uv_34(2, 1, -4);
        c.check(r.h1 == H1::Indeterminate, "anchor verdict");
        c.check(r.source.find("Rbar3") != std::string::npos &&
                    r.source.find("initial") != std::string::npos,
                "anchor source tag: " + r.source);

        oracle::Rng rng(0x64u);
        auto interior = [](const Rat& u, const Rat& v) {
            UvDomain d = uv_domain(2, u, v);
            return d == UvDomain::D12 || d == UvDomain::D13 || d == UvDomain::D23;
        };
        auto pts = oracle::sample_points(rng, 20, 12, 6, [&](const Rat& u, const Rat& v) {
            return u > -4 + oracle::kSlack && v > -4 + oracle::kSlack && interior(u, v);
        });
        for (auto& [u, v] : pts) {
            RegionVerdict rv = classify_uv_34(2, u, v);
            c.check(rv.h1 == H1::Four, "(" + rat_str(u) + "," + rat_str(v) + ")");
        }
        c.report();
    }

    // ---- 5: case-table conformance --------------------------------------
    {
        Criterion c{"criterion 5: 15 catalogue rows x 5 interior samples, hull+ords exact"};
        int rows_seen = 0;
        for (const auto& row : case_catalogue_q2()) {
            ++rows_seen;
            oracle::Rng rng(0xACCE5 + std::hash<std::string>{}(row.id));
            auto pred = [&](const Rat& a, const Rat& b) {
                Rat u = row.uses_u ? a : Rat(0);
                Rat v = row.uses_u ? b : a;
                Rat t = row.uses_u ? induced_t(2, u, v) : b;
                if (row.uses_u && uv_domain(2, u, v) != *row.domain) return false;
                if (!row.uses_u && (t == -v - 2 || t == -4 * v - 4)) return false;
                for (const auto& cond : row.conds)
                    if (cond.expr.eval(u, v, t) < oracle::kSlack) return false;
                return true;
            };
            auto samples = oracle::sample_points(rng, 5, 12, 8, pred);
            for (auto& [a, b] : samples) {
                std::optional<Rat> u;
                Rat v, t;
                MatrixOrds m;
                if (row.uses_u) {
                    u = a;
                    v = b;
                    t = induced_t(2, *u, v);
                    m = make_form35_uv(2, ExtRat(*u), ExtRat(v));
                } else {
                    v = a;
                    t = b;
                    m = make_form35_vt(2, ExtRat(v), ExtRat(t));
                }
                std::string at = row.id + " @ (" + rat_str(a) + "," + rat_str(b) + ")";
                try {
                    CaseEval expect = case_table_35_q2(u, v, t);
                    c.check(expect.id == row.id, at + " row id " + expect.id);
                    NewtonPolygon hull =
                        lower_hull(head_points(coeff_valuations(m), 2));
                    c.check(hull.vertices == expect.vertices, at + " vertices");
                    c.check(root_valuations(hull, 2) == expect.ords, at + " ords");
                } catch (const std::exception& e) {
                    c.check(false, at + " threw: " + e.what());
                }
            }
        }
        c.check(rows_seen == 15, "row count");
        c.report();
    }

    // ---- 6: triangular-family verdicts ----------------------------------
    {
        Criterion c{"criterion 6: form-(3.5) probes diverge on the proved h1=4 regions; "
                    "Prop 8.2 gives 0 with the exact bounded tail"};
        oracle::Rng rng(0x35u);
        using Pred = std::function<bool(const Rat&, const Rat&)>;
        auto dom = [](const Rat& u, const Rat& v) { return uv_domain(2, u, v); };
        const Rat s = oracle::kSlack;

        struct RegionSpec {
            std::string name;
            bool vt;
            Pred pred;
        };
        std::vector<RegionSpec> regions = {
            {"Prop 7.1", false, [&](const Rat& u, const Rat& v) {
                 return v >= 0 && dom(u, v) == UvDomain::D13; }},
            {"Prop 7.2", false, [&](const Rat& u, const Rat& v) {
                 return v <= -s && v > Rat(-2, 3) + s && dom(u, v) == UvDomain::D13; }},
            {"Prop 7.3", false, [&](const Rat& u, const Rat& v) {
                 return v >= Rat(-4, 3) + s && dom(u, v) == UvDomain::D12; }},
            {"Prop 7.4", false, [&](const Rat& u, const Rat& v) {
                 return v <= Rat(-4, 3) - s && dom(u, v) == UvDomain::D12; }},
            {"Prop 7.5", false, [&](const Rat& u, const Rat& v) {
                 return v <= Rat(-4, 3) - s && v >= -2 * u - 4 + s && v <= -2 * u - 3 - s &&
                        dom(u, v) == UvDomain::D23; }},
            {"Prop 8.1", true, [&](const Rat& v, const Rat& t) {
                 return v >= 0 && v <= 2 - s && t >= Rat(-16, 7) * v - Rat(24, 7) + s; }},
            {"Prop 8.3", true, [&](const Rat& v, const Rat& t) {
                 return v >= Rat(-4, 3) + s && v <= Rat(-1, 3) - s && t >= -4 * v - 6 + s; }},
        };
        for (const auto& reg : regions) {
            auto pts = oracle::sample_points(rng, 5, 12, 6, reg.pred);
            for (auto& [a, b] : pts) {
                ProbeResult pr = reg.vt ? probe35_vt(a, b) : probe35_uv(a, b);
                c.check(pr.verdict.kind == ChainKind::Diverges,
                        reg.name + " @ (" + rat_str(a) + "," + rat_str(b) + ") -> " +
                            chain_kind_name(pr.verdict.kind));
                c.check(pr.region.h1 == H1::Four, reg.name + " region verdict");
            }
        }

        // Prop 8.2: classifier says 0; the probe from the smallest root ties
        // at step 1 (reported, not simulated past); the chain restarted from
        // 5/4 reproduces ord x_i = 2 - 3/2^{i+1} exactly.
        auto pts82 = oracle::sample_points(rng, 5, 12, 6, [&](const Rat& v, const Rat& t) {
            return v >= 2 && t >= Rat(-16, 7) * v - Rat(24, 7) + s;
        });
        for (auto& [v, t] : pts82) {
            std::string at = "Prop 8.2 @ (" + rat_str(v) + "," + rat_str(t) + ")";
            RegionVerdict rv = classify_35_q2(std::nullopt, v, t);
            c.check(rv.h1 == H1::Zero && rv.source == "Prop 8.2", at + " classifier");

            CoeffVals cv = coeff_valuations(make_form35_vt(2, ExtRat(v), ExtRat(t)));
            ProbeResult pr = h1_probe(cv, 2, 64, 8);
            c.check(pr.start == Rat(1, 2), at + " smallest root");
            c.check(!pr.trace.tie_steps.empty() && pr.trace.tie_steps.front() == 1,
                    at + " tie at step 1");
            c.check(pr.region.h1 == H1::Indeterminate, at + " probe stays uncommitted");

            ChainTrace tail = minimal_sequence(cv, 2, Rat(5, 4), 32);
            Rat p = 4;
            bool tail_ok = true;
            for (size_t j = 0; j < tail.length(); ++j) {
                if (tail.at(j) != 2 - Rat(3) / p) tail_ok = false;
                p *= 2;
            }
            c.check(tail_ok, at + " tail values");
            c.check(tail.clean(), at + " tail has no ties");
            ChainVerdict cvv = classify_chain(tail, 8);
            c.check(cvv.kind == ChainKind::Bounded, at + " tail bounded");
            c.check(cvv.model && cvv.model->kind == Growth::Exponential &&
                        cvv.model->alpha == 2 && cvv.model->beta == Rat(-3, 4) &&
                        cvv.model->gamma == Rat(1, 2),
                    at + " tail model");
        }
        c.report();
    }

    // ---- 7: quadrupling lemma -------------------------------------------
    {
        Criterion c{"criterion 7: chain at (0,-1) from start 1 is 4, 16, ..., 4^10"};
        CoeffVals cv = coeff_valuations(make_form35_uv(2, ExtRat(0), ExtRat(-1)));
        ChainTrace tr = minimal_sequence(cv, 2, 1, 10);
        Rat expect = 1;
        for (size_t i = 1; i <= 10; ++i) {
            expect *= 4;
            c.check(tr.at(i) == expect, "i=" + std::to_string(i));
        }
        c.report();
    }

    // ---- 8: mixed-regime detection ----------------------------------------
    {
        Criterion c{"criterion 8: D12 low-v mixed regime (+1/2 steps, one bridge, then x4)"};
        // u=3, v=-20/3: start = v/4+5/6 = -5/6 <= 0, v <= -10/3
        CoeffVals cv = coeff_valuations(make_form35_uv(2, ExtRat(3), ExtRat(-20, 3)));
        ProbeResult pr = h1_probe(cv, 2, 64, 8);
        c.check(pr.start == Rat(-5, 6), "start");
        c.check(pr.trace.at(1) == Rat(-1, 3), "half step 1");
        c.check(pr.trace.at(2) == Rat(1, 6), "half step 2 lands in (0,1/4]");
        c.check(pr.trace.at(3) == Rat(5, 6), "bridge step 2x+1/2");
        Rat expect = Rat(5, 6);
        bool quad = true;
        for (size_t i = 4; i < pr.trace.length(); ++i) {
            expect *= 4;
            if (pr.trace.at(i) != expect) quad = false;
        }
        c.check(quad, "quadrupling tail");
        c.check(pr.verdict.kind == ChainKind::Diverges, "diverges");
        c.check(pr.verdict.model && pr.verdict.model->kind == Growth::Exponential &&
                    pr.verdict.model->gamma == 4,
                "window model gamma=4");
        c.report();
    }

    // ---- 9: hull oracle ----------------------------------------------------
    {
        Criterion c{"criterion 9: 1000 random point sets vs brute-force hull"};
        oracle::Rng rng(0x09u);
        for (int trial = 0; trial < 1000; ++trial) {
            int n = static_cast<int>(rng.ll(2, 12));
            std::vector<NewtonPoint> p;
            std::vector<long long> xs;
            for (long long x = 0; x <= 30; ++x) xs.push_back(x);
            int finite = 0;
            for (int i = 0; i < n; ++i) {
                long long idx = rng.ll(0, static_cast<long long>(xs.size()) - 1);
                long long x = xs[static_cast<size_t>(idx)];
                xs.erase(xs.begin() + idx);
                p.push_back({x, ExtRat(rng.rat(60, 10))});
                ++finite;
            }
            if (finite < 2) continue;
            NewtonPolygon poly = lower_hull(p);
            c.check(poly.vertices == oracle::brute_hull_vertices(p),
                    "trial " + std::to_string(trial));
            for (size_t i = 1; i < poly.segments.size(); ++i)
                c.check(poly.segments[i - 1].slope < poly.segments[i].slope, "slope order");
            Rat total = 0;
            for (const auto& sgm : poly.segments) total += sgm.slope * sgm.xspan;
            c.check(total == poly.vertices.back().y.value() - poly.vertices.front().y.value(),
                    "telescoping");
        }
        c.report();
    }

    // ---- 10: determinism ----------------------------------------------------
    {
        Criterion c{"criterion 10: identical spec+seed gives byte-identical CSV and SVG"};
        ScanSpec spec;
        spec.q = 2;
        spec.form = Form::Form34;
        spec.plane = Plane::VT;
        spec.x_min = -6;
        spec.x_max = 2;
        spec.y_min = -8;
        spec.y_max = 8;
        spec.step = Rat(1, 2);
        auto r1 = run_scan(spec), r2 = run_scan(spec);
        c.check(emit_csv(r1) == emit_csv(r2), "grid CSV");
        c.check(emit_region_map(r1, spec) == emit_region_map(r2, spec), "grid SVG");

        ScanSpec rnd = spec;
        rnd.random_samples = 200;
        rnd.seed = 0xFEEDFACEu;
        c.check(emit_csv(run_scan(rnd)) == emit_csv(run_scan(rnd)), "random CSV");
        c.report();
    }

    if (g_failed_criteria == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failed_criteria << " acceptance criteria failed\n";
    return 1;
}
