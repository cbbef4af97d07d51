// h1scan: exact-arithmetic classification of h^1 for the two-parameter
// t-motive families, on single points or over parameter-plane sweeps.

#include "anderson/scan.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace anderson;

namespace {

struct Common {
    int q = 2;
    std::string form = "34";
    int max_iter = 64;
    int window = 8;
};

Form parse_form(const std::string& f) {
    if (f == "34") return Form::Form34;
    if (f == "35") return Form::Form35;
    if (f == "general") return Form::General;
    throw CLI::ValidationError("--form must be 34, 35 or general");
}

void print_verdict(const RegionVerdict& rv) {
    std::cout << "h1: " << h1_name(rv.h1) << "\n"
              << "source: " << rv.source << "\n"
              << "boundary: " << (rv.boundary ? "yes" : "no") << "\n";
}

void write_out(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h1 classification for rank-4 dimension-2 t-motives"};
    app.require_subcommand(1);

    // classify
    auto* c_cls = app.add_subcommand("classify", "closed-form region classifier");
    std::string cls_q = "2", cls_form = "34", cls_u, cls_v, cls_t;
    c_cls->add_option("--q", cls_q);
    c_cls->add_option("--form", cls_form);
    c_cls->add_option("--u", cls_u);
    c_cls->add_option("--v", cls_v);
    c_cls->add_option("--t", cls_t);

    // probe
    auto* c_probe = app.add_subcommand("probe", "minimal-chain simulation");
    std::string pr_q = "2", pr_form = "34", pr_u, pr_v, pr_t, pr_start;
    int pr_iter = 64, pr_window = 8;
    c_probe->add_option("--q", pr_q);
    c_probe->add_option("--form", pr_form);
    c_probe->add_option("--u", pr_u);
    c_probe->add_option("--v", pr_v);
    c_probe->add_option("--t", pr_t);
    c_probe->add_option("--start", pr_start, "chain start (default: smallest root ord)");
    c_probe->add_option("--max-iter", pr_iter);
    c_probe->add_option("--window", pr_window);

    // dual
    auto* c_dual = app.add_subcommand("dual", "duality map on the (v,t) chart");
    std::string du_q = "2", du_v, du_t;
    c_dual->add_option("--q", du_q);
    c_dual->add_option("--v", du_v)->required();
    c_dual->add_option("--t", du_t)->required();

    // case-table
    auto* c_case = app.add_subcommand("case-table", "hull/root catalogue at q=2");
    std::string ca_u, ca_v, ca_t;
    bool ca_list = false;
    c_case->add_option("--u", ca_u);
    c_case->add_option("--v", ca_v);
    c_case->add_option("--t", ca_t);
    c_case->add_flag("--list", ca_list, "dump the whole catalogue as JSON");

    // scan / map
    auto* c_scan = app.add_subcommand("scan", "sweep a parameter plane");
    auto* c_map = app.add_subcommand("map", "sweep and render an SVG region map");
    std::string sc_q = "2", sc_form = "34", sc_plane = "vt", sc_bounds, sc_step = "1";
    std::string sc_engine = "both", sc_out, sc_format = "csv";
    int sc_iter = 64, sc_window = 8, sc_random = -1;
    std::uint64_t sc_seed = 0;
    bool sc_check = false;
    for (auto* sub : {c_scan, c_map}) {
        sub->add_option("--q", sc_q);
        sub->add_option("--form", sc_form);
        sub->add_option("--plane", sc_plane, "vt or uv");
        sub->add_option("--bounds", sc_bounds, "xmin,xmax,ymin,ymax")->required();
        sub->add_option("--step", sc_step);
        sub->add_option("--engine", sc_engine, "classifier, simulator or both");
        sub->add_option("--max-iter", sc_iter);
        sub->add_option("--window", sc_window);
        sub->add_option("--random", sc_random, "random samples instead of a grid");
        sub->add_option("--seed", sc_seed);
        sub->add_option("--out", sc_out, "output path (default stdout)");
    }
    c_scan->add_option("--format", sc_format, "csv or svg");
    c_scan->add_flag("--check", sc_check, "exit 3 on classifier/simulator disagreement");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_cls) {
            int q = std::stoi(cls_q);
            Form form = parse_form(cls_form);
            if (form == Form::Form34) {
                if (!cls_t.empty() && cls_u.empty())
                    print_verdict(classify_34(q, parse_rat(cls_v), parse_rat(cls_t)));
                else if (!cls_u.empty() && cls_t.empty())
                    print_verdict(classify_uv_34(q, parse_rat(cls_u), parse_rat(cls_v)));
                else
                    throw std::invalid_argument("form 34: give --v with exactly one of --u/--t");
            } else if (form == Form::Form35) {
                std::optional<Rat> u, t;
                if (!cls_u.empty()) u = parse_rat(cls_u);
                if (!cls_t.empty()) t = parse_rat(cls_t);
                print_verdict(classify_35_q2(u, parse_rat(cls_v), t));
            } else {
                throw std::invalid_argument("no closed-form classifier for general form");
            }
        } else if (*c_probe) {
            int q = std::stoi(pr_q);
            Form form = parse_form(pr_form);
            MatrixOrds m;
            if (form == Form::Form34)
                m = pr_t.empty()
                        ? make_form34_uv(q, parse_extrat(pr_u), ExtRat(parse_rat(pr_v)))
                        : make_form34_vt(q, ExtRat(parse_rat(pr_v)), ExtRat(parse_rat(pr_t)));
            else if (form == Form::Form35)
                m = pr_t.empty()
                        ? make_form35_uv(q, parse_extrat(pr_u), ExtRat(parse_rat(pr_v)))
                        : make_form35_vt(q, ExtRat(parse_rat(pr_v)), ExtRat(parse_rat(pr_t)));
            else
                throw std::invalid_argument("probe supports forms 34 and 35");
            CoeffVals c = coeff_valuations(m);

            ProbeResult pr;
            if (pr_start.empty()) {
                pr = h1_probe(c, q, pr_iter, pr_window);
            } else {
                pr.start = parse_rat(pr_start);
                pr.trace = minimal_sequence(c, q, pr.start, pr_iter);
                pr.verdict = classify_chain(pr.trace, pr_window);
                pr.region = {H1::Indeterminate, "explicit start; no h1 claim", false};
            }
            std::cout << "start: " << rat_str(pr.start) << "\n";
            std::cout << "chain:";
            size_t shown = std::min<size_t>(pr.trace.seq.size(), 12);
            for (size_t i = 0; i < shown; ++i)
                std::cout << ' ' << rat_str(pr.trace.seq[i]);
            if (shown < pr.trace.seq.size()) std::cout << " ...";
            std::cout << "\nverdict: " << chain_kind_name(pr.verdict.kind) << "\n";
            std::cout << "model: " << (pr.verdict.model ? pr.verdict.model->str() : "none")
                      << "\n";
            std::cout << "ties: " << (pr.trace.clean() ? "none" : "present") << "\n";
            print_verdict(pr.region);
        } else if (*c_dual) {
            auto [v2, t2] = dual_params(std::stoi(du_q), parse_rat(du_v), parse_rat(du_t));
            std::cout << "v': " << rat_str(v2) << "\nt': " << rat_str(t2) << "\n";
        } else if (*c_case) {
            if (ca_list) {
                std::cout << case_catalogue_json() << "\n";
            } else {
                std::optional<Rat> u, t;
                if (!ca_u.empty()) u = parse_rat(ca_u);
                if (!ca_t.empty()) t = parse_rat(ca_t);
                if (ca_v.empty()) throw std::invalid_argument("--v required");
                CaseEval ev = case_table_35_q2(u, parse_rat(ca_v), t);
                std::cout << "case: " << ev.id << "\nvertices:";
                for (const auto& p : ev.vertices)
                    std::cout << " (" << p.x << "," << p.y.str() << ")";
                std::cout << "\ninitial ords:";
                for (const auto& r : ev.ords)
                    std::cout << " " << rat_str(r.ord) << " x" << r.mult;
                std::cout << "\n";
            }
        } else if (*c_scan || *c_map) {
            ScanSpec spec;
            spec.q = std::stoi(sc_q);
            spec.form = parse_form(sc_form);
            if (sc_plane == "vt") spec.plane = Plane::VT;
            else if (sc_plane == "uv") spec.plane = Plane::UV;
            else throw std::invalid_argument("--plane must be vt or uv");
            std::vector<Rat> b;
            std::stringstream ss(sc_bounds);
            std::string part;
            while (std::getline(ss, part, ',')) b.push_back(parse_rat(part));
            if (b.size() != 4) throw std::invalid_argument("--bounds needs 4 rationals");
            spec.x_min = b[0];
            spec.x_max = b[1];
            spec.y_min = b[2];
            spec.y_max = b[3];
            spec.step = parse_rat(sc_step);
            if (sc_engine == "classifier") spec.engine = Engine::Classifier;
            else if (sc_engine == "simulator") spec.engine = Engine::Simulator;
            else if (sc_engine == "both") spec.engine = Engine::Both;
            else throw std::invalid_argument("--engine must be classifier, simulator or both");
            spec.max_iter = sc_iter;
            spec.window = sc_window;
            if (sc_random >= 0) spec.random_samples = sc_random;
            spec.seed = sc_seed;

            std::vector<ScanRecord> records = run_scan(spec);
            if (*c_map || sc_format == "svg")
                write_out(sc_out, emit_region_map(records, spec));
            else if (sc_format == "csv")
                write_out(sc_out, emit_csv(records));
            else
                throw std::invalid_argument("--format must be csv or svg");
            if (sc_check && has_disagreement(records)) {
                std::cerr << "disagreement between classifier and simulator\n";
                return 3;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
