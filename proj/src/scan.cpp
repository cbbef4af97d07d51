#include "anderson/scan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace anderson {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

long long grid_count(const Rat& lo, const Rat& hi, const Rat& step) {
    if (hi < lo) return 0;
    Rat n = (hi - lo) / step;
    return static_cast<long long>(rat_floor(n)) + 1;
}

}  // namespace

void ScanSpec::validate() const {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (step <= 0) throw std::invalid_argument("step must be positive");
    if (max_iter < 2 * window) throw std::invalid_argument("max_iter must be >= 2*window");
    if (window < 4) throw std::invalid_argument("window must be >= 4");
    if (form == Form::Form35 && q != 2)
        throw std::invalid_argument("form 35 scans are q=2 only");
    if (form == Form::General) {
        if (!random_samples)
            throw std::invalid_argument("general form supports random mode only");
        if (plane != Plane::UV)
            throw std::invalid_argument("general form records (u,v) coordinates");
    }
    if (random_samples) {
        if (*random_samples < 0) throw std::invalid_argument("negative sample count");
        if (*random_samples > 1000000) throw std::invalid_argument("too many samples");
    } else {
        auto [nx, ny] = grid_shape();
        if (nx * ny > 1000000) throw std::invalid_argument("grid too large (> 10^6 points)");
    }
}

std::pair<long long, long long> ScanSpec::grid_shape() const {
    return {grid_count(x_min, x_max, step), grid_count(y_min, y_max, step)};
}

namespace {

struct RandRat {
    std::mt19937_64 rng;
    explicit RandRat(std::uint64_t seed) : rng(seed) {}

    // Random rational in [lo, hi] with denominator <= 12. Modulo bias is fine
    // here; determinism per seed is what matters.
    Rat draw(const Rat& lo, const Rat& hi) {
        Int den = 1 + static_cast<long long>(rng() % 12);
        Int nlo = -rat_floor(-(lo * den));  // ceil
        Int nhi = rat_floor(hi * den);
        if (nhi < nlo) nhi = nlo;
        long long span = (nhi - nlo + 1).convert_to<long long>();
        long long off = static_cast<long long>(rng() % static_cast<std::uint64_t>(span));
        return Rat(nlo + off, den);
    }
};

ScanRecord eval_point(const ScanSpec& s, const Rat& x, const Rat& y,
                      const std::optional<Rat>& w11, const std::optional<Rat>& w22) {
    ScanRecord rec;
    rec.x = x;
    rec.y = y;

    const bool want_cls = s.engine != Engine::Simulator && s.form != Form::General;
    const bool want_sim = s.engine != Engine::Classifier;

    if (want_cls) {
        rec.has_classifier = true;
        if (s.form == Form::Form34)
            rec.classifier = s.plane == Plane::VT ? classify_34(s.q, x, y)
                                                  : classify_uv_34(s.q, x, y);
        else
            rec.classifier = s.plane == Plane::VT
                                 ? classify_35_q2(std::nullopt, x, std::optional<Rat>(y))
                                 : classify_35_q2(std::optional<Rat>(x), y, std::nullopt);
    }

    if (want_sim) {
        MatrixOrds m;
        switch (s.form) {
            case Form::Form34:
                m = s.plane == Plane::VT ? make_form34_vt(s.q, ExtRat(x), ExtRat(y))
                                         : make_form34_uv(s.q, ExtRat(x), ExtRat(y));
                break;
            case Form::Form35:
                m = s.plane == Plane::VT ? make_form35_vt(s.q, ExtRat(x), ExtRat(y))
                                         : make_form35_uv(s.q, ExtRat(x), ExtRat(y));
                break;
            case Form::General:
                m = make_general(s.q, ExtRat(*w11), ExtRat(x), ExtRat(y), ExtRat(*w22));
                break;
        }
        ProbeResult pr = h1_probe(coeff_valuations(m), s.q, s.max_iter, s.window);
        rec.has_sim = true;
        rec.sim = pr.verdict.kind;
        rec.model = pr.verdict.model ? pr.verdict.model->str() : "none";
        rec.tie = !pr.trace.clean();
        rec.hull_sig = pr.trace.hull_types.back();
    }

    if (rec.has_classifier && rec.has_sim) {
        const bool cls_committed =
            rec.classifier.h1 == H1::Zero || rec.classifier.h1 == H1::Four;
        const bool sim_committed = rec.sim != ChainKind::Indeterminate;
        if (cls_committed && sim_committed)
            rec.agreement = !((rec.classifier.h1 == H1::Four && rec.sim == ChainKind::Bounded) ||
                              (rec.classifier.h1 == H1::Zero && rec.sim == ChainKind::Diverges));
    }
    return rec;
}

}  // namespace

std::vector<ScanRecord> run_scan(const ScanSpec& s) {
    s.validate();
    std::vector<ScanRecord> out;

    if (s.random_samples) {
        RandRat rr(s.seed);
        for (int i = 0; i < *s.random_samples; ++i) {
            Rat x = rr.draw(s.x_min, s.x_max);
            Rat y = rr.draw(s.y_min, s.y_max);
            std::optional<Rat> w11, w22;
            if (s.form == Form::General) {
                w11 = rr.draw(s.x_min, s.x_max);
                w22 = rr.draw(s.y_min, s.y_max);
            }
            out.push_back(eval_point(s, x, y, w11, w22));
        }
        return out;
    }

    auto [nx, ny] = s.grid_shape();
    out.reserve(static_cast<size_t>(nx * ny));
    for (long long i = 0; i < nx; ++i) {
        Rat x = s.x_min + Rat(i) * s.step;
        for (long long j = 0; j < ny; ++j) {
            Rat y = s.y_min + Rat(j) * s.step;
            out.push_back(eval_point(s, x, y, std::nullopt, std::nullopt));
        }
    }
    return out;
}

bool has_disagreement(const std::vector<ScanRecord>& records) {
    return std::any_of(records.begin(), records.end(),
                       [](const ScanRecord& r) { return !r.agreement; });
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::pair<std::string, std::string> split_model(const std::string& m) {
    auto pos = m.find(';');
    if (pos == std::string::npos) return {m, ""};
    return {m.substr(0, pos), m.substr(pos + 1)};
}

}  // namespace

std::string emit_csv(const std::vector<ScanRecord>& records) {
    std::string out = "x,y,classifier,source,simulator,model,params,agree,tie,hull\n";
    for (const auto& r : records) {
        auto [kind, params] = split_model(r.model);
        std::string cls = r.has_classifier ? h1_name(r.classifier.h1) : "";
        std::string src = r.has_classifier ? r.classifier.source : "";
        std::string sim = r.has_sim ? chain_kind_name(r.sim) : "";
        out += csv_quote(rat_str(r.x)) + ',' + csv_quote(rat_str(r.y)) + ',' + cls + ',' +
               csv_quote(src) + ',' + sim + ',' + (r.has_sim ? kind : "") + ',' +
               csv_quote(r.has_sim ? params : "") + ',' + (r.agreement ? "1" : "0") + ',' +
               (r.tie ? "1" : "0") + ',' + csv_quote(r.hull_sig) + '\n';
    }
    return out;
}

namespace {

// Fixed-point decimal with 4 digits, exact integer arithmetic.
std::string px_str(const Rat& r) {
    Int scaled = rat_floor(r * 10000);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    Int ip = scaled / 10000, fp = scaled % 10000;
    std::string frac = fp.str();
    frac.insert(frac.begin(), 4 - frac.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

const char* verdict_color(const std::string& token) {
    if (token == "4" || token == "DIV") return "#3182bd";
    if (token == "0" || token == "BOUND") return "#de2d26";
    if (token == "INDET") return "#fdae6b";
    return "#bdbdbd";  // UNKNOWN
}

std::string record_token(const ScanRecord& r) {
    if (r.has_classifier) return h1_name(r.classifier.h1);
    if (r.has_sim) return chain_kind_name(r.sim);
    return "UNKNOWN";
}

// Segment of the line y = a*x + b over x in [lo, hi], clipped to the spec box.
std::optional<std::array<Rat, 4>> clip_line(const ScanSpec& s, const Rat& a, const Rat& b,
                                            Rat lo, Rat hi) {
    lo = std::max(lo, s.x_min);
    hi = std::min(hi, s.x_max);
    if (a != 0) {
        Rat from_y1 = (s.y_min - b) / a, from_y2 = (s.y_max - b) / a;
        lo = std::max(lo, std::min(from_y1, from_y2));
        hi = std::min(hi, std::max(from_y1, from_y2));
    } else {
        if (b < s.y_min || b > s.y_max) return std::nullopt;
    }
    if (lo > hi) return std::nullopt;
    return std::array<Rat, 4>{lo, a * lo + b, hi, a * hi + b};
}

std::optional<std::array<Rat, 4>> clip_vertical(const ScanSpec& s, const Rat& x, Rat ylo,
                                                Rat yhi) {
    if (x < s.x_min || x > s.x_max) return std::nullopt;
    ylo = std::max(ylo, s.y_min);
    yhi = std::min(yhi, s.y_max);
    if (ylo > yhi) return std::nullopt;
    return std::array<Rat, 4>{x, ylo, x, yhi};
}

constexpr long long kNoBound = 1000000;

}  // namespace

std::vector<std::array<Rat, 4>> overlay_segments(const ScanSpec& s) {
    std::vector<std::array<Rat, 4>> segs;
    const int q = s.q;
    const Rat big = Rat(q * q, q - 1);
    auto add = [&](std::optional<std::array<Rat, 4>> seg) {
        if (seg) segs.push_back(*seg);
    };

    if (s.plane == Plane::VT) {
        if (s.form == Form::Form34) {
            // A- edges, A+ edges and the one/two-segment separator line,
            // which passes through both angle vertices.
            add(clip_line(s, -1, 0, Rat(-kNoBound), -big));               // t = -v
            add(clip_vertical(s, -big, big, Rat(kNoBound)));              // v = -q^2/(q-1)
            add(clip_line(s, Rat(-q * q), 0, Rat(1, q - 1), Rat(kNoBound)));  // t = -q^2 v
            add(clip_vertical(s, Rat(1, q - 1), -big, Rat(kNoBound)));
            add(clip_line(s, Rat(-2 * q * q, q * q + 1), Rat(-(q * q * q + q * q), q * q + 1),
                          Rat(-kNoBound), Rat(kNoBound)));
        } else {
            // q = 2 jump-region borders.
            add(clip_line(s, Rat(-16, 7), Rat(-24, 7), Rat(-1, 3), Rat(kNoBound)));
            add(clip_line(s, -4, -6, Rat(-4, 3), Rat(-1, 3)));
            add(clip_vertical(s, 2, Rat(-32, 7) - Rat(24, 7), Rat(kNoBound)));
        }
    } else {
        // Rays R1, R2, R3 from the common vertex, then the possible-h1=0
        // subrays (drawn as extra segments so the writer can restyle them).
        const Rat vx = Rat(-q, q + 1);
        add(clip_line(s, 0, vx, vx, Rat(kNoBound)));                    // R1: v = -q/(q+1)
        add(clip_line(s, Rat(-q), Rat(-q), vx, Rat(kNoBound)));        // R2: v = -qu-q
        add(clip_line(s, Rat(-1, q), Rat(-1), Rat(-kNoBound), vx));    // R3: v = -u/q-1
        if (s.form == Form::Form34) {
            add(clip_line(s, Rat(-q), Rat(-q), Rat(1, q - 1), Rat(kNoBound)));  // Rbar3
            add(clip_line(s, Rat(-1, q), Rat(-1), Rat(-kNoBound), -big));       // Rbar2
        }
    }
    return segs;
}

std::string emit_region_map(const std::vector<ScanRecord>& records, const ScanSpec& s) {
    if (s.random_samples) throw std::invalid_argument("region map requires a grid scan");
    auto [nx, ny] = s.grid_shape();
    if (static_cast<long long>(records.size()) != nx * ny)
        throw std::invalid_argument("records do not form the spec's grid");

    const int cell = 8, margin = 10;
    const long long w = nx * cell, h = ny * cell;

    std::set<std::string> legend_tokens;
    std::map<std::string, std::string> legend_sources;  // token -> example source
    for (const auto& r : records) {
        std::string tok = record_token(r);
        legend_tokens.insert(tok);
        if (r.has_classifier && !legend_sources.count(h1_name(r.classifier.h1)))
            legend_sources[h1_name(r.classifier.h1)] = r.classifier.source;
    }

    const long long legend_h = 18 * static_cast<long long>(legend_tokens.size()) + 10;
    const long long width = w + 2 * margin, height = h + 2 * margin + legend_h;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Cells: x index left to right, y index bottom to top.
    for (long long i = 0; i < nx; ++i) {
        for (long long j = 0; j < ny; ++j) {
            const ScanRecord& r = records[static_cast<size_t>(i * ny + j)];
            long long px = margin + i * cell;
            long long py = margin + (ny - 1 - j) * cell;
            svg += "<rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
                   "\" width=\"8\" height=\"8\" fill=\"" +
                   verdict_color(record_token(r)) + "\"/>\n";
        }
    }

    // Exact boundary overlays mapped through cell centers.
    const Rat y_top = s.y_min + Rat(ny - 1) * s.step;
    auto to_px = [&](const Rat& x) {
        return Rat(margin) + (x - s.x_min) / s.step * cell + Rat(cell, 2);
    };
    auto to_py = [&](const Rat& y) {
        return Rat(margin) + (y_top - y) / s.step * cell + Rat(cell, 2);
    };
    for (const auto& seg : overlay_segments(s)) {
        svg += "<line x1=\"" + px_str(to_px(seg[0])) + "\" y1=\"" + px_str(to_py(seg[1])) +
               "\" x2=\"" + px_str(to_px(seg[2])) + "\" y2=\"" + px_str(to_py(seg[3])) +
               "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4 2\"/>\n";
    }

    long long ly = margin + h + 14;
    for (const auto& tok : legend_tokens) {
        svg += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(ly - 9) +
               "\" width=\"10\" height=\"10\" fill=\"" + std::string(verdict_color(tok)) +
               "\"/>\n";
        std::string label = tok;
        auto it = legend_sources.find(tok);
        if (it != legend_sources.end() && !it->second.empty()) label += " [" + it->second + "]";
        svg += "<text x=\"" + std::to_string(margin + 16) + "\" y=\"" + std::to_string(ly) +
               "\" font-family=\"monospace\" font-size=\"11\">" + label + "</text>\n";
        ly += 18;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace anderson
