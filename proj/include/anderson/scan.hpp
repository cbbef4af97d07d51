#pragma once

#include "anderson/regions.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anderson {

enum class Plane { VT, UV };
enum class Engine { Classifier, Simulator, Both };

/// Grid (or seeded random) sweep over a parameter plane. Grid points are
/// start + k*step, exact rationals throughout; no floating point anywhere.
struct ScanSpec {
    int q = 2;
    Form form = Form::Form34;
    Plane plane = Plane::VT;
    Rat x_min, x_max;  // first coordinate (v, or u on the uv-plane)
    Rat y_min, y_max;  // second coordinate (t, or v)
    Rat step = 1;
    Engine engine = Engine::Both;
    int max_iter = 64;
    int window = 8;
    std::optional<int> random_samples;  // random mode instead of the grid
    std::uint64_t seed = 0;

    void validate() const;
    /// Grid side lengths (empty ranges give zero).
    std::pair<long long, long long> grid_shape() const;
};

struct ScanRecord {
    Rat x, y;
    bool has_classifier = false;
    RegionVerdict classifier;
    bool has_sim = false;
    ChainKind sim = ChainKind::Indeterminate;
    std::string model;      // fitted growth model, or "none"
    bool agreement = true;  // false only for committed conflicting verdicts
    bool tie = false;       // any coefficient or chain-step tie/uncertainty
    std::string hull_sig;   // stabilized hull type of the simulated chain
};

std::vector<ScanRecord> run_scan(const ScanSpec& s);

/// True when some record has committed verdicts that conflict
/// (classifier 4 with a bounded chain, or classifier 0 with a divergent one).
bool has_disagreement(const std::vector<ScanRecord>& records);

/// CSV with the fixed column order
/// x,y,classifier,source,simulator,model,params,agree,tie,hull
/// (RFC-4180-style quoting; rationals as "p/q"; booleans as 1/0).
std::string emit_csv(const std::vector<ScanRecord>& records);

/// Static SVG map of a grid scan: one cell per point colored by verdict,
/// exact overlay lines for the cited region boundaries, and a legend.
std::string emit_region_map(const std::vector<ScanRecord>& records, const ScanSpec& s);

/// Exact overlay segments ((x1,y1)-(x2,y2) in plane coordinates) drawn on the
/// region map: angle borders and the two-segment/one-segment separator for
/// the (v,t)-plane, the three a2-tie rays for the (u,v)-plane, clipped to the
/// spec's bounds.
std::vector<std::array<Rat, 4>> overlay_segments(const ScanSpec& s);

}  // namespace anderson
