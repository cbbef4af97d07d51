#pragma once

#include "anderson/coeffs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anderson {

/// Trace of the valuation-only recursion that lower-bounds ord x_i along a
/// minimal solution: g~_i = min(b_{1k} + q^k v_{i-1}, b_24 + q^4 v_{i-2}),
/// v_i = minus slope of the leftmost hull segment of (0, g~_i) + head.
/// The b24 term is absent at step 1 (the first equation has no x_{i-2}).
struct ChainTrace {
    int q = 2;
    Rat start;               // v_0
    std::vector<Rat> seq;    // v_1, v_2, ...
    std::vector<std::string> hull_types;  // per step: hull vertex abscissae
    std::vector<int> decisive_term;       // per step: k of the winning b-term
                                          // (2,3,4 for b1k; 24 for b24)
    std::vector<long long> first_vertex;  // per step: abscissa ending the
                                          // leftmost hull segment
    std::vector<int> tie_steps;        // steps whose tail min was achieved twice
    std::vector<int> uncertain_steps;  // steps where a lower-bound-only b12
                                       // achieved the min
    bool coeff_head_tied = false;      // head coefficient ords are lower bounds
    bool coeff_tail_uncertain = false;

    bool clean() const {
        return tie_steps.empty() && uncertain_steps.empty() && !coeff_head_tied &&
               !coeff_tail_uncertain;
    }
    /// Value at absolute index i (0 = start).
    const Rat& at(size_t i) const { return i == 0 ? start : seq.at(i - 1); }
    size_t length() const { return seq.size() + 1; }
};

ChainTrace minimal_sequence(const CoeffVals& c, int q, const Rat& start, int max_iter);

enum class Growth { None, Linear, Exponential };

/// Fitted model on the confirmation window, in absolute chain indices:
/// Linear: v_i = alpha + beta*i.  Exponential: v_i = alpha + beta*gamma^i.
struct GrowthModel {
    Growth kind = Growth::None;
    Rat alpha, beta, gamma;

    std::string str() const;
};

enum class ChainKind { Diverges, Bounded, Indeterminate };

const char* chain_kind_name(ChainKind k);

struct ChainVerdict {
    ChainKind kind = ChainKind::Indeterminate;
    std::optional<GrowthModel> model;
    size_t window_begin = 0;  // absolute index of first window value
    size_t window_end = 0;    // one past last
};

/// Exact-fit classification of the trace tail (last `window` values): the
/// hull type must be constant there and the linear/exponential fit exact.
/// Tied or lower-bound steps make every value a lower bound of the true
/// valuation; since the recursion is monotone, a divergent fit still proves
/// divergence, but a bounded fit on an unclean trace is downgraded to
/// Indeterminate (a jump could push the real sequence elsewhere).
ChainVerdict classify_chain(const ChainTrace& t, int window);

enum class H1 { Zero, Four, Unknown, Indeterminate };

const char* h1_name(H1 h);

struct RegionVerdict {
    H1 h1 = H1::Unknown;
    std::string source;  // citation tag for the rule that decided
    bool boundary = false;

    bool operator==(const RegionVerdict&) const = default;
};

struct ProbeResult {
    RegionVerdict region;
    ChainVerdict verdict;
    ChainTrace trace;
    Rat start;  // smallest initial root ord (the x_40 chain)
};

/// Runs the minimal chain from the smallest initial root valuation.
/// Diverges proves h1 = 4; Bounded only reports "h1 < 4 likely, unproven"
/// (a linear combination of non-small solutions can still be small), so it
/// maps to Indeterminate at region level.
ProbeResult h1_probe(const CoeffVals& c, int q, int max_iter, int window);

}  // namespace anderson
