#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace anderson {

// Exact rational scalar. Arbitrary precision: the chain recursions multiply
// by q^4 per step, so fixed-width integers overflow within a few iterations.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Element of Q extended by +inf: the value group of the valuation at infinity on
/// C_inf (normalized so ord(theta) = -1), with +inf standing for ord 0.
/// There is no -inf; any operation that would produce one throws.
class ExtRat {
public:
    ExtRat() : inf_(false), val_(0) {}
    ExtRat(Rat v) : inf_(false), val_(std::move(v)) {}
    ExtRat(long long n) : inf_(false), val_(n) {}
    ExtRat(long long num, long long den) : inf_(false), val_(Rat(num, den)) {
        if (den == 0) throw std::invalid_argument("zero denominator");
    }

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// Finite value; throws on +inf.
    const Rat& value() const {
        if (inf_) throw std::domain_error("value() on infinity");
        return val_;
    }

    bool operator==(const ExtRat& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || val_ == o.val_;
    }

    // Total order: every finite value < infinity.
    std::strong_ordering operator<=>(const ExtRat& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        if (val_ < o.val_) return std::strong_ordering::less;
        if (val_ > o.val_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // ord(xy) = ord x + ord y; infinity absorbs (x*0 = 0).
    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.val_ + b.val_);
    }

    friend ExtRat operator-(const ExtRat& a, const ExtRat& b) {
        if (b.inf_) throw std::domain_error("subtracting infinity");
        if (a.inf_) return infinity();
        return ExtRat(a.val_ - b.val_);
    }

    /// ord(x^(q^k)) = q^k * ord x. c = 0 with an infinite value is 0*inf,
    /// which has no meaning here.
    ExtRat scale(const Rat& c) const {
        if (inf_) {
            if (c == 0) throw std::domain_error("0 * infinity undefined");
            return infinity();
        }
        return ExtRat(val_ * c);
    }

    std::string str() const;

private:
    bool inf_;
    Rat val_;
};

inline ExtRat er_add(const ExtRat& a, const ExtRat& b) { return a + b; }
inline ExtRat er_scale(const ExtRat& a, const Rat& c) { return a.scale(c); }

/// Minimum plus a tie flag. A tie (a = b) marks a spot where a jump of
/// valuation could push the true value of ord(x+y) above min(ord x, ord y).
inline std::pair<ExtRat, bool> er_min(const ExtRat& a, const ExtRat& b) {
    if (a == b) return {a, true};
    return {a < b ? a : b, false};
}

/// Parses "p", "[-]p/q" or "inf". Inverse of ExtRat::str().
ExtRat parse_extrat(const std::string& s);

/// Parses a finite rational; rejects "inf".
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

}  // namespace anderson
