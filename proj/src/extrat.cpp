#include "anderson/extrat.hpp"

#include <cctype>

namespace anderson {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

std::string ExtRat::str() const {
    if (inf_) return "inf";
    return rat_str(val_);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto pos = body.find('/'); pos != std::string::npos) {
        num = body.substr(0, pos);
        den = body.substr(pos + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("bad rational: '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(n, d);
    return neg ? Rat(-r) : r;
}

ExtRat parse_extrat(const std::string& s) {
    if (s == "inf") return ExtRat::infinity();
    return ExtRat(parse_rat(s));
}

}  // namespace anderson
