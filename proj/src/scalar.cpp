#include "fcs/scalar.hpp"

#include <cctype>

namespace fcs {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("fraction with zero denominator");
    return Rat(num) / Rat(den);
}

Rat rat_pow(const Rat& r, long e) {
    if (e < 0) {
        if (r == 0) throw DomainError("0 raised to a negative power");
        return Rat(1) / rat_pow(r, -e);
    }
    Rat acc(1);
    Rat base = r;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    return acc;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Rat n = b.abs2();
    if (n == 0) throw DomainError("division by zero scalar");
    // a * conj(b) / |b|^2
    Scalar c = a * b.conj();
    return Scalar(c.re / n, c.im / n);
}

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

bool is_digit_str(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses "p" or "p/q" with optional sign; q > 0 required.
Rat parse_rat_impl(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!is_digit_str(num))
        throw ParseError("bad rational '" + std::string(whole) + "'");
    Int p = Int(std::string(num));
    Int q = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!is_digit_str(den))
            throw ParseError("bad rational '" + std::string(whole) + "'");
        q = Int(std::string(den));
        if (q == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    }
    Rat r = make_rat(p, q);
    return neg ? Rat(-r) : r;
}

}  // namespace

Rat parse_rat(std::string_view text) { return parse_rat_impl(text, text); }

std::string to_string(const Scalar& z) {
    if (z.im == 0) return rat_str(z.re);
    std::string s = rat_str(z.re);
    s += z.im > 0 ? "+" : "-";
    s += rat_str(boost::multiprecision::abs(z.im));
    s += "*i";
    return s;
}

Scalar parse_scalar(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw ParseError("empty scalar");

    // Split into an optional real term and an optional "...*i" term at the
    // last interior sign. The imaginary term always ends in "*i".
    bool imag = false;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        imag = true;
        s.remove_suffix(2);
    }
    if (!imag) return Scalar(parse_rat_impl(s, text));

    // Find the sign separating real and imaginary parts (skip a leading sign).
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return Scalar(Rat(0), parse_rat_impl(s, text));  // pure imaginary, e.g. "2/3*i"
    Rat re = parse_rat_impl(s.substr(0, split), text);
    Rat im = parse_rat_impl(s.substr(split), text);
    return Scalar(re, im);
}

}  // namespace fcs
