#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a value lies outside an operation's convergence or validity
// region. The CLI maps this family to exit code 3.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Series evaluation requested at a point where the series diverges.
class DivergentAt : public DomainError {
public:
    explicit DivergentAt(const std::string& at)
        : DomainError("series diverges at t = " + at) {}
};

// The geometric tail diverges strictly before the renormalization point
// t = 2, so the renormalized limit does not exist.
class DivergentBeforeLimit : public DomainError {
public:
    DivergentBeforeLimit()
        : DomainError("series diverges before t = 2; renormalized limit does not exist") {}
};

// Malformed textual input (scalars, sequence literals, JSON payloads).
// The CLI maps this family to exit code 2.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact fraction num/den. Boost 1.74's two-argument cpp_rational constructor
// is unusable (throws bad_rational), so normalization goes through division.
Rat make_rat(const Int& num, const Int& den);

// r^e for integer e; e < 0 requires r != 0.
Rat rat_pow(const Rat& r, long e);

// "p" when the denominator is 1, otherwise "p/q", lowest terms.
std::string rat_str(const Rat& r);

// Accepts "p" and "p/q" with optional leading sign.
Rat parse_rat(std::string_view text);

/*
 * Gaussian rational a + b*i with exact fraction components.
 *
 * Every quantity in this library (coefficients, measures, series values,
 * renormalized limits) is a Scalar, so equality is decidable and all
 * identities are checked exactly. There is no floating point anywhere.
 */
struct Scalar {
    Rat re;
    Rat im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}          // NOLINT: implicit by design
    Scalar(Rat r) : re(std::move(r)), im(0) {} // NOLINT
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    // |z|^2 = re^2 + im^2, exact. Magnitude comparisons go through this.
    Rat abs2() const { return re * re + im * im; }

    Scalar pow(unsigned long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re + b.re, a.im + b.im);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re - b.re, a.im - b.im);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

// Canonical form: "p/q" for real values, "p/q+r/s*i" / "p/q-r/s*i" otherwise
// ("/1" omitted). The parser also accepts a bare imaginary part like "2/3*i".
std::string to_string(const Scalar& z);
Scalar parse_scalar(std::string_view text);

}  // namespace fcs
