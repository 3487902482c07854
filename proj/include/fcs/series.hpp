#pragma once

#include "fcs/scalar.hpp"

#include <cstddef>
#include <vector>

namespace fcs {

/*
 * Power series in t whose coefficients are eventually geometric:
 *
 *   S(t) = sum_{i<m} prefix[i] t^i  +  tail_first * t^m / (1 - ratio*t)
 *
 * with m = tail_start() = prefix.size(), i.e. a_{m+j} = tail_first * ratio^j.
 * Pairings of eventually-constant coherent-state descriptors always have this
 * shape, with t standing for the squared eigenvalue.
 */
struct GeomTailSeries {
    std::vector<Scalar> prefix;  // a_0 .. a_{m-1}
    Scalar tail_first;           // a_m
    Scalar ratio;                // r in a_{m+j} = a_m r^j

    GeomTailSeries() : tail_first(0), ratio(0) {}
    GeomTailSeries(std::vector<Scalar> pre, Scalar first, Scalar r)
        : prefix(std::move(pre)), tail_first(std::move(first)), ratio(std::move(r)) {}

    std::size_t tail_start() const { return prefix.size(); }

    // a_i for arbitrary i.
    Scalar coeff(std::size_t i) const;

    // Entirely zero tail, i.e. the series is the prefix polynomial.
    bool tail_is_zero() const { return tail_first.is_zero(); }
};

// Exact value of S at rational t >= 0. Throws DivergentAt when the geometric
// tail has |ratio|*t >= 1 (a zero tail never diverges).
Scalar eval(const GeomTailSeries& s, const Rat& t);

// lim_{t->2^-} (1 - t/2) * S(t), exactly:
//   ratio = 1/2            ->  tail_first * 2^m
//   |ratio| <= 1/2, != 1/2 ->  0   (likewise any zero tail)
//   |ratio| >  1/2         ->  DivergentBeforeLimit
Scalar renorm_limit(const GeomTailSeries& s);

// Function equality on the common convergence region, decided exactly by
// evaluating at max(m1,m2)+3 distinct small rational points (both sides are
// rational functions with denominator degree <= 1, so this many agreements
// force identity).
bool series_equal(const GeomTailSeries& a, const GeomTailSeries& b);

// Formal sum of eventually-geometric series; the empty sum is zero.
// Evaluation and limit extraction are term-wise.
struct SeriesSum {
    std::vector<GeomTailSeries> terms;
};

SeriesSum add(SeriesSum a, const SeriesSum& b);
SeriesSum scale(const Scalar& c, SeriesSum s);
Scalar eval_sum(const SeriesSum& s, const Rat& t);
Scalar renorm_limit_sum(const SeriesSum& s);

}  // namespace fcs
