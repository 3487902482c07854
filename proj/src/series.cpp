#include "fcs/series.hpp"

namespace fcs {

namespace {

const Rat& quarter() {
    static const Rat q = make_rat(1, 4);
    return q;
}

const Scalar& one_half() {
    static const Scalar h{make_rat(1, 2)};
    return h;
}

}  // namespace

Scalar GeomTailSeries::coeff(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return tail_first * ratio.pow(i - prefix.size());
}

Scalar eval(const GeomTailSeries& s, const Rat& t) {
    if (t < 0) throw DomainError("eval requires t >= 0");
    Scalar st(t);

    // Prefix polynomial, Horner from the top coefficient.
    Scalar poly(0);
    for (std::size_t i = s.prefix.size(); i-- > 0;)
        poly = poly * st + s.prefix[i];

    if (s.tail_is_zero()) return poly;

    // Geometric tail: a_m t^m / (1 - r t), valid iff |r| t < 1.
    if (s.ratio.abs2() * t * t >= 1) throw DivergentAt(rat_str(t));
    Scalar tm{rat_pow(t, static_cast<long>(s.tail_start()))};
    return poly + s.tail_first * tm / (Scalar(1) - s.ratio * st);
}

Scalar renorm_limit(const GeomTailSeries& s) {
    // (1 - t/2) * prefix(t) -> 0 at t = 2 for any polynomial prefix.
    if (s.tail_is_zero()) return Scalar(0);
    if (s.ratio == one_half()) {
        Scalar two_m{rat_pow(2, static_cast<long>(s.tail_start()))};
        return s.tail_first * two_m;
    }
    if (s.ratio.abs2() <= quarter()) return Scalar(0);
    throw DivergentBeforeLimit();
}

bool series_equal(const GeomTailSeries& a, const GeomTailSeries& b) {
    std::size_t m = std::max(a.tail_start(), b.tail_start());
    // Points t_i = 1/((i+2)(1+ceil(max |r|^2))) keep |r| t < 1 for both tails.
    Rat bound = a.ratio.abs2();
    if (b.ratio.abs2() > bound) bound = b.ratio.abs2();
    Int c = numerator(bound) / denominator(bound) + 2;
    for (std::size_t i = 0; i < m + 3; ++i) {
        Rat t = make_rat(1, c * Int(i + 2));
        if (eval(a, t) != eval(b, t)) return false;
    }
    return true;
}

SeriesSum add(SeriesSum a, const SeriesSum& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
}

SeriesSum scale(const Scalar& c, SeriesSum s) {
    for (GeomTailSeries& term : s.terms) {
        for (Scalar& coeff : term.prefix) coeff *= c;
        term.tail_first *= c;
    }
    return s;
}

Scalar eval_sum(const SeriesSum& s, const Rat& t) {
    Scalar acc(0);
    for (const GeomTailSeries& term : s.terms) acc += eval(term, t);
    return acc;
}

Scalar renorm_limit_sum(const SeriesSum& s) {
    Scalar acc(0);
    for (const GeomTailSeries& term : s.terms) acc += renorm_limit(term);
    return acc;
}

}  // namespace fcs
