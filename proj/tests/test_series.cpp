#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcs/series.hpp"

using namespace fcs;

namespace {

const Scalar kHalf{make_rat(1, 2)};
const Scalar kI{Rat(0), Rat(1)};

GeomTailSeries geometric(Scalar first, Scalar ratio) {
    return GeomTailSeries({}, std::move(first), std::move(ratio));
}

// sum_{i<=n} a_i t^i by brute force.
Scalar partial_sum(const GeomTailSeries& s, const Rat& t, std::size_t n) {
    Scalar sum(0);
    Scalar tp(1);
    for (std::size_t i = 0; i <= n; ++i) {
        sum += s.coeff(i) * tp;
        tp *= Scalar(t);
    }
    return sum;
}

}  // namespace

TEST_CASE("coeff walks prefix then geometric tail") {
    const GeomTailSeries s({Scalar(3), Scalar(-2)}, Scalar(make_rat(1, 4)), kHalf);
    CHECK(s.tail_start() == 2);
    CHECK(s.coeff(0) == Scalar(3));
    CHECK(s.coeff(1) == Scalar(-2));
    CHECK(s.coeff(2) == Scalar(make_rat(1, 4)));
    CHECK(s.coeff(5) == Scalar(make_rat(1, 32)));
    CHECK(!s.tail_is_zero());
    CHECK(GeomTailSeries({Scalar(1)}, Scalar(0), Scalar(9)).tail_is_zero());
}

TEST_CASE("eval: closed forms at rational points") {
    // Plain geometric series: 1/(1-t).
    CHECK(eval(geometric(Scalar(1), Scalar(1)), make_rat(1, 4)) == Scalar(make_rat(4, 3)));

    // Two prefix terms then ratio 1/2: converges at t=1 to 1 + 1 + 1/(1-1/2) = 4.
    const GeomTailSeries s({Scalar(1), Scalar(1)}, Scalar(1), kHalf);
    CHECK(eval(s, Rat(1)) == Scalar(4));

    // Complex ratio i/2 at t=1: 1/(1-i/2) = 4/5 + 2/5 i.
    CHECK(eval(geometric(Scalar(1), kHalf * kI), Rat(1)) ==
          Scalar(make_rat(4, 5), make_rat(2, 5)));

    // Zero tail is a polynomial, defined everywhere.
    const GeomTailSeries poly({Scalar(3), Scalar(-2)}, Scalar(0), Scalar(0));
    CHECK(eval(poly, Rat(5)) == Scalar(-7));
    CHECK(eval(poly, Rat(100)) == Scalar(-197));
}

TEST_CASE("eval: divergence and domain checks") {
    CHECK_THROWS_AS(eval(geometric(Scalar(1), Scalar(1)), Rat(1)), DivergentAt);
    CHECK_THROWS_AS(eval(geometric(Scalar(1), kHalf), Rat(2)), DivergentAt);
    CHECK_THROWS_AS(eval(geometric(Scalar(1), Scalar(-1)), Rat(1)), DivergentAt);
    CHECK_THROWS_AS(eval(geometric(Scalar(1), kHalf), make_rat(-1, 4)), DomainError);
    // Inside the radius all is well.
    CHECK(eval(geometric(Scalar(1), kHalf), make_rat(3, 2)) == Scalar(4));
}

TEST_CASE("eval equals partial sum plus exact geometric remainder") {
    const GeomTailSeries s({Scalar(2), Scalar(-1), Scalar(make_rat(1, 3))},
                           kHalf, kHalf);
    const Rat t = make_rat(1, 3);
    const Scalar total = eval(s, t);
    const std::size_t m = s.tail_start();
    for (std::size_t n : {m, m + 3, m + 7}) {
        // remainder = a_{n+1} t^{n+1} / (1 - r t) for n >= m.
        const Scalar rem =
            s.coeff(n + 1) * Scalar(t).pow(n + 1) / (Scalar(1) - kHalf * Scalar(t));
        CHECK(partial_sum(s, t, n) + rem == total);
    }
}

TEST_CASE("renorm_limit trichotomy") {
    // Ratio exactly 1/2: limit is tail_first * 2^m.
    CHECK(renorm_limit(GeomTailSeries({Scalar(5), Scalar(7)}, Scalar(1), kHalf)) ==
          Scalar(4));
    CHECK(renorm_limit(geometric(kI, kHalf)) == kI);

    // Modulus <= 1/2 but not 1/2 itself: limit 0.
    CHECK(renorm_limit(geometric(Scalar(1), Scalar(make_rat(-1, 2)))) == Scalar(0));
    CHECK(renorm_limit(geometric(Scalar(1), kHalf * kI)) == Scalar(0));
    CHECK(renorm_limit(geometric(Scalar(1), Scalar(make_rat(1, 3)))) == Scalar(0));

    // Zero tail: limit 0 regardless of prefix or declared ratio.
    CHECK(renorm_limit(GeomTailSeries({Scalar(9), Scalar(9)}, Scalar(0), Scalar(7))) ==
          Scalar(0));

    // Modulus beyond 1/2: diverges before t = 2.
    CHECK_THROWS_AS(renorm_limit(geometric(Scalar(1), Scalar(make_rat(3, 5)))),
                    DivergentBeforeLimit);
    CHECK_THROWS_AS(renorm_limit(geometric(Scalar(1), Scalar(1))),
                    DivergentBeforeLimit);
    CHECK_THROWS_AS(renorm_limit(geometric(Scalar(1), kHalf + kHalf * kI)),
                    DivergentBeforeLimit);
}

TEST_CASE("renorm_limit is the boundary value of (1 - t/2) S(t)") {
    // S(t) = 1 + t/(1 - t/2), so (1 - t/2) S(t) = 1 + t/2 -> 2 as t -> 2.
    const GeomTailSeries s({Scalar(1)}, Scalar(1), kHalf);
    const Scalar limit = renorm_limit(s);
    CHECK(limit == Scalar(2));

    Rat prev_gap(-1);
    for (long n = 1; n <= 12; ++n) {
        const Rat t = Rat(2) - rat_pow(make_rat(1, 2), n);
        const Scalar damped = (Scalar(1) - kHalf * Scalar(t)) * eval(s, t);
        const Rat gap = (damped - limit).abs2();
        if (n > 1) CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap > 0);  // strictly approaching, never attained
}

TEST_CASE("series_equal decides function equality across representations") {
    // Geometric ratio 1/2 written two ways.
    const GeomTailSeries a = geometric(Scalar(1), kHalf);
    const GeomTailSeries b({Scalar(1)}, kHalf, kHalf);
    CHECK(series_equal(a, b));
    CHECK(!series_equal(a, GeomTailSeries({Scalar(1)}, Scalar(make_rat(1, 3)), kHalf)));

    // Same polynomial padded with explicit zeros.
    const GeomTailSeries p({Scalar(1), Scalar(2)}, Scalar(0), Scalar(0));
    const GeomTailSeries q({Scalar(1), Scalar(2), Scalar(0), Scalar(0)}, Scalar(0),
                           Scalar(0));
    CHECK(series_equal(p, q));
    CHECK(!series_equal(p, GeomTailSeries({Scalar(1), Scalar(3)}, Scalar(0), Scalar(0))));
}

TEST_CASE("series sums evaluate and renormalize term-wise") {
    CHECK(eval_sum(SeriesSum{}, Rat(1)) == Scalar(0));
    CHECK(renorm_limit_sum(SeriesSum{}) == Scalar(0));

    SeriesSum s;
    s.terms.push_back(geometric(Scalar(1), Scalar(1)));                // 1/(1-t)
    s.terms.push_back(GeomTailSeries({Scalar(1)}, Scalar(0), Scalar(0)));  // 1
    CHECK(eval_sum(s, make_rat(1, 2)) == Scalar(3));
    CHECK(eval_sum(scale(Scalar(3), s), make_rat(1, 2)) == Scalar(9));

    SeriesSum r;
    r.terms.push_back(GeomTailSeries({Scalar(1), Scalar(1)}, Scalar(1), kHalf));
    r.terms.push_back(GeomTailSeries({Scalar(8)}, Scalar(0), Scalar(0)));
    CHECK(renorm_limit_sum(r) == Scalar(4));

    const Scalar c(Rat(2), Rat(-3));
    CHECK(renorm_limit_sum(scale(c, r)) == c * renorm_limit_sum(r));

    const SeriesSum both = add(s, r);
    CHECK(both.terms.size() == 4);
    CHECK(eval_sum(both, make_rat(1, 2)) ==
          eval_sum(s, make_rat(1, 2)) + eval_sum(r, make_rat(1, 2)));
}
