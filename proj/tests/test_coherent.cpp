#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcs/coherent.hpp"

using namespace fcs;

namespace {

const Scalar kHalf{make_rat(1, 2)};
const Scalar kI{Rat(0), Rat(1)};

CoeffSeq seq(std::vector<Scalar> prefix, Scalar tail) {
    return CoeffSeq(std::move(prefix), std::move(tail));
}

}  // namespace

TEST_CASE("overlap coefficients conjugate the first argument") {
    const CoeffSeq u = seq({kI}, Scalar(0));
    const CoeffSeq v = seq({Scalar(1)}, Scalar(0));
    const OverlapCoeffs c = overlap_coeffs(u, v);
    REQUIRE(c.head.size() == 1);
    CHECK(c.head[0] == -kI);  // conj(i)*1 + conj(1-i)*0
    CHECK(c.tail == Scalar(1));
    CHECK(overlap_coeffs(v, u).head[0] == kI);

    // Truncated tail forces the contraction 1/2 no matter the other side.
    for (const Scalar& other : {Scalar(0), Scalar(1), kHalf, Scalar(Rat(2), Rat(5))}) {
        CHECK(overlap_coeffs(seq({}, kHalf), seq({}, other)).tail == kHalf);
        CHECK(overlap_coeffs(seq({}, other), seq({}, kHalf)).tail == kHalf);
    }
}

TEST_CASE("pairing series coefficients are prefix products") {
    // Both truncated and empty: pure geometric ratio 1/2, limit 1.
    const CoeffSeq empty = seq({}, kHalf);
    const GeomTailSeries g = pairing_series(empty, empty);
    CHECK(g.tail_start() == 0);
    CHECK(g.tail_first == Scalar(1));
    CHECK(g.ratio == kHalf);
    CHECK(renorm_pairing(empty, empty) == Scalar(1));

    // Matching two-bit prefixes: limit 1 * 2^2 = 4.
    const CoeffSeq u11 = CoeffSeq::from_bits(std::string("11"), kHalf);
    CHECK(renorm_pairing(u11, u11) == Scalar(4));

    // Mismatched first bit: every coefficient past a_0 vanishes, limit 0.
    const CoeffSeq u0 = CoeffSeq::from_bits(std::string("0"), kHalf);
    const CoeffSeq u1 = CoeffSeq::from_bits(std::string("1"), kHalf);
    const GeomTailSeries z = pairing_series(u0, u1);
    CHECK(z.coeff(0) == Scalar(1));
    CHECK(z.tail_first == Scalar(0));
    CHECK(renorm_pairing(u0, u1) == Scalar(0));
}

TEST_CASE("series coefficients match the brute-force grade inner products") {
    const CoeffSeq u = seq({Scalar(make_rat(1, 3), Rat(1)), Scalar(2)}, Scalar(0));
    const CoeffSeq v = seq({-kI, kHalf, Scalar(3)}, Scalar(1));
    const GeomTailSeries s = pairing_series(u, v);
    const auto xu = coherent_components(u, 6);
    const auto xv = coherent_components(v, 6);
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(s.coeff(k) == inner(xu[k], xv[k]));
}

TEST_CASE("binary pairing against a truncated disc descriptor") {
    // <X_U, X_V> with V = 01|1/2 reads off membership of U in the disc.
    const CoeffSeq v = CoeffSeq::from_bits(std::string("01"), kHalf);
    CHECK(renorm_pairing(CoeffSeq::from_bits(std::string("011"), Scalar(0)), v) ==
          Scalar(4));
    CHECK(renorm_pairing(CoeffSeq::from_bits(std::string("0"), Scalar(1)), v) ==
          Scalar(4));
    CHECK(renorm_pairing(CoeffSeq::from_bits(std::string("10"), Scalar(0)), v) ==
          Scalar(0));
}

TEST_CASE("equal binary descriptors have no renormalized limit") {
    const CoeffSeq u = CoeffSeq::from_bits(std::string("01"), Scalar(0));
    CHECK_THROWS_AS(renorm_pairing(u, u), DivergentBeforeLimit);

    const PairingReport r = pairing_report(u, u);
    CHECK(!r.limit);
    CHECK(!r.limit_error.empty());
    CHECK(r.series.ratio == Scalar(1));

    const PairingReport ok = pairing_report(seq({}, kHalf), seq({}, kHalf));
    CHECK(ok.limit);
    CHECK(*ok.limit == Scalar(1));
    CHECK(ok.limit_error.empty());
}

TEST_CASE("first_mismatch compares infinite sequences") {
    const auto fm = [](const char* a, const char* b) {
        return first_mismatch(CoeffSeq::from_bits(std::string(a), Scalar(0)),
                              CoeffSeq::from_bits(std::string(b), Scalar(0)));
    };
    CHECK(fm("0110", "0010") == std::size_t(1));
    CHECK(fm("0", "1") == std::size_t(0));
    CHECK(!fm("01", "010").has_value());  // same sequence, different prefixes

    // Mismatch hiding in the tail region.
    CHECK(first_mismatch(CoeffSeq::from_bits(std::string("11"), Scalar(0)),
                         CoeffSeq::from_bits(std::string("1"), Scalar(1))) ==
          std::size_t(2));
    CHECK(first_mismatch(seq({}, kHalf), seq({}, Scalar(0))) == std::size_t(0));
}

TEST_CASE("rho distance closed form") {
    const CoeffSeq u00 = CoeffSeq::from_bits(std::string("00"), Scalar(0));
    const CoeffSeq u01 = CoeffSeq::from_bits(std::string("01"), Scalar(0));
    CHECK(rho_distance_sq(u00, u01, make_rat(1, 4)) == Scalar(make_rat(2, 3)));

    const CoeffSeq u0 = CoeffSeq::from_bits(std::string("0"), Scalar(0));
    const CoeffSeq u1 = CoeffSeq::from_bits(std::string("1"), Scalar(0));
    CHECK(rho_distance_sq(u0, u1, make_rat(1, 2)) == Scalar(4));

    // Equal points, even across representations.
    CHECK(rho_distance_sq(u0, CoeffSeq::from_bits(std::string("00"), Scalar(0)),
                          make_rat(1, 2)) == Scalar(0));

    CHECK_THROWS_AS(rho_distance_sq(u0, u1, Rat(1)), DivergentAt);
    CHECK_THROWS_AS(rho_distance_sq(u0, u1, make_rat(3, 2)), DivergentAt);
    CHECK_THROWS_AS(rho_distance_sq(u0, u1, Rat(0)), DomainError);
    CHECK_THROWS_AS(rho_distance_sq(u0, u1, make_rat(-1, 4)), DomainError);
    CHECK_THROWS_AS(rho_distance_sq(seq({kHalf}, Scalar(0)), u1, make_rat(1, 4)),
                    DomainError);
}

TEST_CASE("rho relates to the Gram expansion with one extra power of t") {
    // ||X_U - X_V||^2 summed over grades equals t * rho^2: the grade-k inner
    // products start differing one level after the digits do.
    const CoeffSeq u = CoeffSeq::from_bits(std::string("00"), Scalar(0));
    const CoeffSeq v = CoeffSeq::from_bits(std::string("01"), Scalar(0));
    for (const Rat& t : {make_rat(1, 4), make_rat(1, 2), make_rat(3, 4)}) {
        const Scalar gram = eval(pairing_series(u, u), t) + eval(pairing_series(v, v), t) -
                            eval(pairing_series(u, v), t) - eval(pairing_series(v, u), t);
        CHECK(gram == Scalar(t) * rho_distance_sq(u, v, t));
    }
}

TEST_CASE("eigen residual is exactly the boundary term") {
    const CoeffSeq u = seq({kI, kHalf + kI}, Scalar(make_rat(1, 3)));
    const Scalar lambda(make_rat(1, 3), make_rat(1, 3));
    for (std::size_t n : {0, 1, 4, 6}) {
        const FockVector res = eigen_residual(u, lambda, n);
        CHECK(res == coherent_component(u, n).scaled(-lambda.pow(n + 1)));
    }

    // Binary descriptor, real eigenvalue.
    const CoeffSeq b = CoeffSeq::from_bits(std::string("010"), Scalar(0));
    const FockVector res = eigen_residual(b, kHalf, 3);
    CHECK(res == coherent_component(b, 3).scaled(-kHalf.pow(4)));
    CHECK(res.grade() == 3);
    CHECK(res.terms().size() == 1);
}
