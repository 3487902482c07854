#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcs/sweeps.hpp"

using namespace fcs;

namespace {

bool rows_identical(const std::vector<VerificationRow>& a,
                    const std::vector<VerificationRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].claim != b[i].claim || a[i].params != b[i].params ||
            a[i].lhs != b[i].lhs || a[i].rhs != b[i].rhs || a[i].equal != b[i].equal)
            return false;
    return true;
}

SweepConfig small(std::size_t max_level, Exec exec = Exec::Serial) {
    SweepConfig cfg;
    cfg.max_level = max_level;
    cfg.exec = exec;
    cfg.samples_per_cell = 4;
    cfg.lemma3_count = 6;
    cfg.lemma3_imax = 3;
    cfg.theorem_count = 12;
    cfg.triangle_family = 5;
    return cfg;
}

}  // namespace

TEST_CASE("rng draws a pinned deterministic stream") {
    Rng a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.pick(97) == b.pick(97));
        CHECK(a.rat() == b.rat());
        CHECK(a.scalar() == b.scalar());
    }
    CHECK(a.bit_vec(16) == b.bit_vec(16));
    CHECK(a.binary_seq(5, Scalar(0)) == b.binary_seq(5, Scalar(0)));
    CHECK(a.rational_seq(4, Scalar(1)) == b.rational_seq(4, Scalar(1)));

    // Values stay in the advertised small ranges.
    Rng c(7);
    for (int i = 0; i < 200; ++i) {
        const Rat r = c.rat();
        CHECK(r >= -9);
        CHECK(r <= 9);
        CHECK(c.pick(5) < 5);
    }
}

TEST_CASE("sweeps are reproducible run to run") {
    const SweepConfig cfg = small(4);
    CHECK(rows_identical(sweep_lemma3(cfg).rows, sweep_lemma3(cfg).rows));
    CHECK(rows_identical(sweep_theorem(cfg).rows, sweep_theorem(cfg).rows));
    CHECK(rows_identical(sweep_all(small(2)).rows, sweep_all(small(2)).rows));
}

TEST_CASE("parallel execution yields the serial rows exactly") {
    CHECK(rows_identical(sweep_lemma1(small(3, Exec::Serial)).rows,
                         sweep_lemma1(small(3, Exec::Parallel)).rows));
    CHECK(rows_identical(sweep_theorem(small(4, Exec::Serial)).rows,
                         sweep_theorem(small(4, Exec::Parallel)).rows));
    CHECK(rows_identical(sweep_proposition(small(2, Exec::Serial)).rows,
                         sweep_proposition(small(2, Exec::Parallel)).rows));
}

TEST_CASE("small sweeps verify every instance") {
    CHECK(sweep_lemma1(small(2)).ok());
    CHECK(sweep_lemma2(small(2)).ok());
    CHECK(sweep_lemma3(small(3)).ok());
    CHECK(sweep_proposition(small(3)).ok());
    CHECK(sweep_theorem(small(3)).ok());
}

TEST_CASE("exhaustive cells produce the predicted row counts") {
    // lemma1 at level L <= 5: (sum_k 2^k)^2 pairs, one row each.
    CHECK(sweep_lemma1(small(3)).rows.size() == 15 * 15);
    CHECK(sweep_lemma1(small(5)).rows.size() == 63 * 63);

    // lemma2: two tail choices, three routes per instance.
    CHECK(sweep_lemma2(small(3)).rows.size() == 2 * 15 * 15 * 3);

    // lemma3: one row per halving step plus the ratio row.
    const SweepConfig cfg = small(4);
    CHECK(sweep_lemma3(cfg).rows.size() == cfg.lemma3_count * (cfg.lemma3_imax + 1));

    // theorem: all binary truncated pairs (lengths 0..4) plus sampled pairs.
    const std::size_t binary4 = (std::size_t(1) << 5) - 1;
    CHECK(sweep_theorem(cfg).rows.size() == binary4 * binary4 + cfg.theorem_count);

    // proposition: all family pairs x 3 values of t, plus triangle triples
    // (3 role assignments each) over the seeded family.
    const std::size_t family = (std::size_t(1) << 4) - 1;  // lengths 0..3
    const std::size_t tri = cfg.triangle_family;
    const std::size_t triples = tri * (tri - 1) * (tri - 2) / 6;
    CHECK(sweep_proposition(small(3)).rows.size() ==
          family * family * 3 + triples * 3 * 3);
}

TEST_CASE("sweep_all concatenates in claim order") {
    const Sweep all = sweep_all(small(2));
    CHECK(all.ok());
    CHECK(all.rows.front().claim == "lemma1");
    CHECK(all.rows.back().claim == "theorem");

    std::size_t parts = 0;
    for (Sweep (*fn)(const SweepConfig&) :
         {sweep_lemma1, sweep_lemma2, sweep_lemma3, sweep_proposition, sweep_theorem})
        parts += fn(small(2)).rows.size();
    CHECK(all.rows.size() == parts);

    // Claims appear contiguously in the fixed order.
    const char* order[] = {"lemma1", "lemma2", "lemma3", "proposition", "theorem"};
    std::size_t at = 0;
    for (const auto& r : all.rows) {
        while (at < 4 && r.claim != order[at]) ++at;
        CHECK(r.claim == order[at]);
    }
}

TEST_CASE("seeds steer the sampled parameters") {
    SweepConfig a = small(4);
    SweepConfig b = small(4);
    b.seed = 2;
    std::string pa, pb;
    for (const auto& r : sweep_theorem(a).rows) pa += r.params;
    for (const auto& r : sweep_theorem(b).rows) pb += r.params;
    CHECK(pa != pb);

    // Both still verify.
    CHECK(sweep_theorem(b).ok());
}

TEST_CASE("level guard rejects oversized sweeps") {
    SweepConfig cfg = small(13);
    CHECK_THROWS_AS(sweep_lemma1(cfg), DomainError);
    CHECK_THROWS_AS(sweep_lemma2(cfg), DomainError);
    CHECK_THROWS_AS(sweep_lemma3(cfg), DomainError);
    CHECK_THROWS_AS(sweep_proposition(cfg), DomainError);
    CHECK_THROWS_AS(sweep_theorem(cfg), DomainError);
    CHECK_THROWS_AS(sweep_all(cfg), DomainError);
}
