#pragma once

#include "fcs/padic_map.hpp"
#include "fcs/parallel.hpp"

#include <cstdint>
#include <random>

namespace fcs {

/*
 * Verification sweeps: each claim's verifier applied over a parameter family,
 * exhaustively up to the scale where exhaustion is feasible and by seeded
 * sampling above it. Parameters are generated serially up front, so rows are
 * identical (content and order) in serial and parallel execution.
 */

// Deterministic source of small exact values. std::mt19937_64 produces a
// standardized sequence, so a seed pins every sweep row on every platform.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    int bit() { return static_cast<int>(pick(2)); }

    // Fraction with numerator in -9..9 and denominator in 1..9.
    Rat rat();
    // Gaussian rational; the imaginary part is nonzero about half the time.
    Scalar scalar();

    std::vector<int> bit_vec(std::size_t len);
    CoeffSeq binary_seq(std::size_t len, const Scalar& tail);
    CoeffSeq rational_seq(std::size_t len, const Scalar& tail);
};

struct SweepConfig {
    std::size_t max_level = 8;   // prefix lengths / disc levels covered
    std::uint64_t seed = 1;      // drives all sampled parameters
    Exec exec = Exec::Serial;

    std::size_t samples_per_cell = 64;  // sampled instances per cell past the
                                        // exhaustive range
    std::size_t lemma3_count = 50;      // random descriptor pairs
    std::size_t lemma3_imax = 8;        // halving steps checked per pair
    std::size_t theorem_count = 200;    // random truncated pairs
    std::size_t triangle_family = 40;   // sequences feeding triangle triples
};

struct Sweep {
    std::vector<VerificationRow> rows;
    bool ok() const { return all_equal(rows); }
};

// Pairing of truncated binary descriptors vs. normalized disc overlap,
// exhaustive over all center pairs for levels <= 5.
Sweep sweep_lemma1(const SweepConfig& cfg);

// Delta-function behaviour of binary descriptors on normalized indicators,
// exhaustive for prefixes and levels <= 6, three routes per instance.
Sweep sweep_lemma2(const SweepConfig& cfg);

// Halving recursion and tail ratio 1/2 against truncated descriptors, on
// seeded random Gaussian-rational sequences via the brute-force oracle.
Sweep sweep_lemma3(const SweepConfig& cfg);

// Isometry identity over all binary prefix pairs (tail 0, lengths <= 6,
// t in {1/4, 1/2, 3/4}) plus the strong triangle inequality over all
// triples from a seeded family.
Sweep sweep_proposition(const SweepConfig& cfg);

// Pairing identity between function images and renormalized state pairings:
// exhaustive over binary truncated pairs up to level 6, plus seeded pairs
// with binary, rational, and mixed prefixes across the full level range.
Sweep sweep_theorem(const SweepConfig& cfg);

// All of the above, concatenated in claim order.
Sweep sweep_all(const SweepConfig& cfg);

}  // namespace fcs
