#pragma once

#include "fcs/coeff_seq.hpp"
#include "fcs/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fcs {

/*
 * Exact model of the 2-adic integers at desk scale: eventually-constant
 * points, discs with Haar measure, locally constant (step) functions stored
 * as full value tables at a fixed level, and distributions acting on them.
 *
 * Digit/residue convention, used everywhere: digit i has weight 2^i, and a
 * level-n residue is indexed by b = sum b_i 2^i, so bit i of the table index
 * is digit i. Bit strings are written digit 0 first ("011" = 0 + 2 + 4 = 6).
 */
struct DyadicPoint {
    std::vector<int> prefix;  // digits d_0..d_{m-1}
    int tail = 0;             // d_j for j >= m

    int digit(std::size_t j) const {
        return j < prefix.size() ? prefix[j] : tail;
    }
    // Value mod 2^k, i.e. the level-k residue containing the point.
    std::size_t residue(std::size_t k) const;

    friend bool operator==(const DyadicPoint& a, const DyadicPoint& b);
    friend bool operator!=(const DyadicPoint& a, const DyadicPoint& b) {
        return !(a == b);
    }
};

// The 2-adic integer represented by a binary coefficient sequence.
// Throws DomainError on non-binary input.
DyadicPoint point_of(const CoeffSeq& u);

// Index of the first differing digit = 2-adic valuation of x - y;
// nullopt when x = y (infinite valuation, distance 0).
std::optional<std::size_t> val2_diff(const DyadicPoint& x, const DyadicPoint& y);

// Digits of value below the given width, digit 0 first; and back.
std::vector<int> bits_of(std::size_t value, std::size_t width);
std::size_t bits_value(const std::vector<int>& bits);

/*
 * Disc of radius 2^{-level}: all 2-adic integers agreeing with the center in
 * the first `level` digits. center is the canonical residue mod 2^level.
 */
struct Disc {
    std::size_t level = 0;
    std::size_t center = 0;

    friend bool operator==(const Disc& a, const Disc& b) {
        return a.level == b.level && a.center == b.center;
    }
};

Disc make_disc(std::size_t level, std::size_t center);
Disc disc_from_bits(const std::vector<int>& center_bits);
Disc disc_around(const DyadicPoint& x, std::size_t level);

bool disc_contains(const Disc& d, const DyadicPoint& x);

// Ultrametric dichotomy: two discs are equal, strictly nested, or disjoint.
enum class DiscRelation { Equal, FirstInsideSecond, SecondInsideFirst, Disjoint };
DiscRelation disc_relation(const Disc& a, const Disc& b);

// Normalized Haar measure, mu(Z_2) = 1: exactly 2^{-level}.
Rat haar_measure(const Disc& d);

/*
 * Locally constant function at resolution 2^{-level}: a full table of 2^level
 * values indexed by residue. Refining to a deeper level represents the same
 * function; equality is decided at the common refinement.
 */
struct LocallyConstantFn {
    std::size_t level = 0;
    std::vector<Scalar> values;  // size 2^level

    LocallyConstantFn() : values(1, Scalar(0)) {}
    LocallyConstantFn(std::size_t lvl, std::vector<Scalar> vals);
};

LocallyConstantFn indicator(const Disc& d);
// theta_k(x - x0): indicator of the level-k disc around x0.
LocallyConstantFn theta(const DyadicPoint& x0, std::size_t k);

LocallyConstantFn refine(const LocallyConstantFn& f, std::size_t level);
LocallyConstantFn add(const LocallyConstantFn& f, const LocallyConstantFn& g);
LocallyConstantFn scale(const Scalar& c, const LocallyConstantFn& f);
LocallyConstantFn pointwise_mul(const LocallyConstantFn& f, const LocallyConstantFn& g);

// Same function on Z_2, regardless of representation level.
bool fn_equal(const LocallyConstantFn& f, const LocallyConstantFn& g);

Scalar value_at(const LocallyConstantFn& f, const DyadicPoint& x);

// integral over Z_2 w.r.t. Haar measure: sum_b values[b] * 2^{-level}.
Scalar integrate(const LocallyConstantFn& f);

// L2 pairing integrate(conj(f) * g), conjugate-linear in f.
Scalar l2_pairing(const LocallyConstantFn& f, const LocallyConstantFn& g);

/*
 * Distribution on Z_2: either a delta function at a point, the functional
 * induced by a coherent-state descriptor through the renormalized pairing,
 * or a finite linear combination.
 */
struct PadicDistribution {
    enum class Kind { Delta, Induced, Combo };

    Kind kind = Kind::Delta;
    DyadicPoint at;   // Delta
    CoeffSeq by;      // Induced
    std::vector<std::pair<Scalar, PadicDistribution>> parts;  // Combo

    static PadicDistribution delta(DyadicPoint x);
    static PadicDistribution induced(CoeffSeq u);
    static PadicDistribution combo(std::vector<std::pair<Scalar, PadicDistribution>> parts);
};

// The binary-prefix, tail-1/2 descriptor of a level-n residue: the coherent
// state paired against to read a function's value on that residue.
CoeffSeq residue_descriptor(std::size_t level, std::size_t b);

// Delta: value of f on the residue containing the point.
// Induced(U): sum_b f(b) * 2^{-level} * renorm_pairing(U, residue descriptor);
// zero values are skipped, so indicators cost one pairing.
// Combo: linear combination. Linear in f throughout.
Scalar apply_distribution(const PadicDistribution& t, const LocallyConstantFn& f);

}  // namespace fcs
