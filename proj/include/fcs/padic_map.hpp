#pragma once

#include "fcs/coeff_seq.hpp"
#include "fcs/dyadic.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fcs {

/*
 * The bridge between the two sides of the library: truncated coherent-state
 * descriptors map to locally constant functions, general descriptors to
 * distributions, and the verify_* functions check each claimed identity by
 * computing both sides through independent code paths.
 */

// Image of a truncated descriptor (prefix length k, tail 1/2) as the level-k
// function with value 2^k * prod_{j<k} (w_j if b_j = 1 else 1 - w_j) on
// residue b. For a binary prefix V this is 2^k * theta_k(x - V), the
// Haar-normalized disc indicator; general prefixes are the multilinear
// expansion of that rule into the 2^k binary branches. The value on residue
// b is conj(renorm_pairing(W, descriptor of b)) scaled by 2^k's cancellation
// of the cell measure — the unique table making the pairing identity hold.
LocallyConstantFn phi_state(const CoeffSeq& w);

// Binary descriptors become delta functions at their 2-adic point; anything
// else becomes the induced functional acting through renormalized pairings.
PadicDistribution phi_functional(const CoeffSeq& u);

// One checked instance of a claim: both sides rendered exactly, plus the
// verdict. Sweeps are flat lists of these rows.
struct VerificationRow {
    std::string claim;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

bool all_equal(const std::vector<VerificationRow>& rows);

// Renormalized pairing of two truncated binary descriptors vs. the
// Haar-normalized overlap integral of their discs: both equal
// min(2^k, 2^l) on nested discs and 0 on disjoint ones.
std::vector<VerificationRow> verify_lemma1(const std::vector<int>& u_bits,
                                           const std::vector<int>& v_bits);

// Pairing of a binary descriptor against a truncated one vs. 2^j * disc
// membership, plus the same value through the induced functional and the
// delta function acting on the normalized indicator.
std::vector<VerificationRow> verify_lemma2(const CoeffSeq& u,
                                           const std::vector<int>& v_bits);

// Against a truncated descriptor the grade inner products halve at each
// step past the prefix (checked on the brute-force oracle for i = 1..i_max)
// and the pairing series tail ratio is exactly 1/2.
std::vector<VerificationRow> verify_lemma3(const CoeffSeq& u, const CoeffSeq& w,
                                           std::size_t i_max);

// Isometry: rho^2(U,V) * (1-t)/2 = t^{val2(U-V)} for binary descriptors.
std::vector<VerificationRow> verify_proposition(const CoeffSeq& u, const CoeffSeq& v,
                                                const Rat& t);

// Strong triangle inequality rho^2(U,V) <= max(rho^2(U,W), rho^2(V,W));
// the row's verdict is the inequality, lhs/rhs are the two sides.
std::vector<VerificationRow> verify_proposition_triangle(const CoeffSeq& u,
                                                         const CoeffSeq& v,
                                                         const CoeffSeq& w,
                                                         const Rat& t);

// L2 pairing of the function images equals the renormalized state pairing,
// for any two truncated descriptors.
std::vector<VerificationRow> verify_theorem(const CoeffSeq& u, const CoeffSeq& v);

}  // namespace fcs
