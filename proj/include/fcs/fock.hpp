#pragma once

#include "fcs/coeff_seq.hpp"
#include "fcs/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace fcs {

/*
 * Brute-force model of the free (Boltzmannian) Fock space over a two-mode
 * one-particle space: vectors are finite linear combinations of tensor words
 * over the letters {0,1}, with exact Gaussian-rational coefficients.
 *
 * Conventions, fixed once:
 *  - A word stores its outermost (most recently created) factor at index 0,
 *    so create() prepends a letter.
 *  - In the coherent-state recursion, letter '0' carries the coefficient u_k
 *    and letter '1' carries (1 - u_k); hence word position 0 corresponds to
 *    sequence index k-1.
 *  - inner() is conjugate-linear in its FIRST argument.
 */
using TensorWord = std::string;  // characters '0'/'1'; "" is the vacuum word

class FockVector {
public:
    FockVector() = default;

    static FockVector zero() { return FockVector(); }
    static FockVector vacuum() { return single("", Scalar(1)); }
    static FockVector single(TensorWord word, const Scalar& coeff);

    const std::map<TensorWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t grade() const;  // max word length present; 0 for the zero vector

    // Coefficient of a word, 0 when absent.
    Scalar coeff(const TensorWord& word) const;

    // Accumulates into the word's coefficient; zero results are dropped, so
    // no zero coefficient is ever stored.
    void add_term(const TensorWord& word, const Scalar& coeff);

    FockVector scaled(const Scalar& c) const;

    friend FockVector operator+(const FockVector& a, const FockVector& b);
    friend FockVector operator-(const FockVector& a, const FockVector& b);
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

private:
    std::map<TensorWord, Scalar> terms_;
};

// Creation: prepend letter i to every word.
FockVector create(int letter, const FockVector& v);

// Annihilation: contract the leading factor against letter i; kills the
// vacuum component.
FockVector annihilate(int letter, const FockVector& v);

// Sum over common words of conj(coeff of v) * coeff of w.
Scalar inner(const FockVector& v, const FockVector& w);

// Checks annihilate(i, create(j, v)) == delta_ij * v, exactly.
struct CcrReport {
    FockVector lhs;
    FockVector rhs;
    bool equal = false;
};
CcrReport check_ccr(int i, int j, const FockVector& v);

// k-th vector of the coherent recursion: X^0 is the vacuum and
// X^{k+1} = (u_k A0^+ + (1-u_k) A1^+) X^k. Pure grade k, at most 2^k words
// (exactly one word when the sequence is binary).
FockVector coherent_component(const CoeffSeq& u, std::size_t k);

// All components X^0..X^N, built incrementally.
std::vector<FockVector> coherent_components(const CoeffSeq& u, std::size_t n);

// Truncated coherent state sum_{k<=N} lambda^k X^k.
FockVector coherent_truncated(const CoeffSeq& u, const Scalar& lambda, std::size_t n);

}  // namespace fcs
