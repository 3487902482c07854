#pragma once

#include "fcs/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fcs {

/*
 * Eventually-constant coefficient sequence u_0, u_1, u_2, ...: an explicit
 * finite prefix followed by a constant tail. This is the descriptor of a
 * coherent state; every pairing computed here depends only on finitely many
 * entries plus one tail contraction, so the representation is exact.
 *
 * Binary sequences (all entries 0/1) double as 2-adic integers via
 * U = sum u_i 2^i. Truncated sequences carry tail 1/2.
 */
class CoeffSeq {
public:
    CoeffSeq() : tail_(0) {}
    CoeffSeq(std::vector<Scalar> prefix, Scalar tail)
        : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

    // Prefix from a bit string like "011" — character j is entry u_j — or
    // from a digit vector in the same order.
    static CoeffSeq from_bits(const std::string& bits, const Scalar& tail);
    static CoeffSeq from_bits(const std::vector<int>& bits, const Scalar& tail);

    const std::vector<Scalar>& prefix() const { return prefix_; }
    const Scalar& tail() const { return tail_; }
    std::size_t prefix_size() const { return prefix_.size(); }

    // u_j for any j >= 0.
    const Scalar& at(std::size_t j) const {
        return j < prefix_.size() ? prefix_[j] : tail_;
    }

    bool is_binary() const;

    // Tail exactly 1/2: the truncated form whose coherent state is a genuine
    // Hilbert-space vector below the critical eigenvalue.
    bool is_truncated() const;

    // Same infinite sequence, possibly different representations.
    friend bool operator==(const CoeffSeq& a, const CoeffSeq& b);
    friend bool operator!=(const CoeffSeq& a, const CoeffSeq& b) { return !(a == b); }

private:
    std::vector<Scalar> prefix_;
    Scalar tail_;
};

// Literal form "prefix|tail": prefix is a bit run ("011") or comma-separated
// scalars ("1/3,1"), possibly empty; tail is one scalar. "011|1/2" is the
// three-digit truncated descriptor.
CoeffSeq parse_seq(std::string_view text);
std::string seq_literal(const CoeffSeq& u);

}  // namespace fcs
