#pragma once

#include "fcs/coeff_seq.hpp"
#include "fcs/fock.hpp"
#include "fcs/series.hpp"

#include <optional>
#include <string>

namespace fcs {

/*
 * Closed-form pairings of coherent-state descriptors.
 *
 * The grade-i inner product of two coherent states factorizes over tensor
 * slots into per-level overlap coefficients
 *
 *   c_j = conj(u_j) v_j + conj(1-u_j)(1-v_j),
 *
 * so the full pairing, as a series in t = lambda^2, has coefficients
 * a_i = prod_{j<i} c_j. With eventually-constant descriptors the c_j are
 * eventually constant and the pairing is a GeomTailSeries. Conjugation sits
 * on the first (functional) slot throughout, matching inner().
 */
struct OverlapCoeffs {
    std::vector<Scalar> head;  // c_j for j < max prefix length
    Scalar tail;               // constant c in the common tail region
};

OverlapCoeffs overlap_coeffs(const CoeffSeq& u, const CoeffSeq& v);

// Pairing series in t = lambda^2: a_i = prod_{j<i} c_j (a_0 = 1, the vacuum
// term), with geometric tail ratio equal to the tail overlap.
GeomTailSeries pairing_series(const CoeffSeq& u, const CoeffSeq& v);

// Renormalized pairing lim_{t->2^-} (1 - t/2) * pairing(t). Exists exactly
// when the tail overlap has modulus <= 1/2 or the series terminates, which is
// guaranteed whenever either descriptor is truncated (tail 1/2).
// Throws DivergentBeforeLimit otherwise.
Scalar renorm_pairing(const CoeffSeq& u, const CoeffSeq& v);

// The bundle a CLI call reports: series, limit (or the error message), and
// the overlap coefficients that generated them.
struct PairingReport {
    GeomTailSeries series;
    OverlapCoeffs coeffs;
    std::optional<Scalar> limit;
    std::string limit_error;  // set iff !limit
};

PairingReport pairing_report(const CoeffSeq& u, const CoeffSeq& v);

// Least index at which the two sequences differ (prefix and tail entries
// alike); nullopt when they are equal as infinite sequences. For binary
// sequences this is the 2-adic valuation of the difference of the
// represented 2-adic integers.
std::optional<std::size_t> first_mismatch(const CoeffSeq& u, const CoeffSeq& v);

// Squared Hilbert-metric distance of two binary-sequence coherent states in
// the sub-critical regime 0 < t < 1:
//
//   rho^2(U, V) = 2 * sum_{i>=k} t^i = 2 t^k / (1 - t),   k = first mismatch,
//
// and 0 when U = V. Throws DivergentAt for t >= 1 (the norms blow up) and
// DomainError for t <= 0 or non-binary input.
Scalar rho_distance_sq(const CoeffSeq& u, const CoeffSeq& v, const Rat& t);

// (A0 + A1) X_N - lambda X_N for the truncation X_N = sum_{k<=N} lambda^k X^k.
// Identically the boundary term -lambda^{N+1} X^N: the truncated state is an
// eigenvector up to its top grade.
FockVector eigen_residual(const CoeffSeq& u, const Scalar& lambda, std::size_t n);

}  // namespace fcs
