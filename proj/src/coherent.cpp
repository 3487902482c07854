#include "fcs/coherent.hpp"

#include <algorithm>

namespace fcs {

namespace {

// conj(u)v + conj(1-u)(1-v), with the binary cases short-circuited: entries
// 0/1 dominate the sweeps and need no rational arithmetic.
Scalar overlap_entry(const Scalar& uj, const Scalar& vj) {
    const Scalar one(1);
    if (uj.is_zero()) return one - vj;
    if (uj == one) return vj;
    if (vj.is_zero()) return (one - uj).conj();
    if (vj == one) return uj.conj();
    return uj.conj() * vj + (one - uj).conj() * (one - vj);
}

Scalar overlap_at(const CoeffSeq& u, const CoeffSeq& v, std::size_t j) {
    return overlap_entry(u.at(j), v.at(j));
}

}  // namespace

OverlapCoeffs overlap_coeffs(const CoeffSeq& u, const CoeffSeq& v) {
    const std::size_t m = std::max(u.prefix().size(), v.prefix().size());
    OverlapCoeffs out;
    out.head.reserve(m);
    for (std::size_t j = 0; j < m; ++j) out.head.push_back(overlap_at(u, v, j));
    out.tail = u.tail().conj() * v.tail() +
               (Scalar(1) - u.tail()).conj() * (Scalar(1) - v.tail());
    return out;
}

GeomTailSeries pairing_series(const CoeffSeq& u, const CoeffSeq& v) {
    const OverlapCoeffs c = overlap_coeffs(u, v);
    GeomTailSeries s;
    s.prefix.reserve(c.head.size());
    const Scalar one(1);
    Scalar a = one;  // a_0: vacuum overlap
    for (const Scalar& cj : c.head) {
        s.prefix.push_back(a);
        if (a.is_zero() || cj == one) continue;
        a = a * cj;
    }
    s.tail_first = a;
    s.ratio = c.tail;
    return s;
}

Scalar renorm_pairing(const CoeffSeq& u, const CoeffSeq& v) {
    return renorm_limit(pairing_series(u, v));
}

PairingReport pairing_report(const CoeffSeq& u, const CoeffSeq& v) {
    PairingReport r;
    r.series = pairing_series(u, v);
    r.coeffs = overlap_coeffs(u, v);
    try {
        r.limit = renorm_limit(r.series);
    } catch (const DivergentBeforeLimit& e) {
        r.limit_error = e.what();
    }
    return r;
}

std::optional<std::size_t> first_mismatch(const CoeffSeq& u, const CoeffSeq& v) {
    const std::size_t m = std::max(u.prefix().size(), v.prefix().size());
    for (std::size_t j = 0; j < m; ++j)
        if (!(u.at(j) == v.at(j))) return j;
    if (!(u.tail() == v.tail())) return m;
    return std::nullopt;
}

Scalar rho_distance_sq(const CoeffSeq& u, const CoeffSeq& v, const Rat& t) {
    if (!u.is_binary() || !v.is_binary())
        throw DomainError("rho_distance_sq requires binary sequences");
    if (t <= 0) throw DomainError("rho_distance_sq requires t > 0");
    const auto k = first_mismatch(u, v);
    if (!k) return Scalar(0);
    // 2 * t^k / (1 - t) as a series: k zero coefficients, then constant 2.
    GeomTailSeries s;
    s.prefix.assign(*k, Scalar(0));
    s.tail_first = Scalar(2);
    s.ratio = Scalar(1);
    return eval(s, t);  // throws DivergentAt for t >= 1
}

FockVector eigen_residual(const CoeffSeq& u, const Scalar& lambda, std::size_t n) {
    const FockVector x = coherent_truncated(u, lambda, n);
    FockVector lhs = annihilate(0, x) + annihilate(1, x);
    return lhs + x.scaled(Scalar(0) - lambda);
}

}  // namespace fcs
