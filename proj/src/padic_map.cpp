#include "fcs/padic_map.hpp"

#include "fcs/coherent.hpp"
#include "fcs/fock.hpp"

#include <algorithm>

namespace fcs {

namespace {

std::string bits_str(const std::vector<int>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) s += b ? '1' : '0';
    return s;
}

VerificationRow row(std::string claim, std::string params, const Scalar& lhs,
                    const Scalar& rhs) {
    VerificationRow r;
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.equal = lhs == rhs;
    return r;
}

}  // namespace

LocallyConstantFn phi_state(const CoeffSeq& w) {
    if (!w.is_truncated())
        throw DomainError("phi_state requires a truncated (tail 1/2) descriptor");
    const std::size_t k = w.prefix_size();
    const Scalar norm(rat_pow(Rat(2), static_cast<long>(k)));

    if (w.is_binary()) {
        // Binary prefix: exactly the normalized indicator of its disc.
        std::vector<Scalar> vals(std::size_t(1) << k, Scalar(0));
        std::size_t center = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (!w.prefix()[j].is_zero()) center |= std::size_t(1) << j;
        vals[center] = norm;
        return LocallyConstantFn(k, std::move(vals));
    }

    // General prefix: outer product over digits, one factor level at a time:
    // after level j the table holds prod_{i<=j} (w_i or 1-w_i) per residue.
    std::vector<Scalar> vals(1, norm);
    vals.reserve(std::size_t(1) << k);
    for (std::size_t j = 0; j < k; ++j) {
        const Scalar& w1 = w.prefix()[j];
        const Scalar w0 = Scalar(1) - w1;
        std::vector<Scalar> next(vals.size() * 2);
        for (std::size_t b = 0; b < vals.size(); ++b) {
            next[b] = vals[b] * w0;
            next[b | vals.size()] = vals[b] * w1;
        }
        vals = std::move(next);
    }
    return LocallyConstantFn(k, std::move(vals));
}

PadicDistribution phi_functional(const CoeffSeq& u) {
    if (u.is_binary()) return PadicDistribution::delta(point_of(u));
    return PadicDistribution::induced(u);
}

bool all_equal(const std::vector<VerificationRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const VerificationRow& r) { return r.equal; });
}

std::vector<VerificationRow> verify_lemma1(const std::vector<int>& u_bits,
                                           const std::vector<int>& v_bits) {
    const Scalar half{make_rat(1, 2)};
    const CoeffSeq u = CoeffSeq::from_bits(u_bits, half);
    const CoeffSeq v = CoeffSeq::from_bits(v_bits, half);
    const Scalar lhs = renorm_pairing(u, v);

    const Disc du = disc_from_bits(u_bits);
    const Disc dv = disc_from_bits(v_bits);
    const Scalar overlap = integrate(pointwise_mul(indicator(du), indicator(dv)));
    const Scalar rhs = overlap / Scalar(haar_measure(du) * haar_measure(dv));

    const std::string params = "k=" + std::to_string(u_bits.size()) +
                               ",l=" + std::to_string(v_bits.size()) +
                               ",u=" + bits_str(u_bits) + ",v=" + bits_str(v_bits);
    return {row("lemma1", params, lhs, rhs)};
}

std::vector<VerificationRow> verify_lemma2(const CoeffSeq& u,
                                           const std::vector<int>& v_bits) {
    if (!u.is_binary()) throw DomainError("verify_lemma2 requires binary u");
    const std::size_t j = v_bits.size();
    const DyadicPoint x = point_of(u);
    const Disc d = disc_from_bits(v_bits);
    const Scalar expected =
        disc_contains(d, x) ? Scalar(rat_pow(Rat(2), static_cast<long>(j))) : Scalar(0);

    const CoeffSeq vj = CoeffSeq::from_bits(v_bits, Scalar(make_rat(1, 2)));

    // The test function is the Haar-normalized indicator 2^j * theta_j(x-V),
    // i.e. the function image of the truncated descriptor itself.
    const LocallyConstantFn f = phi_state(vj);
    const std::string base = "u=" + seq_literal(u) + ",v=" + bits_str(v_bits) +
                             ",j=" + std::to_string(j);

    std::vector<VerificationRow> rows;
    rows.push_back(row("lemma2", base + ",route=pairing", renorm_pairing(u, vj), expected));
    rows.push_back(row("lemma2", base + ",route=induced",
                       apply_distribution(PadicDistribution::induced(u), f), expected));
    rows.push_back(row("lemma2", base + ",route=delta",
                       apply_distribution(PadicDistribution::delta(x), f), expected));
    return rows;
}

std::vector<VerificationRow> verify_lemma3(const CoeffSeq& u, const CoeffSeq& w,
                                           std::size_t i_max) {
    if (!w.is_truncated())
        throw DomainError("verify_lemma3 requires a truncated second descriptor");
    const std::size_t k = w.prefix_size();
    const std::string base = "u=" + seq_literal(u) + ",w=" + seq_literal(w) +
                             ",k=" + std::to_string(k);

    const auto xu = coherent_components(u, k + i_max);
    const auto xw = coherent_components(w, k + i_max);

    std::vector<VerificationRow> rows;
    Scalar prev = inner(xu[k], xw[k]);
    const Scalar half{make_rat(1, 2)};
    for (std::size_t i = 1; i <= i_max; ++i) {
        const Scalar cur = inner(xu[k + i], xw[k + i]);
        rows.push_back(row("lemma3", base + ",i=" + std::to_string(i), cur, half * prev));
        prev = cur;
    }
    rows.push_back(row("lemma3", base + ",ratio", pairing_series(u, w).ratio, half));
    return rows;
}

std::vector<VerificationRow> verify_proposition(const CoeffSeq& u, const CoeffSeq& v,
                                                const Rat& t) {
    const Scalar d2 = rho_distance_sq(u, v, t);
    const Scalar lhs = d2 * Scalar((1 - t) / 2);
    const auto k = first_mismatch(u, v);
    const Scalar rhs = k ? Scalar(rat_pow(t, static_cast<long>(*k))) : Scalar(0);
    const std::string params = "u=" + seq_literal(u) + ",v=" + seq_literal(v) +
                               ",t=" + rat_str(t) +
                               ",val2=" + (k ? std::to_string(*k) : std::string("inf"));
    return {row("proposition", params, lhs, rhs)};
}

std::vector<VerificationRow> verify_proposition_triangle(const CoeffSeq& u,
                                                         const CoeffSeq& v,
                                                         const CoeffSeq& w,
                                                         const Rat& t) {
    const Scalar duv = rho_distance_sq(u, v, t);
    const Scalar duw = rho_distance_sq(u, w, t);
    const Scalar dvw = rho_distance_sq(v, w, t);
    const Rat bound = std::max(duw.re, dvw.re);  // distances are real
    VerificationRow r;
    r.claim = "proposition";
    r.params = "u=" + seq_literal(u) + ",v=" + seq_literal(v) + ",w=" + seq_literal(w) +
               ",t=" + rat_str(t) + ",triangle";
    r.lhs = to_string(duv);
    r.rhs = to_string(Scalar(bound));
    r.equal = duv.re <= bound;
    return {r};
}

std::vector<VerificationRow> verify_theorem(const CoeffSeq& u, const CoeffSeq& v) {
    const Scalar lhs = l2_pairing(phi_state(u), phi_state(v));
    const Scalar rhs = renorm_pairing(u, v);
    const std::string params = "u=" + seq_literal(u) + ",v=" + seq_literal(v);
    return {row("theorem", params, lhs, rhs)};
}

}  // namespace fcs
