#include "fcs/sweeps.hpp"

#include <algorithm>
#include <utility>

namespace fcs {

namespace {

// Exhaustive enumeration bounds: sweeps cover every center pair up to these
// levels and fall back to seeded sampling per cell above them.
constexpr std::size_t kLemma1Exhaustive = 5;
constexpr std::size_t kLemma2Exhaustive = 6;
constexpr std::size_t kPropositionExhaustive = 6;
constexpr std::size_t kTheoremExhaustive = 6;
constexpr std::size_t kLemma3MaxK = 5;
constexpr std::size_t kMaxSweepLevel = 12;

void check_max_level(std::size_t max_level) {
    if (max_level > kMaxSweepLevel)
        throw DomainError("sweep max level " + std::to_string(max_level) +
                          " exceeds supported maximum " + std::to_string(kMaxSweepLevel));
}

std::vector<VerificationRow> flatten(std::vector<std::vector<VerificationRow>> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<VerificationRow> rows;
    rows.reserve(total);
    for (auto& p : parts)
        for (auto& r : p) rows.push_back(std::move(r));
    return rows;
}

// Evaluates one verifier per parameter tuple; rows come back in tuple order
// regardless of execution mode.
template <typename Param, typename Fn>
std::vector<VerificationRow> run(const std::vector<Param>& params, Exec exec, Fn&& fn) {
    std::vector<std::vector<VerificationRow>> out(params.size());
    parallel_for(params.size(), exec,
                 [&](std::size_t i) { out[i] = fn(params[i]); });
    return flatten(std::move(out));
}

std::vector<Rat> proposition_ts() {
    return {make_rat(1, 4), make_rat(1, 2), make_rat(3, 4)};
}

Scalar half_scalar() { return Scalar(make_rat(1, 2)); }

}  // namespace

Rat Rng::rat() {
    const long num = static_cast<long>(pick(19)) - 9;  // -9..9
    const long den = static_cast<long>(pick(9)) + 1;   // 1..9
    return make_rat(num, den);
}

Scalar Rng::scalar() {
    Rat re = rat();
    if (bit()) return Scalar(std::move(re));
    return Scalar(std::move(re), rat());
}

std::vector<int> Rng::bit_vec(std::size_t len) {
    std::vector<int> bits(len);
    for (int& b : bits) b = bit();
    return bits;
}

CoeffSeq Rng::binary_seq(std::size_t len, const Scalar& tail) {
    return CoeffSeq::from_bits(bit_vec(len), tail);
}

CoeffSeq Rng::rational_seq(std::size_t len, const Scalar& tail) {
    std::vector<Scalar> prefix;
    prefix.reserve(len);
    for (std::size_t i = 0; i < len; ++i) prefix.push_back(scalar());
    return CoeffSeq(std::move(prefix), tail);
}

Sweep sweep_lemma1(const SweepConfig& cfg) {
    check_max_level(cfg.max_level);
    struct Param {
        std::vector<int> u, v;
    };
    std::vector<Param> params;
    Rng rng(cfg.seed * 6364136223846793005ULL + 1);
    for (std::size_t k = 0; k <= cfg.max_level; ++k)
        for (std::size_t l = 0; l <= cfg.max_level; ++l) {
            if (k <= kLemma1Exhaustive && l <= kLemma1Exhaustive) {
                for (std::size_t cu = 0; cu < (std::size_t(1) << k); ++cu)
                    for (std::size_t cv = 0; cv < (std::size_t(1) << l); ++cv)
                        params.push_back({bits_of(cu, k), bits_of(cv, l)});
            } else {
                for (std::size_t s = 0; s < cfg.samples_per_cell; ++s)
                    params.push_back({rng.bit_vec(k), rng.bit_vec(l)});
            }
        }
    Sweep sw;
    sw.rows = run(params, cfg.exec,
                  [](const Param& p) { return verify_lemma1(p.u, p.v); });
    return sw;
}

Sweep sweep_lemma2(const SweepConfig& cfg) {
    check_max_level(cfg.max_level);
    struct Param {
        CoeffSeq u;
        std::vector<int> v;
    };
    std::vector<Param> params;
    Rng rng(cfg.seed * 6364136223846793005ULL + 2);
    for (std::size_t p = 0; p <= cfg.max_level; ++p)
        for (int tail = 0; tail <= 1; ++tail)
            for (std::size_t j = 0; j <= cfg.max_level; ++j) {
                if (p <= kLemma2Exhaustive && j <= kLemma2Exhaustive) {
                    for (std::size_t cu = 0; cu < (std::size_t(1) << p); ++cu)
                        for (std::size_t cv = 0; cv < (std::size_t(1) << j); ++cv)
                            params.push_back({CoeffSeq::from_bits(bits_of(cu, p),
                                                                  Scalar(tail)),
                                              bits_of(cv, j)});
                } else {
                    for (std::size_t s = 0; s < cfg.samples_per_cell; ++s)
                        params.push_back(
                            {rng.binary_seq(p, Scalar(tail)), rng.bit_vec(j)});
                }
            }
    Sweep sw;
    sw.rows = run(params, cfg.exec,
                  [](const Param& p) { return verify_lemma2(p.u, p.v); });
    return sw;
}

Sweep sweep_lemma3(const SweepConfig& cfg) {
    check_max_level(cfg.max_level);
    struct Param {
        CoeffSeq u, w;
    };
    std::vector<Param> params;
    Rng rng(cfg.seed * 6364136223846793005ULL + 3);
    const std::size_t kmax = std::min(cfg.max_level, kLemma3MaxK);
    const Scalar half = half_scalar();
    for (std::size_t n = 0; n < cfg.lemma3_count; ++n) {
        const std::size_t k = rng.pick(kmax + 1);
        CoeffSeq w = rng.rational_seq(k, half);
        Scalar utail;
        switch (rng.pick(4)) {
            case 0: utail = Scalar(0); break;
            case 1: utail = Scalar(1); break;
            case 2: utail = half; break;
            default: utail = rng.scalar(); break;
        }
        CoeffSeq u = rng.rational_seq(rng.pick(6), utail);
        params.push_back({std::move(u), std::move(w)});
    }
    Sweep sw;
    sw.rows = run(params, cfg.exec, [&](const Param& p) {
        return verify_lemma3(p.u, p.w, cfg.lemma3_imax);
    });
    return sw;
}

Sweep sweep_proposition(const SweepConfig& cfg) {
    check_max_level(cfg.max_level);
    const std::vector<Rat> ts = proposition_ts();
    Rng rng(cfg.seed * 6364136223846793005ULL + 4);

    struct PairParam {
        CoeffSeq u, v;
        Rat t;
    };
    std::vector<PairParam> pairs;
    const std::size_t exhaustive = std::min(cfg.max_level, kPropositionExhaustive);
    std::vector<CoeffSeq> family;
    for (std::size_t len = 0; len <= exhaustive; ++len)
        for (std::size_t c = 0; c < (std::size_t(1) << len); ++c)
            family.push_back(CoeffSeq::from_bits(bits_of(c, len), Scalar(0)));
    for (const CoeffSeq& u : family)
        for (const CoeffSeq& v : family)
            for (const Rat& t : ts) pairs.push_back({u, v, t});
    for (std::size_t lu = 0; lu <= cfg.max_level; ++lu)
        for (std::size_t lv = 0; lv <= cfg.max_level; ++lv) {
            if (lu <= exhaustive && lv <= exhaustive) continue;
            for (std::size_t s = 0; s < cfg.samples_per_cell; ++s) {
                CoeffSeq u = rng.binary_seq(lu, Scalar(0));
                CoeffSeq v = rng.binary_seq(lv, Scalar(0));
                for (const Rat& t : ts) pairs.push_back({u, v, t});
            }
        }
    Sweep sw;
    sw.rows = run(pairs, cfg.exec, [](const PairParam& p) {
        return verify_proposition(p.u, p.v, p.t);
    });

    // Strong triangle inequality on all triples from a seeded family, each
    // member of the triple taking the middle role once.
    std::vector<CoeffSeq> tri;
    tri.reserve(cfg.triangle_family);
    for (std::size_t n = 0; n < cfg.triangle_family; ++n)
        tri.push_back(rng.binary_seq(rng.pick(exhaustive + 1), Scalar(0)));
    struct TriParam {
        const CoeffSeq *u, *v, *w;
        Rat t;
    };
    std::vector<TriParam> triples;
    for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j)
            for (std::size_t k = j + 1; k < tri.size(); ++k)
                for (const Rat& t : ts) {
                    triples.push_back({&tri[i], &tri[j], &tri[k], t});
                    triples.push_back({&tri[i], &tri[k], &tri[j], t});
                    triples.push_back({&tri[j], &tri[k], &tri[i], t});
                }
    std::vector<VerificationRow> tri_rows =
        run(triples, cfg.exec, [](const TriParam& p) {
            return verify_proposition_triangle(*p.u, *p.v, *p.w, p.t);
        });
    sw.rows.insert(sw.rows.end(), std::make_move_iterator(tri_rows.begin()),
                   std::make_move_iterator(tri_rows.end()));
    return sw;
}

Sweep sweep_theorem(const SweepConfig& cfg) {
    check_max_level(cfg.max_level);
    struct Param {
        CoeffSeq u, v;
    };
    Rng rng(cfg.seed * 6364136223846793005ULL + 5);
    const std::size_t lmax = cfg.max_level;
    const Scalar half = half_scalar();

    auto draw = [&]() {
        const std::size_t len = rng.pick(lmax + 1);
        switch (rng.pick(3)) {
            case 0: return rng.binary_seq(len, half);
            case 1: return rng.rational_seq(len, half);
            default: {
                std::vector<Scalar> prefix;
                prefix.reserve(len);
                for (std::size_t i = 0; i < len; ++i)
                    prefix.push_back(rng.bit() ? Scalar(rng.bit()) : rng.scalar());
                return CoeffSeq(std::move(prefix), half);
            }
        }
    };

    std::vector<Param> params;
    // All binary truncated pairs up to the exhaustive cap, then seeded draws
    // (binary, rational, mixed prefixes) covering the full requested range.
    const std::size_t ex = std::min(cfg.max_level, kTheoremExhaustive);
    for (std::size_t k = 0; k <= ex; ++k)
        for (std::size_t cu = 0; cu < (std::size_t(1) << k); ++cu)
            for (std::size_t l = 0; l <= ex; ++l)
                for (std::size_t cv = 0; cv < (std::size_t(1) << l); ++cv)
                    params.push_back({CoeffSeq::from_bits(bits_of(cu, k), half),
                                      CoeffSeq::from_bits(bits_of(cv, l), half)});
    for (std::size_t n = 0; n < cfg.theorem_count; ++n) {
        CoeffSeq u = draw();
        CoeffSeq v = draw();
        params.push_back({std::move(u), std::move(v)});
    }
    Sweep sw;
    sw.rows = run(params, cfg.exec,
                  [](const Param& p) { return verify_theorem(p.u, p.v); });
    return sw;
}

Sweep sweep_all(const SweepConfig& cfg) {
    Sweep all;
    for (Sweep (*fn)(const SweepConfig&) :
         {sweep_lemma1, sweep_lemma2, sweep_lemma3, sweep_proposition, sweep_theorem}) {
        Sweep part = fn(cfg);
        all.rows.insert(all.rows.end(), std::make_move_iterator(part.rows.begin()),
                        std::make_move_iterator(part.rows.end()));
    }
    return all;
}

}  // namespace fcs
