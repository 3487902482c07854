#include "fcs/dyadic.hpp"

#include "fcs/coherent.hpp"

#include <algorithm>

namespace fcs {

namespace {

// Value tables have 2^level entries; keep the exponent sane.
constexpr std::size_t kMaxLevel = 24;

void check_level(std::size_t level) {
    if (level > kMaxLevel)
        throw DomainError("level " + std::to_string(level) + " exceeds supported maximum " +
                          std::to_string(kMaxLevel));
}

void check_digit(int d) {
    if (d != 0 && d != 1) throw DomainError("digit must be 0 or 1");
}

}  // namespace

std::size_t DyadicPoint::residue(std::size_t k) const {
    check_level(k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (digit(i)) r |= std::size_t(1) << i;
    return r;
}

bool operator==(const DyadicPoint& a, const DyadicPoint& b) {
    return !val2_diff(a, b).has_value();
}

DyadicPoint point_of(const CoeffSeq& u) {
    if (!u.is_binary()) throw DomainError("point_of requires a binary sequence");
    DyadicPoint x;
    x.prefix.reserve(u.prefix_size());
    for (const Scalar& s : u.prefix()) x.prefix.push_back(s.is_zero() ? 0 : 1);
    x.tail = u.tail().is_zero() ? 0 : 1;
    return x;
}

std::optional<std::size_t> val2_diff(const DyadicPoint& x, const DyadicPoint& y) {
    const std::size_t m = std::max(x.prefix.size(), y.prefix.size());
    for (std::size_t i = 0; i < m; ++i)
        if (x.digit(i) != y.digit(i)) return i;
    if (x.tail != y.tail) return m;
    return std::nullopt;
}

std::vector<int> bits_of(std::size_t value, std::size_t width) {
    std::vector<int> bits(width);
    for (std::size_t i = 0; i < width; ++i) bits[i] = (value >> i) & 1;
    return bits;
}

std::size_t bits_value(const std::vector<int>& bits) {
    check_level(bits.size());
    std::size_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        check_digit(bits[i]);
        if (bits[i]) v |= std::size_t(1) << i;
    }
    return v;
}

Disc make_disc(std::size_t level, std::size_t center) {
    check_level(level);
    Disc d;
    d.level = level;
    d.center = center & ((std::size_t(1) << level) - 1);
    return d;
}

Disc disc_from_bits(const std::vector<int>& center_bits) {
    return make_disc(center_bits.size(), bits_value(center_bits));
}

Disc disc_around(const DyadicPoint& x, std::size_t level) {
    return make_disc(level, x.residue(level));
}

bool disc_contains(const Disc& d, const DyadicPoint& x) {
    return x.residue(d.level) == d.center;
}

DiscRelation disc_relation(const Disc& a, const Disc& b) {
    if (a.level == b.level)
        return a.center == b.center ? DiscRelation::Equal : DiscRelation::Disjoint;
    if (a.level > b.level) {  // a is the smaller disc
        const std::size_t mask = (std::size_t(1) << b.level) - 1;
        return (a.center & mask) == b.center ? DiscRelation::FirstInsideSecond
                                             : DiscRelation::Disjoint;
    }
    const std::size_t mask = (std::size_t(1) << a.level) - 1;
    return (b.center & mask) == a.center ? DiscRelation::SecondInsideFirst
                                         : DiscRelation::Disjoint;
}

Rat haar_measure(const Disc& d) {
    return make_rat(1, Int(1) << d.level);
}

LocallyConstantFn::LocallyConstantFn(std::size_t lvl, std::vector<Scalar> vals)
    : level(lvl), values(std::move(vals)) {
    check_level(level);
    if (values.size() != (std::size_t(1) << level))
        throw DomainError("value table size does not match level");
}

LocallyConstantFn indicator(const Disc& d) {
    std::vector<Scalar> vals(std::size_t(1) << d.level, Scalar(0));
    vals[d.center] = Scalar(1);
    return LocallyConstantFn(d.level, std::move(vals));
}

LocallyConstantFn theta(const DyadicPoint& x0, std::size_t k) {
    return indicator(disc_around(x0, k));
}

LocallyConstantFn refine(const LocallyConstantFn& f, std::size_t level) {
    if (level < f.level) throw DomainError("refine target below current level");
    check_level(level);
    if (level == f.level) return f;
    // The low f.level digits of a deeper residue pick out its coarse cell.
    const std::size_t mask = (std::size_t(1) << f.level) - 1;
    std::vector<Scalar> vals(std::size_t(1) << level);
    for (std::size_t b = 0; b < vals.size(); ++b) vals[b] = f.values[b & mask];
    return LocallyConstantFn(level, std::move(vals));
}

LocallyConstantFn add(const LocallyConstantFn& f, const LocallyConstantFn& g) {
    const std::size_t n = std::max(f.level, g.level);
    LocallyConstantFn a = refine(f, n);
    const LocallyConstantFn b = refine(g, n);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
}

LocallyConstantFn scale(const Scalar& c, const LocallyConstantFn& f) {
    LocallyConstantFn out = f;
    for (Scalar& v : out.values) v = c * v;
    return out;
}

LocallyConstantFn pointwise_mul(const LocallyConstantFn& f, const LocallyConstantFn& g) {
    const std::size_t n = std::max(f.level, g.level);
    LocallyConstantFn a = refine(f, n);
    const LocallyConstantFn b = refine(g, n);
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] *= b.values[i];
    return a;
}

bool fn_equal(const LocallyConstantFn& f, const LocallyConstantFn& g) {
    const std::size_t n = std::max(f.level, g.level);
    return refine(f, n).values == refine(g, n).values;
}

Scalar value_at(const LocallyConstantFn& f, const DyadicPoint& x) {
    return f.values[x.residue(f.level)];
}

Scalar integrate(const LocallyConstantFn& f) {
    Scalar sum(0);
    for (const Scalar& v : f.values)
        if (!v.is_zero()) sum += v;
    return sum * Scalar(haar_measure(make_disc(f.level, 0)));
}

Scalar l2_pairing(const LocallyConstantFn& f, const LocallyConstantFn& g) {
    const std::size_t n = std::max(f.level, g.level);
    const LocallyConstantFn a = refine(f, n);
    const LocallyConstantFn b = refine(g, n);
    Scalar sum(0);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].is_zero() || b.values[i].is_zero()) continue;
        sum += a.values[i].conj() * b.values[i];
    }
    return sum * Scalar(haar_measure(make_disc(n, 0)));
}

PadicDistribution PadicDistribution::delta(DyadicPoint x) {
    PadicDistribution t;
    t.kind = Kind::Delta;
    t.at = std::move(x);
    return t;
}

PadicDistribution PadicDistribution::induced(CoeffSeq u) {
    PadicDistribution t;
    t.kind = Kind::Induced;
    t.by = std::move(u);
    return t;
}

PadicDistribution PadicDistribution::combo(
    std::vector<std::pair<Scalar, PadicDistribution>> parts) {
    PadicDistribution t;
    t.kind = Kind::Combo;
    t.parts = std::move(parts);
    return t;
}

CoeffSeq residue_descriptor(std::size_t level, std::size_t b) {
    std::vector<Scalar> prefix(level);
    for (std::size_t i = 0; i < level; ++i) prefix[i] = Scalar((b >> i) & 1 ? 1 : 0);
    return CoeffSeq(std::move(prefix), Scalar(make_rat(1, 2)));
}

Scalar apply_distribution(const PadicDistribution& t, const LocallyConstantFn& f) {
    switch (t.kind) {
        case PadicDistribution::Kind::Delta:
            return value_at(f, t.at);
        case PadicDistribution::Kind::Induced: {
            const Rat cell = haar_measure(make_disc(f.level, 0));
            Scalar sum(0);
            for (std::size_t b = 0; b < f.values.size(); ++b) {
                if (f.values[b].is_zero()) continue;
                sum += f.values[b] * Scalar(cell) *
                       renorm_pairing(t.by, residue_descriptor(f.level, b));
            }
            return sum;
        }
        case PadicDistribution::Kind::Combo: {
            Scalar sum(0);
            for (const auto& [c, part] : t.parts) sum += c * apply_distribution(part, f);
            return sum;
        }
    }
    throw DomainError("unknown distribution kind");
}

}  // namespace fcs
