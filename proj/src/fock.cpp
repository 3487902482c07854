#include "fcs/fock.hpp"

namespace fcs {

FockVector FockVector::single(TensorWord word, const Scalar& coeff) {
    FockVector v;
    v.add_term(std::move(word), coeff);
    return v;
}

std::size_t FockVector::grade() const {
    std::size_t g = 0;
    for (const auto& [word, c] : terms_) g = std::max(g, word.size());
    return g;
}

Scalar FockVector::coeff(const TensorWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void FockVector::add_term(const TensorWord& word, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector FockVector::scaled(const Scalar& c) const {
    FockVector out;
    if (c.is_zero()) return out;
    for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, coeff * c);
    return out;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    for (const auto& [word, coeff] : b.terms_) out.add_term(word, coeff);
    return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    for (const auto& [word, coeff] : b.terms_) out.add_term(word, -coeff);
    return out;
}

namespace {

char letter_char(int letter) {
    if (letter != 0 && letter != 1) throw DomainError("letter must be 0 or 1");
    return letter == 0 ? '0' : '1';
}

}  // namespace

FockVector create(int letter, const FockVector& v) {
    char c = letter_char(letter);
    FockVector out;
    for (const auto& [word, coeff] : v.terms())
        out.add_term(c + word, coeff);
    return out;
}

FockVector annihilate(int letter, const FockVector& v) {
    char c = letter_char(letter);
    FockVector out;
    for (const auto& [word, coeff] : v.terms()) {
        if (word.empty()) continue;  // vacuum component is annihilated
        if (word.front() == c) out.add_term(word.substr(1), coeff);
    }
    return out;
}

Scalar inner(const FockVector& v, const FockVector& w) {
    // Both maps are ordered by word, so walk them in lockstep.
    Scalar acc(0);
    auto it = v.terms().begin();
    auto jt = w.terms().begin();
    while (it != v.terms().end() && jt != w.terms().end()) {
        if (it->first < jt->first) {
            ++it;
        } else if (jt->first < it->first) {
            ++jt;
        } else {
            acc += it->second.conj() * jt->second;
            ++it;
            ++jt;
        }
    }
    return acc;
}

CcrReport check_ccr(int i, int j, const FockVector& v) {
    CcrReport r;
    r.lhs = annihilate(i, create(j, v));
    r.rhs = i == j ? v : FockVector::zero();
    r.equal = r.lhs == r.rhs;
    return r;
}

FockVector coherent_component(const CoeffSeq& u, std::size_t k) {
    FockVector x = FockVector::vacuum();
    for (std::size_t step = 0; step < k; ++step) {
        const Scalar& coeff = u.at(step);
        x = create(0, x).scaled(coeff) + create(1, x).scaled(Scalar(1) - coeff);
    }
    return x;
}

std::vector<FockVector> coherent_components(const CoeffSeq& u, std::size_t n) {
    std::vector<FockVector> out;
    out.reserve(n + 1);
    out.push_back(FockVector::vacuum());
    for (std::size_t step = 0; step < n; ++step) {
        const Scalar& coeff = u.at(step);
        const FockVector& x = out.back();
        out.push_back(create(0, x).scaled(coeff) + create(1, x).scaled(Scalar(1) - coeff));
    }
    return out;
}

FockVector coherent_truncated(const CoeffSeq& u, const Scalar& lambda, std::size_t n) {
    std::vector<FockVector> components = coherent_components(u, n);
    FockVector out;
    Scalar power(1);
    for (std::size_t k = 0; k <= n; ++k) {
        out = out + components[k].scaled(power);
        power *= lambda;
    }
    return out;
}

}  // namespace fcs
