#include "fcs/coeff_seq.hpp"

namespace fcs {

namespace {

bool is_bit(const Scalar& s) { return s == Scalar(0) || s == Scalar(1); }

}  // namespace

CoeffSeq CoeffSeq::from_bits(const std::string& bits, const Scalar& tail) {
    std::vector<Scalar> prefix;
    prefix.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("bit string must contain only 0/1");
        prefix.emplace_back(c == '1' ? 1 : 0);
    }
    return CoeffSeq(std::move(prefix), tail);
}

CoeffSeq CoeffSeq::from_bits(const std::vector<int>& bits, const Scalar& tail) {
    std::vector<Scalar> prefix;
    prefix.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw ParseError("digit vector must contain only 0/1");
        prefix.emplace_back(b);
    }
    return CoeffSeq(std::move(prefix), tail);
}

bool CoeffSeq::is_binary() const {
    for (const Scalar& u : prefix_)
        if (!is_bit(u)) return false;
    return is_bit(tail_);
}

bool CoeffSeq::is_truncated() const {
    static const Scalar half{make_rat(1, 2)};
    return tail_ == half;
}

bool operator==(const CoeffSeq& a, const CoeffSeq& b) {
    std::size_t m = std::max(a.prefix_size(), b.prefix_size());
    for (std::size_t j = 0; j < m; ++j)
        if (a.at(j) != b.at(j)) return false;
    return a.tail() == b.tail();
}

CoeffSeq parse_seq(std::string_view text) {
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ParseError("sequence literal needs 'prefix|tail'");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw ParseError("sequence literal has more than one '|'");
    const std::string_view head = text.substr(0, bar);
    const Scalar tail = parse_scalar(text.substr(bar + 1));

    if (head.empty()) return CoeffSeq({}, tail);
    if (head.find_first_not_of("01") == std::string_view::npos)
        return CoeffSeq::from_bits(std::string(head), tail);

    std::vector<Scalar> prefix;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = head.find(',', pos);
        const std::string_view piece =
            head.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        prefix.push_back(parse_scalar(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return CoeffSeq(std::move(prefix), tail);
}

std::string seq_literal(const CoeffSeq& u) {
    std::string head;
    bool bits_form = true;
    for (const Scalar& s : u.prefix())
        if (!is_bit(s)) {
            bits_form = false;
            break;
        }
    if (bits_form) {
        for (const Scalar& s : u.prefix()) head += s.is_zero() ? '0' : '1';
    } else {
        for (std::size_t j = 0; j < u.prefix_size(); ++j) {
            if (j) head += ',';
            head += to_string(u.prefix()[j]);
        }
    }
    return head + "|" + to_string(u.tail());
}

}  // namespace fcs
