#include "fcs/io.hpp"

#include <fstream>

namespace fcs {

namespace {

std::string get_string(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw ParseError(std::string("expected string field \"") + key + "\"");
    return j[key].get<std::string>();
}

std::size_t get_level(const Json& j) {
    if (!j.is_object() || !j.contains("level") || !j["level"].is_number_unsigned())
        throw ParseError("expected non-negative integer field \"level\"");
    return j["level"].get<std::size_t>();
}

}  // namespace

void to_json(Json& j, const Scalar& z) { j = to_string(z); }

void from_json(const Json& j, Scalar& z) {
    if (!j.is_string()) throw ParseError("expected a scalar string");
    z = parse_scalar(j.get<std::string>());
}

void to_json(Json& j, const CoeffSeq& u) {
    Json prefix = Json::array();
    for (const Scalar& s : u.prefix()) prefix.push_back(to_string(s));
    j = Json{{"prefix", std::move(prefix)}, {"tail", to_string(u.tail())}};
}

void from_json(const Json& j, CoeffSeq& u) {
    if (!j.is_object() || !j.contains("prefix") || !j["prefix"].is_array())
        throw ParseError("expected sequence object with \"prefix\" array");
    std::vector<Scalar> prefix;
    for (const Json& e : j["prefix"]) {
        Scalar s;
        from_json(e, s);
        prefix.push_back(std::move(s));
    }
    u = CoeffSeq(std::move(prefix), parse_scalar(get_string(j, "tail")));
}

void to_json(Json& j, const GeomTailSeries& s) {
    Json prefix = Json::array();
    for (const Scalar& a : s.prefix) prefix.push_back(to_string(a));
    j = Json{{"prefix", std::move(prefix)},
             {"tail_start", s.tail_start()},
             {"tail_first", to_string(s.tail_first)},
             {"ratio", to_string(s.ratio)}};
}

void from_json(const Json& j, GeomTailSeries& s) {
    if (!j.is_object() || !j.contains("prefix") || !j["prefix"].is_array())
        throw ParseError("expected series object with \"prefix\" array");
    std::vector<Scalar> prefix;
    for (const Json& e : j["prefix"]) {
        Scalar a;
        from_json(e, a);
        prefix.push_back(std::move(a));
    }
    if (j.contains("tail_start") && j["tail_start"].get<std::size_t>() != prefix.size())
        throw ParseError("series tail_start must equal prefix length");
    s = GeomTailSeries(std::move(prefix), parse_scalar(get_string(j, "tail_first")),
                       parse_scalar(get_string(j, "ratio")));
}

void to_json(Json& j, const FockVector& v) {
    j = Json::object();
    for (const auto& [word, coeff] : v.terms()) j[word] = to_string(coeff);
}

void from_json(const Json& j, FockVector& v) {
    if (!j.is_object()) throw ParseError("expected an object of word -> scalar");
    v = FockVector();
    for (const auto& [word, coeff] : j.items()) {
        if (word.find_first_not_of("01") != std::string::npos)
            throw ParseError("tensor words use letters 0/1 only");
        if (!coeff.is_string()) throw ParseError("expected a scalar string");
        v.add_term(word, parse_scalar(coeff.template get<std::string>()));
    }
}

void to_json(Json& j, const Disc& d) {
    std::string center;
    for (std::size_t i = 0; i < d.level; ++i)
        center += (d.center >> i) & 1 ? '1' : '0';
    j = Json{{"level", d.level}, {"center", std::move(center)}};
}

void from_json(const Json& j, Disc& d) {
    const std::size_t level = get_level(j);
    const std::string center = get_string(j, "center");
    if (center.size() != level) throw ParseError("disc center needs one digit per level");
    std::vector<int> bits;
    bits.reserve(center.size());
    for (char c : center) {
        if (c != '0' && c != '1') throw ParseError("disc center digits must be 0/1");
        bits.push_back(c == '1');
    }
    try {
        d = disc_from_bits(bits);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

void to_json(Json& j, const LocallyConstantFn& f) {
    Json values = Json::array();
    for (const Scalar& v : f.values) values.push_back(to_string(v));
    j = Json{{"level", f.level}, {"values", std::move(values)}};
}

void from_json(const Json& j, LocallyConstantFn& f) {
    const std::size_t level = get_level(j);
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError("expected \"values\" array");
    std::vector<Scalar> values;
    for (const Json& e : j["values"]) {
        Scalar v;
        from_json(e, v);
        values.push_back(std::move(v));
    }
    try {
        f = LocallyConstantFn(level, std::move(values));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

void to_json(Json& j, const VerificationRow& r) {
    j = Json{{"claim", r.claim},
             {"params", r.params},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"equal", r.equal}};
}

void from_json(const Json& j, VerificationRow& r) {
    r.claim = get_string(j, "claim");
    r.params = get_string(j, "params");
    r.lhs = get_string(j, "lhs");
    r.rhs = get_string(j, "rhs");
    if (!j.contains("equal") || !j["equal"].is_boolean())
        throw ParseError("expected boolean field \"equal\"");
    r.equal = j["equal"].get<bool>();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_header() { return "claim,params,lhs,rhs,equal"; }

std::string csv_row(const VerificationRow& r) {
    return csv_escape(r.claim) + "," + csv_escape(r.params) + "," + csv_escape(r.lhs) +
           "," + csv_escape(r.rhs) + "," + (r.equal ? "true" : "false");
}

}  // namespace fcs
