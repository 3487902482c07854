#pragma once

#include "fcs/coeff_seq.hpp"
#include "fcs/dyadic.hpp"
#include "fcs/fock.hpp"
#include "fcs/padic_map.hpp"
#include "fcs/series.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fcs {

// ordered_json keeps fields in insertion order, so emitted documents are
// byte-stable across runs.
using Json = nlohmann::ordered_json;

// Scalars serialize as their string form ("p/q", "p/q+r/s*i").
void to_json(Json& j, const Scalar& z);
void from_json(const Json& j, Scalar& z);

// {"prefix": [scalar-strings], "tail": scalar-string}
void to_json(Json& j, const CoeffSeq& u);
void from_json(const Json& j, CoeffSeq& u);

// {"prefix": [...], "tail_start": m, "tail_first": ..., "ratio": ...}
void to_json(Json& j, const GeomTailSeries& s);
void from_json(const Json& j, GeomTailSeries& s);

// Object mapping tensor words ("" = vacuum) to scalar strings.
void to_json(Json& j, const FockVector& v);
void from_json(const Json& j, FockVector& v);

// {"level": k, "center": bitstring, digit 0 first}
void to_json(Json& j, const Disc& d);
void from_json(const Json& j, Disc& d);

// {"level": n, "values": [2^n scalar-strings], index b = sum b_i 2^i}
void to_json(Json& j, const LocallyConstantFn& f);
void from_json(const Json& j, LocallyConstantFn& f);

// {"claim": ..., "params": ..., "lhs": ..., "rhs": ..., "equal": ...}
void to_json(Json& j, const VerificationRow& r);
void from_json(const Json& j, VerificationRow& r);

// Reads a JSON document from a file, translating I/O and syntax problems
// into ParseError.
Json load_json_file(const std::string& path);

// CSV with a fixed header; fields containing separators are double-quoted.
std::string csv_escape(const std::string& field);
std::string csv_header();
std::string csv_row(const VerificationRow& r);

}  // namespace fcs
