#pragma once

// JSON forms of the pipeline objects.  Field elements are written with
// Field::format, polynomials as comma-separated coefficients low-to-high,
// matrices as "row;row" with space-separated entries.

#include <cstdint>

#include <json.hpp>

#include "pcc/centralizer.hpp"
#include "pcc/classes.hpp"
#include "pcc/cocentralizer.hpp"

namespace pcc {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [{"poly":"1,1","partition":[1,1,1]}, ...]
Json to_json(const Gjnf& g);
Gjnf gjnf_from_json(const Json& j, const FieldPtr& f);

/// {"mu":[..],"nu":[..],"entries":[["c0,c1",...],...]}
Json to_json(const CocentElement& v);
CocentElement cocent_from_json(const Json& j, const FieldPtr& K);

/// {"lambda":[..],"entries":[[{"offset":o,"coeffs":"c0,c1"},...],...]}
Json to_json(const TruncAlgElement& b);
TruncAlgElement trunc_alg_from_json(const Json& j, const FieldPtr& K);

/// {"levi_a":..,"levi_b":..,"blocks":[{"poly":..,"rep":..}],"matrix":"row;row"}
Json to_json(const ClassRep& r);
ClassRep class_rep_from_json(const Json& j, const FieldPtr& f);

/// {"coeffs":[c0,c1,...]}
Json to_json(const CountPoly& p);
CountPoly count_poly_from_json(const Json& j);

Json count_json(int m, int n, std::uint64_t q, std::uint64_t count);

}  // namespace pcc
