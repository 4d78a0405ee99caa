#pragma once

#include <json.hpp>
#include <string>

#include "hsm/domains.hpp"
#include "hsm/verify.hpp"

namespace hsm::io {

using json = nlohmann::json;

// Complex numbers are [re, im] pairs (a bare number is real). Vectors are arrays of
// those; matrices are arrays of rows. A two-number array is always read as one complex.
json to_json(cd z);
json to_json(const CVec& v);
json to_json(const RVec& v);
json to_json(const CMat& M);
json to_json(const Check& c);

cd complex_from_json(const json& j);
bool is_complex_scalar(const json& j);
CVec cvec_from_json(const json& j);
RVec rvec_from_json(const json& j);  // rejects nonzero imaginary parts
CMat cmat_from_json(const json& j);

// Parses arg as JSON text, or reads it as a file if it names one. ParseError on failure.
json load(const std::string& arg);

// Carrier coordinates, or a matrix for types I, II, III.
CVec point_from_json(const DomainDescriptor& D, const json& j);
// A matrix, or {"g": matrix}; checked against the group of D.
GroupElement group_from_json(const DomainDescriptor& D, const json& j, double tol = 1e-9);

}  // namespace hsm::io
