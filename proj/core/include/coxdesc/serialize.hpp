#pragma once

#include <nlohmann/json.hpp>

#include "coxdesc/check.hpp"
#include "coxdesc/classical.hpp"
#include "coxdesc/descent_algebra.hpp"
#include "coxdesc/polynomial.hpp"
#include "coxdesc/subalgebra.hpp"

namespace coxdesc {

/// Insertion-ordered JSON, so output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// {"1,3": "3/2", "-": "1"} with keys in ascending bitmask order.
Json to_json(const AlgebraElement& a);
/// Ascending coefficients as rational strings.
Json to_json(const QPolynomial& p);
Json to_json(const RationalMatrix& m);
Json to_json(const SubalgebraReport& r);
Json to_json(const CheckResult& c);
/// {"0": "2", "3": "1"} with ascending chain indices.
Json chain_to_json(const ChainElement& e);

/// Inverse of to_json(AlgebraElement); throws InvalidArgument on bad input.
AlgebraElement algebra_element_from_json(const Json& j, int rank);

}  // namespace coxdesc
