#pragma once

// JSON, OBJ and CSV encodings. Rationals are strings "p/q" ("p" when q = 1);
// JSON integers are accepted on input, floats are rejected. Schema errors
// throw Error(Malformed) with a JSON pointer to the offending value.

#include <string>

#include <json.hpp>

#include "inclusionkit/builder.hpp"
#include "inclusionkit/feasibility.hpp"
#include "inclusionkit/verify.hpp"

namespace inclusionkit {

using Json = nlohmann::json;

Json to_json(const Rat& value);
Json to_json(const RatVec& v);
Rat rat_from_json(const Json& j, const std::string& pointer);
RatVec vec_from_json(const Json& j, const std::string& pointer, std::size_t expected_size);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, const std::string& pointer, std::size_t dim);

/// {operator, m, n, E, domain}. E lists matrices either flat row-major or as
/// rows; the domain defaults to the unit box.
InclusionProblem problem_from_json(const Json& j);
Json problem_to_json(const InclusionProblem& p);

/// {status, operator, m, n, span_dim, b, F, weights, reason, P, complement}.
Json verdict_to_json(const Verdict& v);

Json solution_to_json(const PiecewiseAffine& pw);
PiecewiseAffine solution_from_json(const Json& j);

Json report_to_json(const Report& r);

/// Graph of v as a Wavefront OBJ (n <= 2; InvalidInput otherwise).
std::string solution_to_obj(const PiecewiseAffine& pw);
/// One row per cell.
std::string solution_to_csv(const PiecewiseAffine& pw);

/// Parses a file; throws Malformed on I/O or syntax errors.
Json load_json_file(const std::string& path);

} // namespace inclusionkit
