#pragma once

// Exact checker for piecewise-affine solutions. It rebuilds every geometric
// quantity from the serialized half spaces and vertex values and shares no
// code with the builder.

#include <string>
#include <string_view>
#include <vector>

#include "inclusionkit/builder.hpp"
#include "inclusionkit/feasibility.hpp"

namespace inclusionkit {

struct CheckResult {
    std::string name;
    std::vector<std::string> failures;   // empty when the check passed

    bool passed() const { return failures.empty(); }
};

struct Report {
    std::vector<CheckResult> checks;     // fixed order, see check_names()
    Rat domain_measure;
    Rat covered_measure;
    Rat scalar_integral;                 // integral of v
    RatVec integral;                     // integral of u = v b
    bool integral_nonzero = false;

    bool pass() const;
    const CheckResult& check(std::string_view name) const;
    /// Names of the checks with at least one failure.
    std::vector<std::string> failing() const;
};

const std::vector<std::string>& check_names();

/// Per-cell and per-copy checks run under OpenMP.
Report verify_solution(const PiecewiseAffine& pw, const InclusionProblem& problem, const Rat& delta);
/// Same checks in a plain loop.
Report verify_solution_serial(const PiecewiseAffine& pw, const InclusionProblem& problem, const Rat& delta);

/// Exact volume of a bounded polytope. Throws Unbounded.
Rat measure(const Polytope& p);

} // namespace inclusionkit
