#pragma once

// Deciders for Du in E and Du + Du^T in E (with nonzero mean) when
// dim span E equals the domain dimension n.

#include <optional>
#include <string_view>
#include <vector>

#include "inclusionkit/convexity.hpp"
#include "inclusionkit/polytope.hpp"
#include "inclusionkit/tensor_ops.hpp"

namespace inclusionkit {

enum class OperatorKind { Gradient, SymmetrizedGradient };

std::string_view to_string(OperatorKind op);

/// Operator, finite target set E (matrices flattened row-major) and domain.
/// For the gradient, E lives in R^{m x n}; for the symmetrized gradient m = n
/// and every element of E is symmetric. 0 is never in E.
struct InclusionProblem {
    OperatorKind op = OperatorKind::Gradient;
    std::size_t m = 0;
    std::size_t n = 0;
    PointSet targets;
    Polytope domain;

    /// Validates and builds; throws InvalidInput for 0 in E, non-symmetric
    /// targets in the symmetrized case, or shape errors.
    static InclusionProblem make(OperatorKind op, std::size_t m, std::size_t n, const std::vector<RatMat>& targets,
                                 Polytope domain);

    ProductKind product() const { return op == OperatorKind::Gradient ? ProductKind::Tensor : ProductKind::Symmetric; }
    RatMat target(std::size_t i) const { return RatMat(m, n, targets[i]); }
};

enum class VerdictStatus { Feasible, Infeasible, OutOfScope };

enum class InfeasibleReason { DimensionTooSmall, SpanNotRankOne, CommonKernelTrivial, NotRelativeInterior };

std::string_view to_string(VerdictStatus status);
std::string_view to_string(InfeasibleReason reason);

struct Verdict {
    VerdictStatus status = VerdictStatus::Infeasible;
    OperatorKind op = OperatorKind::Gradient;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t span_dim = 0;

    // Feasible: E = b (x) F (or b v F), elementwise in the order of E, with the
    // certificate weights indexing both.
    std::optional<RatVec> b;
    std::optional<PointSet> factors;
    std::optional<CaratheodoryCertificate> certificate;

    // Infeasible.
    std::optional<InfeasibleReason> reason;
    std::optional<RatVec> separating;     // NotRelativeInterior
    std::optional<Subspace> complement;   // CommonKernelTrivial: (span E)^perp in Sym(n)
};

Verdict decide_gradient(const InclusionProblem& problem);
Verdict decide_symmetrized(const InclusionProblem& problem);
/// Dispatches on the operator.
Verdict decide(const InclusionProblem& problem);

/// F with E = {slice_map(kind, b, f) : f in F}, elementwise in order. The
/// tensor and symmetric slice maps are injective for b != 0; for the wedge,
/// f is taken orthogonal to b. Throws NotInSlice naming the first offender.
PointSet factor_slice(const PointSet& targets, const RatVec& b, ProductKind kind, std::size_t cols);

} // namespace inclusionkit
