#include "inclusionkit/feasibility.hpp"

#include <string>

namespace inclusionkit {

std::string_view to_string(OperatorKind op)
{
    return op == OperatorKind::Gradient ? "gradient" : "symmetrized";
}

std::string_view to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::Feasible: return "feasible";
    case VerdictStatus::Infeasible: return "infeasible";
    case VerdictStatus::OutOfScope: return "out_of_scope";
    }
    return "unknown";
}

std::string_view to_string(InfeasibleReason reason)
{
    switch (reason) {
    case InfeasibleReason::DimensionTooSmall: return "DimensionTooSmall";
    case InfeasibleReason::SpanNotRankOne: return "SpanNotRankOne";
    case InfeasibleReason::CommonKernelTrivial: return "CommonKernelTrivial";
    case InfeasibleReason::NotRelativeInterior: return "NotRelativeInterior";
    }
    return "Unknown";
}

InclusionProblem InclusionProblem::make(OperatorKind op, std::size_t m, std::size_t n, const std::vector<RatMat>& targets,
                                        Polytope domain)
{
    if (m == 0 || n == 0) throw Error(ErrorCode::InvalidInput, "matrix shape must be at least 1 x 1");
    if (op == OperatorKind::SymmetrizedGradient && m != n)
        throw Error(ErrorCode::InvalidInput, "symmetrized gradient needs square targets");
    if (targets.empty()) throw Error(ErrorCode::InvalidInput, "target set E is empty");
    if (domain.dim() != n) throw Error(ErrorCode::InvalidInput, "domain dimension differs from n");

    std::vector<RatVec> flat;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const RatMat& a = targets[i];
        if (a.rows() != m || a.cols() != n)
            throw Error(ErrorCode::InvalidInput, "target " + std::to_string(i) + " has the wrong shape");
        if (a.is_zero()) throw Error(ErrorCode::InvalidInput, "target " + std::to_string(i) + " is the zero matrix");
        if (op == OperatorKind::SymmetrizedGradient && !a.is_symmetric())
            throw Error(ErrorCode::InvalidInput, "target " + std::to_string(i) + " is not symmetric");
        flat.push_back(a.flat());
    }
    InclusionProblem p;
    p.op = op;
    p.m = m;
    p.n = n;
    p.targets = PointSet(m * n, std::move(flat));
    p.domain = std::move(domain);
    return p;
}

PointSet factor_slice(const PointSet& targets, const RatVec& b, ProductKind kind, std::size_t cols)
{
    if (is_zero(b)) throw Error(ErrorCode::ZeroVector, "factor_slice needs b != 0");
    const std::size_t rows = b.size();
    if (targets.ambient() != rows * cols) throw Error(ErrorCode::AmbientMismatch, "factor_slice: target shape");
    const Rat bb = dot(b, b);
    const std::size_t lead = first_nonzero(b);

    std::vector<RatVec> factors;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const RatMat a(rows, cols, targets[i]);
        RatVec f;
        switch (kind) {
        case ProductKind::Tensor:
            // Row `lead` of b (x) f is b_lead f.
            f = scale(a.row(lead), 1 / b[lead]);
            break;
        case ProductKind::Symmetric: {
            // A = b f^T + f b^T gives A b = (f.b) b + |b|^2 f and b^T A b = 2 |b|^2 (f.b).
            const RatVec ab = a.apply(b);
            const Rat fb = dot(b, ab) / (2 * bb);
            f = scale(sub(ab, scale(b, fb)), 1 / bb);
            break;
        }
        case ProductKind::Wedge:
            // A = f b^T - b f^T with f.b = 0 gives A b = |b|^2 f.
            f = scale(a.apply(b), 1 / bb);
            break;
        }
        if (!(slice_map(kind, b, f) == a))
            throw Error(ErrorCode::NotInSlice, "target " + std::to_string(i) + " is not in the " +
                                                   std::string(to_string(kind)) + " slice of b");
        factors.push_back(std::move(f));
    }
    return PointSet(cols, std::move(factors));
}

namespace {

Verdict start_verdict(const InclusionProblem& problem, OperatorKind expected)
{
    if (problem.op != expected) throw Error(ErrorCode::InvalidInput, "decider called with the wrong operator");
    if (problem.targets.contains_zero()) throw Error(ErrorCode::InvalidInput, "0 is in E");
    Verdict v;
    v.op = problem.op;
    v.m = problem.m;
    v.n = problem.n;
    v.span_dim = problem.targets.span().dim();
    if (v.span_dim < problem.n) {
        v.status = VerdictStatus::Infeasible;
        v.reason = InfeasibleReason::DimensionTooSmall;
    } else if (v.span_dim > problem.n) {
        v.status = VerdictStatus::OutOfScope;
    }
    return v;
}

bool settled(const Verdict& v) { return v.status == VerdictStatus::OutOfScope || v.reason.has_value(); }

// Shared tail of both deciders once b is known.
void finish_with_direction(Verdict& v, const InclusionProblem& problem, const RatVec& b)
{
    const OriginAnalysis origin = analyze_origin(problem.targets);
    if (!origin.certificate) {
        v.status = VerdictStatus::Infeasible;
        v.reason = InfeasibleReason::NotRelativeInterior;
        v.separating = origin.separating;
        return;
    }
    PointSet factors = factor_slice(problem.targets, b, problem.product(), problem.n);
    if (!in_interior_of_hull(factors))
        throw std::logic_error("factor set lost the interior property; slice detection is inconsistent");
    v.status = VerdictStatus::Feasible;
    v.b = b;
    v.factors = std::move(factors);
    v.certificate = origin.certificate;
}

} // namespace

Verdict decide_gradient(const InclusionProblem& problem)
{
    Verdict v = start_verdict(problem, OperatorKind::Gradient);
    if (settled(v)) return v;

    // Scalar targets: b (x) R^n is all of R^{1 x n} with b = 1.
    std::optional<RatVec> b = problem.m == 1 ? std::optional<RatVec>(RatVec{Rat(1)})
                                              : detect_rank_one_span(problem.targets.span(), problem.m, problem.n);
    if (!b) {
        v.status = VerdictStatus::Infeasible;
        v.reason = InfeasibleReason::SpanNotRankOne;
        return v;
    }
    finish_with_direction(v, problem, *b);
    return v;
}

Verdict decide_symmetrized(const InclusionProblem& problem)
{
    Verdict v = start_verdict(problem, OperatorKind::SymmetrizedGradient);
    if (settled(v)) return v;

    const Subspace span = problem.targets.span();
    const std::optional<RatVec> b = detect_sym_slice(span, problem.n);
    if (!b) {
        v.status = VerdictStatus::Infeasible;
        v.reason = InfeasibleReason::CommonKernelTrivial;
        v.complement = orthogonal_complement(span, symmetric_matrices(problem.n));
        return v;
    }
    finish_with_direction(v, problem, *b);
    return v;
}

Verdict decide(const InclusionProblem& problem)
{
    return problem.op == OperatorKind::Gradient ? decide_gradient(problem) : decide_symmetrized(problem);
}

} // namespace inclusionkit
