#pragma once

#include <optional>
#include <vector>

#include "inclusionkit/linalg.hpp"

namespace inclusionkit {

// ---------------------------------------------------------------------------
// Exact simplex

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat value;       // optimal objective, when Optimal
    RatVec primal;   // optimal x, when Optimal
    /// Optimal: dual y with A^T y >= c and b^T y = value.
    /// Infeasible: Farkas ray y with A^T y >= 0 and b^T y < 0.
    /// Unbounded: empty.
    RatVec dual;
};

/// maximize c^T x  subject to  A x = b, x >= 0.
/// Two-phase tableau simplex over Q with Bland's lowest-index rule for both
/// the entering and the leaving variable. Throws DimensionMismatch.
LPResult simplex_solve(const RatVec& objective, const RatMat& a, const RatVec& b);

/// maximize c^T x  subject to  <normals[i], x> <= offsets[i], x free.
/// The primal of the result has length c.size().
LPResult maximize_over_polyhedron(const RatVec& objective, const std::vector<RatVec>& normals, const RatVec& offsets);

// ---------------------------------------------------------------------------
// Finite point sets

/// Finite nonempty set of points in Q^ambient; duplicates are dropped on
/// construction, keeping first occurrences in order.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t ambient, std::vector<RatVec> points);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t size() const noexcept { return points_.size(); }
    const RatVec& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<RatVec>& points() const noexcept { return points_; }

    bool contains_zero() const;
    bool contains(const RatVec& p) const;
    Subspace span() const;

    /// Equality as sets.
    bool same_set(const PointSet& other) const;

private:
    std::size_t ambient_ = 0;
    std::vector<RatVec> points_;
};

/// Positive weights on (all of) the points with sum 1 and zero barycenter.
struct CaratheodoryCertificate {
    std::vector<std::size_t> indices;
    RatVec weights;
};

/// Exact re-check of every certificate invariant against S.
bool certificate_valid(const PointSet& s, const CaratheodoryCertificate& cert);

/// Exact re-check that P is a separating functional for S: P in span S,
/// P != 0 and <z; P> >= 0 for every z in S.
bool separating_functional_valid(const PointSet& s, const RatVec& p);

enum class OriginClass { InRelativeInterior, NotInRelativeInterior, ZeroInSet };

/// Result of locating the origin against co S. Exactly one of certificate /
/// separating is set unless the class is ZeroInSet, which is reported
/// before any LP runs.
struct OriginAnalysis {
    OriginClass kind = OriginClass::NotInRelativeInterior;
    Rat min_weight;
    std::optional<CaratheodoryCertificate> certificate;
    std::optional<RatVec> separating;
};

OriginAnalysis analyze_origin(const PointSet& s);

/// Solves max eps s.t. sum t_i z_i = 0, sum t_i = 1, t_i >= eps. A certificate
/// is returned iff the optimum is strictly positive.
std::optional<CaratheodoryCertificate> in_relative_interior_of_hull(const PointSet& s);

/// 0 in int co S: relative interior and span S = Q^ambient.
bool in_interior_of_hull(const PointSet& s);

/// P from the dual of the relative-interior LP, projected onto span S; none
/// when 0 is in ri co S. P is scaled so its first nonzero entry is +-1.
std::optional<RatVec> separating_functional(const PointSet& s);

} // namespace inclusionkit
