#include "inclusionkit/polytope.hpp"

#include <algorithm>

#include "inclusionkit/convexity.hpp"

namespace inclusionkit {

Polytope Polytope::box(RatVec low, RatVec high)
{
    if (low.empty() || low.size() != high.size()) throw Error(ErrorCode::InvalidInput, "box corners must have equal nonzero length");
    for (std::size_t i = 0; i < low.size(); ++i)
        if (!(low[i] < high[i])) throw Error(ErrorCode::InvalidInput, "box needs low < high in every coordinate");
    Polytope p;
    p.is_box_ = true;
    p.dim_ = low.size();
    for (std::size_t i = 0; i < p.dim_; ++i) {
        p.halfspaces_.push_back({unit_vector(p.dim_, i), high[i]});
        p.halfspaces_.push_back({scale(unit_vector(p.dim_, i), -1), -low[i]});
    }
    p.low_ = std::move(low);
    p.high_ = std::move(high);
    return p;
}

Polytope Polytope::from_halfspaces(std::vector<HalfSpace> halfspaces)
{
    if (halfspaces.empty()) throw Error(ErrorCode::InvalidInput, "polytope needs at least one half space");
    Polytope p;
    p.dim_ = halfspaces.front().normal.size();
    if (p.dim_ == 0) throw Error(ErrorCode::InvalidInput, "half space normal is empty");
    for (const auto& h : halfspaces)
        if (h.normal.size() != p.dim_) throw Error(ErrorCode::DimensionMismatch, "half space normals differ in length");
    p.halfspaces_ = std::move(halfspaces);
    return p;
}

bool Polytope::contains(const RatVec& x) const
{
    return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                       [&](const HalfSpace& h) { return dot(h.normal, x) <= h.offset; });
}

Polytope Polytope::scaled_copy(const RatVec& center, const Rat& factor) const
{
    if (center.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "copy center has wrong dimension");
    if (sgn(factor) <= 0) throw Error(ErrorCode::InvalidInput, "copy scale must be positive");
    if (is_box_) return box(add(center, scale(low_, factor)), add(center, scale(high_, factor)));
    std::vector<HalfSpace> hs;
    hs.reserve(halfspaces_.size());
    for (const auto& h : halfspaces_) hs.push_back({h.normal, factor * h.offset + dot(h.normal, center)});
    return from_halfspaces(std::move(hs));
}

void Polytope::validate() const
{
    if (is_box_) return;
    std::vector<RatVec> normals;
    RatVec offsets;
    for (const auto& h : halfspaces_) {
        normals.push_back(h.normal);
        offsets.push_back(h.offset);
    }
    for (std::size_t j = 0; j < dim_; ++j) {
        for (int s : {1, -1}) {
            const LPResult r = maximize_over_polyhedron(scale(unit_vector(dim_, j), s), normals, offsets);
            if (r.status == LPStatus::Infeasible) throw Error(ErrorCode::InvalidInput, "polytope is empty");
            if (r.status == LPStatus::Unbounded) throw Error(ErrorCode::Unbounded, "polytope is unbounded");
        }
    }
    // Interior: max t with <a_i; x> + t <= b_i, t <= 1.
    std::vector<RatVec> lifted;
    RatVec lifted_offsets = offsets;
    for (const auto& a : normals) {
        RatVec row = a;
        row.push_back(1);
        lifted.push_back(std::move(row));
    }
    lifted.push_back(unit_vector(dim_ + 1, dim_));
    lifted_offsets.push_back(1);
    const LPResult r = maximize_over_polyhedron(unit_vector(dim_ + 1, dim_), lifted, lifted_offsets);
    if (r.status != LPStatus::Optimal || sgn(r.value) <= 0)
        throw Error(ErrorCode::InvalidInput, "polytope has empty interior");
}

} // namespace inclusionkit
