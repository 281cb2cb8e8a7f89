#include "inclusionkit/convexity.hpp"

#include <algorithm>

namespace inclusionkit {

PointSet::PointSet(std::size_t ambient, std::vector<RatVec> points) : ambient_(ambient)
{
    if (points.empty()) throw Error(ErrorCode::InvalidInput, "point set is empty");
    for (auto& p : points) {
        if (p.size() != ambient) throw Error(ErrorCode::AmbientMismatch, "point dimension differs from ambient dimension");
        if (!contains(p)) points_.push_back(std::move(p));
    }
}

bool PointSet::contains_zero() const
{
    return std::any_of(points_.begin(), points_.end(), [](const RatVec& p) { return is_zero(p); });
}

bool PointSet::contains(const RatVec& p) const { return std::find(points_.begin(), points_.end(), p) != points_.end(); }

Subspace PointSet::span() const { return Subspace::span(ambient_, points_); }

bool PointSet::same_set(const PointSet& other) const
{
    if (ambient_ != other.ambient_ || size() != other.size()) return false;
    return std::all_of(points_.begin(), points_.end(), [&](const RatVec& p) { return other.contains(p); });
}

bool certificate_valid(const PointSet& s, const CaratheodoryCertificate& cert)
{
    if (cert.indices.empty() || cert.indices.size() != cert.weights.size()) return false;
    Rat total = 0;
    RatVec barycenter = zeros(s.ambient());
    std::vector<RatVec> used;
    for (std::size_t k = 0; k < cert.indices.size(); ++k) {
        if (cert.indices[k] >= s.size() || sgn(cert.weights[k]) <= 0) return false;
        total += cert.weights[k];
        barycenter = add(barycenter, scale(s[cert.indices[k]], cert.weights[k]));
        used.push_back(s[cert.indices[k]]);
    }
    if (total != 1 || !is_zero(barycenter)) return false;
    const Subspace span_used = Subspace::span(s.ambient(), used);
    const Subspace span_all = s.span();
    if (!subspace_equal(span_used, span_all)) return false;
    if (!s.contains_zero() && cert.indices.size() < span_all.dim() + 1) return false;
    return true;
}

bool separating_functional_valid(const PointSet& s, const RatVec& p)
{
    if (p.size() != s.ambient() || is_zero(p)) return false;
    if (!s.span().contains(p)) return false;
    return std::all_of(s.points().begin(), s.points().end(), [&](const RatVec& z) { return sgn(dot(z, p)) >= 0; });
}

namespace {

// max eps  s.t.  sum_i (eps + s_i) z_i = 0,  sum_i (eps + s_i) = 1,  s, eps >= 0.
// Variables are (s_1, ..., s_k, eps); rows are the coordinates then the
// normalization.
LPResult relative_interior_lp(const PointSet& s)
{
    const std::size_t d = s.ambient();
    const std::size_t k = s.size();
    RatMat a(d + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            a(r, i) = s[i][r];
            a(r, k) += s[i][r];
        }
        a(d, i) = 1;
    }
    a(d, k) = static_cast<unsigned long>(k);
    RatVec rhs = zeros(d + 1);
    rhs[d] = 1;
    RatVec objective = zeros(k + 1);
    objective[k] = 1;
    return simplex_solve(objective, a, rhs);
}

RatVec normalize_functional(const RatVec& p)
{
    const std::size_t k = first_nonzero(p);
    return scale(p, 1 / abs(p[k]));
}

OriginAnalysis classify_by_lp(const PointSet& s)
{
    OriginAnalysis out;
    const LPResult lp = relative_interior_lp(s);
    const std::size_t d = s.ambient();
    const std::size_t k = s.size();

    if (lp.status == LPStatus::Optimal && sgn(lp.value) > 0) {
        out.kind = OriginClass::InRelativeInterior;
        out.min_weight = lp.value;
        CaratheodoryCertificate cert;
        for (std::size_t i = 0; i < k; ++i) {
            cert.indices.push_back(i);
            cert.weights.push_back(lp.value + lp.primal[i]);
        }
        out.certificate = std::move(cert);
        return out;
    }

    // Either a Farkas ray (0 outside co S) or an optimal dual with value 0
    // (0 on the relative boundary). In both cases the coordinate part y of the
    // dual satisfies <z_i; y> >= 0 for all i with a strictly positive sum.
    out.kind = OriginClass::NotInRelativeInterior;
    out.min_weight = 0;
    RatVec y(lp.dual.begin(), lp.dual.begin() + static_cast<std::ptrdiff_t>(d));
    out.separating = normalize_functional(s.span().project(y));
    return out;
}

} // namespace

OriginAnalysis analyze_origin(const PointSet& s)
{
    if (s.contains_zero()) {
        OriginAnalysis out;
        out.kind = OriginClass::ZeroInSet;
        return out;
    }
    return classify_by_lp(s);
}

std::optional<CaratheodoryCertificate> in_relative_interior_of_hull(const PointSet& s)
{
    return classify_by_lp(s).certificate;
}

bool in_interior_of_hull(const PointSet& s)
{
    return in_relative_interior_of_hull(s).has_value() && s.span().dim() == s.ambient();
}

std::optional<RatVec> separating_functional(const PointSet& s)
{
    return classify_by_lp(s).separating;
}

} // namespace inclusionkit
