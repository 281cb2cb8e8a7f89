#pragma once

#include <vector>

#include "inclusionkit/linalg.hpp"

namespace inclusionkit {

/// The closed half space <normal; x> <= offset.
struct HalfSpace {
    RatVec normal;
    Rat offset;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Bounded convex polytope with nonempty interior, given either as an
/// axis-aligned box or by half spaces. Boxes keep their box form so that
/// serialization round-trips; halfspaces() always works.
class Polytope {
public:
    Polytope() = default;

    static Polytope box(RatVec low, RatVec high);
    static Polytope from_halfspaces(std::vector<HalfSpace> halfspaces);

    bool is_box() const noexcept { return is_box_; }
    const RatVec& low() const noexcept { return low_; }
    const RatVec& high() const noexcept { return high_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }

    bool contains(const RatVec& x) const;
    /// The image center + factor * P.
    Polytope scaled_copy(const RatVec& center, const Rat& factor) const;

    /// Checks boundedness and a nonempty interior with exact LPs.
    /// Throws Unbounded or InvalidInput.
    void validate() const;

    friend bool operator==(const Polytope&, const Polytope&) = default;

private:
    bool is_box_ = false;
    std::size_t dim_ = 0;
    RatVec low_;
    RatVec high_;
    std::vector<HalfSpace> halfspaces_;
};

} // namespace inclusionkit
