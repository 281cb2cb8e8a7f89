#pragma once

// Piecewise-affine construction: the pyramid v = min_f (<f; x> + 1) on
// P = {x : <f; x> + 1 >= 0 for all f}, a greedy dyadic packing of the domain
// by scaled translates c + sP, and the vector solution u = v b.

#include <cstddef>
#include <span>
#include <vector>

#include "inclusionkit/feasibility.hpp"
#include "inclusionkit/polytope.hpp"

namespace inclusionkit {

/// One affine piece v(x) = <gradient; x> + offset on a polytopal cell.
struct AffinePiece {
    Polytope cell;                 // irredundant half spaces
    std::vector<RatVec> vertices;
    RatVec values;                 // v at each vertex
    RatVec gradient;               // scalar gradient, an element of F
    Rat offset;
    std::size_t copy = 0;          // index into PiecewiseAffine::copies

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// The translate center + scale * P.
struct CoverCopy {
    RatVec center;
    Rat scale;

    friend bool operator==(const CoverCopy&, const CoverCopy&) = default;
};

/// Scalar v as cells over the copies, plus the direction b of u = v b. The
/// vector gradient on a cell is b (x) g (gradient operator) or b v g
/// (symmetrized operator). v vanishes outside the copies.
struct PiecewiseAffine {
    OperatorKind op = OperatorKind::Gradient;
    RatVec direction;
    Polytope domain;
    Polytope base;
    std::vector<CoverCopy> copies;
    std::vector<AffinePiece> cells;
    Rat residual_measure;              // measure(domain) - covered measure
    std::vector<RatVec> unused_factors; // elements of F whose pyramid cell is flat

    RatMat vector_gradient(const AffinePiece& piece) const;
};

struct PyramidSpec {
    PointSet factors;
    Polytope base;
    Rat apex_value;
    std::vector<RatVec> inactive;   // f with an empty (lower-dimensional) cell
};

struct Pyramid {
    PyramidSpec spec;
    PiecewiseAffine function;   // one copy (center 0, scale 1) on P itself
};

/// Throws NotInterior unless 0 is in int co F. F = {0} gives the zero
/// function with no cells.
Pyramid build_pyramid(const PointSet& factors);

/// Cap on the number of copies: INCLUSIONKIT_MAX_COPIES, default 200000.
std::size_t max_copies_from_env();

/// Greedy placement on dyadic grids at scales s0 2^-k, level by level, in
/// lexicographic order, stopping as soon as the covered measure reaches
/// (1 - delta) measure(omega). Copies are interior-disjoint and inside omega.
/// Throws BudgetExceeded when more than max_copies copies would be needed.
std::vector<CoverCopy> vitali_cover(const Polytope& omega, const Polytope& base, const Rat& delta,
                                    std::size_t max_copies = max_copies_from_env());

/// Requires a Feasible verdict (InvalidInput otherwise).
PiecewiseAffine assemble_solution(const Verdict& verdict, const Polytope& omega, const Rat& delta,
                                  std::size_t max_copies = max_copies_from_env());

/// Rescales the base cells onto every copy. OpenMP over copies; the serial
/// version is the reference the parallel one is tested against.
std::vector<AffinePiece> place_cells(std::span<const AffinePiece> base_cells, std::span<const CoverCopy> copies);
std::vector<AffinePiece> place_cells_serial(std::span<const AffinePiece> base_cells, std::span<const CoverCopy> copies);

/// Exact integral of v via simplex decomposition and the vertex-average rule.
Rat integrate_scalar(const PiecewiseAffine& pw);
/// Integral of u = v b.
RatVec integrate(const PiecewiseAffine& pw);

namespace cellgeom {

std::vector<RatVec> vertices(const Polytope& p);
std::size_t affine_dim(std::span<const RatVec> points);
/// Drops half spaces that do not support a facet, and duplicates.
Polytope irredundant(const Polytope& p, std::span<const RatVec> verts);
/// Pulling triangulation into full-dimensional simplices.
std::vector<std::vector<RatVec>> triangulate(const Polytope& p, std::span<const RatVec> verts);
Rat simplex_volume(std::span<const RatVec> simplex);
Rat volume(const Polytope& p);
Rat integrate_affine(const Polytope& p, std::span<const RatVec> verts, const RatVec& gradient, const Rat& offset);

} // namespace cellgeom

} // namespace inclusionkit
