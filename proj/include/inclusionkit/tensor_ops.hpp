#pragma once

// Tensor, symmetric and wedge products of vectors, and structural detection
// of the "slice" subspaces b (x) R^n, R^n v b and R^n ^ b.

#include <optional>
#include <span>
#include <string_view>

#include "inclusionkit/linalg.hpp"

namespace inclusionkit {

enum class ProductKind { Tensor, Symmetric, Wedge };

std::string_view to_string(ProductKind kind);

/// a (x) b = a b^T.
RatMat tensor(const RatVec& a, const RatVec& b);
/// a v b = a (x) b + b (x) a.
RatMat sym_product(const RatVec& a, const RatVec& b);
/// a ^ b = a (x) b - b (x) a.
RatMat wedge_product(const RatVec& a, const RatVec& b);

/// Scales v so its first nonzero coordinate equals 1. Throws ZeroVector.
RatVec normalize_direction(const RatVec& v);

/// Span of matrices under the row-major flattening.
Subspace matrix_span(std::size_t rows, std::size_t cols, std::span<const RatMat> mats);
RatMat unflatten(const RatVec& v, std::size_t rows, std::size_t cols);

/// Sym(n) and Skew(n) as subspaces of the flattened R^{n x n}.
Subspace symmetric_matrices(std::size_t n);
Subspace skew_matrices(std::size_t n);

/// {x : A x = 0 for every A in the span}, for a span of n x n matrices.
Subspace common_kernel(const Subspace& mats, std::size_t n);

/// Returns b when the column spaces of all basis matrices of S (m x n,
/// flattened) together span a line; then S is inside b (x) R^n, with
/// equality iff dim S = n. b is normalized.
std::optional<RatVec> detect_rank_one_span(const Subspace& s, std::size_t rows, std::size_t cols);

/// For an n-dimensional S inside Sym(n): b with S = R^n v b, found as a
/// common kernel vector of the complement of S in Sym(n).
/// Throws DimensionMismatch if dim S != n.
std::optional<RatVec> detect_sym_slice(const Subspace& s, std::size_t n);

/// Skew analogue: W of dimension n-1 inside Skew(n). Uses
/// <A; x ^ b> = 2 <A b; x> for skew A, so W^perp b = 0 iff W = R^n ^ b.
std::optional<RatVec> detect_wedge_slice(const Subspace& w, std::size_t n);

/// Whether {a v b, c v d} is linearly dependent. Throws ZeroVector.
bool sym_pair_dependent(const RatVec& a, const RatVec& b, const RatVec& c, const RatVec& d);

/// b (x) R^cols (b in R^rows), R^n v b or R^n ^ b. Throws ZeroVector.
Subspace slice_subspace(ProductKind kind, const RatVec& b, std::size_t cols);
Subspace slice_subspace(ProductKind kind, const RatVec& b);

/// The slice map x -> b (x) x, x v b or x ^ b.
RatMat slice_map(ProductKind kind, const RatVec& b, const RatVec& x);

} // namespace inclusionkit
