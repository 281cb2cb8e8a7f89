#include "inclusionkit/tensor_ops.hpp"

#include <vector>

namespace inclusionkit {

std::string_view to_string(ProductKind kind)
{
    switch (kind) {
    case ProductKind::Tensor: return "tensor";
    case ProductKind::Symmetric: return "symmetric";
    case ProductKind::Wedge: return "wedge";
    }
    return "unknown";
}

RatMat tensor(const RatVec& a, const RatVec& b)
{
    RatMat m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

RatMat sym_product(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "symmetric product of vectors of different length");
    return tensor(a, b) + tensor(b, a);
}

RatMat wedge_product(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "wedge product of vectors of different length");
    return tensor(a, b) - tensor(b, a);
}

RatVec normalize_direction(const RatVec& v)
{
    const std::size_t k = first_nonzero(v);
    if (k == v.size()) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
    return scale(v, 1 / v[k]);
}

Subspace matrix_span(std::size_t rows, std::size_t cols, std::span<const RatMat> mats)
{
    std::vector<RatVec> flat;
    flat.reserve(mats.size());
    for (const auto& m : mats) {
        if (m.rows() != rows || m.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "matrix shape differs from span shape");
        flat.push_back(m.flat());
    }
    return Subspace::span(rows * cols, flat);
}

RatMat unflatten(const RatVec& v, std::size_t rows, std::size_t cols) { return RatMat(rows, cols, v); }

Subspace symmetric_matrices(std::size_t n)
{
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            gens.push_back(sym_product(unit_vector(n, i), unit_vector(n, j)).flat());
    return Subspace::span(n * n, gens);
}

Subspace skew_matrices(std::size_t n)
{
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(wedge_product(unit_vector(n, i), unit_vector(n, j)).flat());
    return Subspace::span(n * n, gens);
}

Subspace common_kernel(const Subspace& mats, std::size_t n)
{
    if (mats.ambient() != n * n) throw Error(ErrorCode::AmbientMismatch, "common kernel: ambient is not n x n");
    if (mats.dim() == 0) return Subspace::whole(n);
    // Stack every basis matrix vertically; the kernel of the stack is the
    // intersection of the individual kernels.
    RatMat stacked(mats.dim() * n, n);
    for (std::size_t k = 0; k < mats.dim(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = mats.basis()[k][i * n + j];
    return kernel(stacked);
}

std::optional<RatVec> detect_rank_one_span(const Subspace& s, std::size_t rows, std::size_t cols)
{
    if (s.ambient() != rows * cols) throw Error(ErrorCode::AmbientMismatch, "rank-one detection: shape does not match ambient");
    if (s.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "rank-one detection needs dim S >= 1");
    std::vector<RatVec> columns;
    for (const auto& v : s.basis()) {
        const RatMat m = unflatten(v, rows, cols);
        for (std::size_t j = 0; j < cols; ++j) columns.push_back(m.col(j));
    }
    const Subspace colspace = Subspace::span(rows, columns);
    if (colspace.dim() != 1) return std::nullopt;
    return normalize_direction(colspace.basis().front());
}

namespace {

std::optional<RatVec> slice_by_common_kernel(const Subspace& s, const Subspace& host, std::size_t n)
{
    const Subspace perp = orthogonal_complement(s, host);
    const Subspace ker = common_kernel(perp, n);
    if (ker.dim() == 0) return std::nullopt;
    return normalize_direction(ker.basis().front());
}

} // namespace

std::optional<RatVec> detect_sym_slice(const Subspace& s, std::size_t n)
{
    if (s.ambient() != n * n) throw Error(ErrorCode::AmbientMismatch, "symmetric slice detection: ambient is not n x n");
    if (s.dim() != n) throw Error(ErrorCode::DimensionMismatch, "symmetric slice detection needs dim S = n");
    return slice_by_common_kernel(s, symmetric_matrices(n), n);
}

std::optional<RatVec> detect_wedge_slice(const Subspace& w, std::size_t n)
{
    if (w.ambient() != n * n) throw Error(ErrorCode::AmbientMismatch, "wedge slice detection: ambient is not n x n");
    if (n == 0 || w.dim() != n - 1) throw Error(ErrorCode::DimensionMismatch, "wedge slice detection needs dim W = n - 1");
    return slice_by_common_kernel(w, skew_matrices(n), n);
}

bool sym_pair_dependent(const RatVec& a, const RatVec& b, const RatVec& c, const RatVec& d)
{
    if (is_zero(a) || is_zero(b) || is_zero(c) || is_zero(d))
        throw Error(ErrorCode::ZeroVector, "symmetric pair dependence needs nonzero vectors");
    const RatMat pair = RatMat::from_rows({sym_product(a, b).flat(), sym_product(c, d).flat()});
    return rank(pair) <= 1;
}

RatMat slice_map(ProductKind kind, const RatVec& b, const RatVec& x)
{
    switch (kind) {
    case ProductKind::Tensor: return tensor(b, x);
    case ProductKind::Symmetric: return sym_product(x, b);
    case ProductKind::Wedge: return wedge_product(x, b);
    }
    throw Error(ErrorCode::InvalidInput, "unknown product kind");
}

Subspace slice_subspace(ProductKind kind, const RatVec& b, std::size_t cols)
{
    if (is_zero(b)) throw Error(ErrorCode::ZeroVector, "slice subspace of the zero vector");
    if (kind != ProductKind::Tensor && cols != b.size())
        throw Error(ErrorCode::DimensionMismatch, "symmetric and wedge slices are square");
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < cols; ++i) gens.push_back(slice_map(kind, b, unit_vector(cols, i)).flat());
    return Subspace::span(b.size() * cols, gens);
}

Subspace slice_subspace(ProductKind kind, const RatVec& b) { return slice_subspace(kind, b, b.size()); }

} // namespace inclusionkit
