#pragma once

// Exact linear algebra over the rationals. Every decision procedure in the
// library sits on top of these routines; nothing here rounds.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "inclusionkit/error.hpp"

namespace inclusionkit {

/// Arbitrary precision rational. mpq_class keeps gcd(num, den) = 1 and den > 0
/// after every arithmetic operation; values built by hand go through make_rat.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional sign on p). Throws InvalidInput otherwise.
Rat parse_rat(std::string_view text);

/// Canonical string: "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rat& value);

RatVec zeros(std::size_t n);
RatVec unit_vector(std::size_t n, std::size_t index);
bool is_zero(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& s);
/// Index of the first nonzero entry, or v.size() when v = 0.
std::size_t first_nonzero(const RatVec& v);

/// Dense row-major rational matrix.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols);
    RatMat(std::size_t rows, std::size_t cols, RatVec entries);

    static RatMat identity(std::size_t n);
    static RatMat from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Row-major flattening; the canonical embedding of R^{m x n} into R^{mn}.
    const RatVec& flat() const noexcept { return data_; }
    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;
    RatMat transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    RatVec apply(const RatVec& x) const;

    friend bool operator==(const RatMat&, const RatMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    RatVec data_;
};

RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatMat operator*(const Rat& s, const RatMat& a);

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivots are 1, so the
/// leading entry of each row is positive and leftmost. Zero rows are dropped.
/// `pivots`, when given, receives the pivot column of each returned row.
RatMat rref(RatMat m, std::vector<std::size_t>* pivots = nullptr);

/// Row rank over Q via fraction-free (Bareiss) elimination on an integer
/// scaling of the rows.
std::size_t rank(const RatMat& m);

/// Some solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Determinant of a square matrix.
Rat determinant(RatMat m);

/// A linear subspace of Q^ambient stored as a reduced row-echelon basis.
/// Two equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, std::span<const RatVec> vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<RatVec>& basis() const noexcept { return basis_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;

    /// Orthogonal projection with respect to the standard inner product.
    RatVec project(const RatVec& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<RatVec> basis_;
};

/// {x : M x = 0}; dim = cols - rank(M).
Subspace kernel(const RatMat& m);

/// T inside `within` with S + T = within and <s, t> = 0 for all s, t.
/// Throws ContainmentViolation if S is not contained in `within`.
Subspace orthogonal_complement(const Subspace& s, const Subspace& within);

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
bool subspace_equal(const Subspace& s, const Subspace& t);

} // namespace inclusionkit
