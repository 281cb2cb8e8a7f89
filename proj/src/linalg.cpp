#include "inclusionkit/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace inclusionkit {

Rat make_rat(long num, long den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
        throw Error(ErrorCode::InvalidInput, "not a rational: \"" + std::string(text) + "\"");

    std::string num_str(num[0] == '+' ? num.substr(1) : num);
    mpz_class p(num_str, 10);
    mpz_class q = 1;
    if (slash != std::string_view::npos) {
        q = mpz_class(std::string(den), 10);
        if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: \"" + std::string(text) + "\"");
    }
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vector(std::size_t n, std::size_t index)
{
    RatVec e = zeros(n);
    e.at(index) = 1;
    return e;
}

bool is_zero(const RatVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Rat dot(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot of vectors of different length");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "add of vectors of different length");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "sub of vectors of different length");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec& v, const Rat& s)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

std::size_t first_nonzero(const RatVec& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
    return v.size();
}

// ---------------------------------------------------------------------------
// RatMat

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMat::RatMat(std::size_t rows, std::size_t cols, RatVec entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows_ * cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix entry count does not match shape");
}

RatMat RatMat::identity(std::size_t n)
{
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows)
{
    if (rows.empty()) return RatMat();
    const std::size_t cols = rows.front().size();
    RatVec entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RatMat(rows.size(), cols, std::move(entries));
}

RatVec RatMat::row(std::size_t i) const
{
    return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVec RatMat::col(std::size_t j) const
{
    RatVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RatMat RatMat::transpose() const
{
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RatMat::is_zero() const { return inclusionkit::is_zero(data_); }

bool RatMat::is_symmetric() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatVec RatMat::apply(const RatVec& x) const
{
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    RatVec y = zeros(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

RatMat operator+(const RatMat& a, const RatMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    return RatMat(a.rows(), a.cols(), add(a.flat(), b.flat()));
}

RatMat operator-(const RatMat& a, const RatMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    return RatMat(a.rows(), a.cols(), sub(a.flat(), b.flat()));
}

RatMat operator*(const Rat& s, const RatMat& a) { return RatMat(a.rows(), a.cols(), scale(a.flat(), s)); }

// ---------------------------------------------------------------------------
// Elimination

RatMat rref(RatMat m, std::vector<std::size_t>* pivots)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    RatVec kept(m.flat().begin(), m.flat().begin() + static_cast<std::ptrdiff_t>(r * cols));
    if (pivots) *pivots = std::move(piv);
    return RatMat(r, cols, std::move(kept));
}

std::size_t rank(const RatMat& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Scale every row by the lcm of its denominators so all entries are integers.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b)
{
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    RatMat r = rref(std::move(aug), &piv);
    RatVec x = zeros(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == a.cols()) return std::nullopt;
        x[piv[i]] = r(i, a.cols());
    }
    return x;
}

Rat determinant(RatMat m)
{
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            const Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient, std::span<const RatVec> vectors)
{
    Subspace s(ambient);
    if (vectors.empty()) return s;
    std::vector<RatVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
        rows.push_back(v);
    }
    const RatMat r = rref(RatMat::from_rows(rows));
    for (std::size_t i = 0; i < r.rows(); ++i) s.basis_.push_back(r.row(i));
    return s;
}

Subspace Subspace::whole(std::size_t ambient)
{
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vector(ambient, i));
    return s;
}

bool Subspace::contains(const RatVec& v) const
{
    if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "containment test across ambient dimensions");
    // Reduce v against the echelon basis; each basis row has a unit pivot.
    RatVec w = v;
    for (const auto& b : basis_) {
        const std::size_t p = first_nonzero(b);
        if (sgn(w[p]) == 0) continue;
        const Rat f = w[p];
        for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * b[j];
    }
    return inclusionkit::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "subspace containment across ambient dimensions");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const RatVec& v) { return contains(v); });
}

RatVec Subspace::project(const RatVec& v) const
{
    if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "projection across ambient dimensions");
    const std::size_t k = basis_.size();
    if (k == 0) return zeros(ambient_);
    RatMat gram(k, k);
    RatVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis_[i], basis_[j]);
        rhs[i] = dot(basis_[i], v);
    }
    const auto coeff = solve(gram, rhs);
    RatVec p = zeros(ambient_);
    for (std::size_t i = 0; i < k; ++i) p = add(p, scale(basis_[i], (*coeff)[i]));
    return p;
}

Subspace kernel(const RatMat& m)
{
    std::vector<std::size_t> piv;
    const RatMat r = rref(m, &piv);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;

    std::vector<RatVec> vectors;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec x = zeros(cols);
        x[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r(i, free);
        vectors.push_back(std::move(x));
    }
    return Subspace::span(cols, vectors);
}

Subspace orthogonal_complement(const Subspace& s, const Subspace& within)
{
    if (s.ambient() != within.ambient())
        throw Error(ErrorCode::AmbientMismatch, "orthogonal complement across ambient dimensions");
    if (!within.contains(s))
        throw Error(ErrorCode::ContainmentViolation, "subspace is not contained in the enclosing space");
    if (s.dim() == 0) return within;

    // Coefficients c with sum_j c_j w_j orthogonal to every s_i.
    const auto& sb = s.basis();
    const auto& wb = within.basis();
    RatMat gram(sb.size(), wb.size());
    for (std::size_t i = 0; i < sb.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j) gram(i, j) = dot(sb[i], wb[j]);

    std::vector<RatVec> vectors;
    const Subspace coefficients = kernel(gram);
    for (const auto& c : coefficients.basis()) {
        RatVec v = zeros(within.ambient());
        for (std::size_t j = 0; j < wb.size(); ++j)
            if (sgn(c[j]) != 0) v = add(v, scale(wb[j], c[j]));
        vectors.push_back(std::move(v));
    }
    return Subspace::span(within.ambient(), vectors);
}

Subspace intersect(const Subspace& s, const Subspace& t)
{
    if (s.ambient() != t.ambient()) throw Error(ErrorCode::AmbientMismatch, "intersection across ambient dimensions");
    const std::size_t n = s.ambient();
    if (s.dim() == 0 || t.dim() == 0) return Subspace(n);

    // Columns s_1..s_p, -t_1..-t_q; kernel vectors (alpha, beta) give sum alpha_i s_i.
    const std::size_t p = s.dim();
    const std::size_t q = t.dim();
    RatMat m(n, p + q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j) m(i, j) = s.basis()[j][i];
        for (std::size_t j = 0; j < q; ++j) m(i, p + j) = -t.basis()[j][i];
    }
    std::vector<RatVec> vectors;
    const Subspace relations = kernel(m);
    for (const auto& k : relations.basis()) {
        RatVec v = zeros(n);
        for (std::size_t j = 0; j < p; ++j)
            if (sgn(k[j]) != 0) v = add(v, scale(s.basis()[j], k[j]));
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
}

Subspace sum(const Subspace& s, const Subspace& t)
{
    if (s.ambient() != t.ambient()) throw Error(ErrorCode::AmbientMismatch, "sum across ambient dimensions");
    std::vector<RatVec> all = s.basis();
    all.insert(all.end(), t.basis().begin(), t.basis().end());
    return Subspace::span(s.ambient(), all);
}

bool subspace_equal(const Subspace& s, const Subspace& t)
{
    if (s.ambient() != t.ambient()) throw Error(ErrorCode::AmbientMismatch, "equality across ambient dimensions");
    return s.contains(t) && t.contains(s);
}

} // namespace inclusionkit
