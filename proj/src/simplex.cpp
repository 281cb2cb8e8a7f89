#include <algorithm>

#include "inclusionkit/convexity.hpp"

namespace inclusionkit {

namespace {

// Dense tableau [A' | I | b'] for A' x + a = b', b' >= 0, with artificial
// variables a. Column indices n..n+m-1 are the artificials; their columns in
// the current tableau hold B^{-1}, which is how duals are read off.
class Tableau {
public:
    Tableau(const RatMat& a, const RatVec& b)
        : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), t_(m_ * width_, Rat(0)), basis_(m_), sign_(m_, 1)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            sign_[i] = sgn(b[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign_[i] * a(i, j);
            at(i, n_ + i) = 1;
            rhs(i) = sign_[i] * b[i];
            basis_[i] = n_ + i;
        }
    }

    Rat& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
    Rat& rhs(std::size_t i) { return at(i, width_ - 1); }
    const Rat& rhs(std::size_t i) const { return at(i, width_ - 1); }

    enum class Outcome { Optimal, Unbounded };

    // Maximizes cost^T over columns [0, allowed); cost covers all n+m columns.
    Outcome run(const RatVec& cost, std::size_t allowed)
    {
        for (;;) {
            std::size_t entering = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (is_basic(j)) continue;
                Rat reduced = cost[j];
                for (std::size_t k = 0; k < m_; ++k) reduced -= cost[basis_[k]] * at(k, j);
                if (sgn(reduced) > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed) return Outcome::Optimal;

            std::size_t leaving = m_;
            Rat best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(at(i, entering)) <= 0) continue;
                Rat ratio = rhs(i) / at(i, entering);
                if (leaving == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == m_) return Outcome::Unbounded;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rat inv = 1 / at(r, c);
        for (std::size_t j = 0; j < width_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(at(i, c)) == 0) continue;
            const Rat f = at(i, c);
            for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
        }
        basis_[r] = c;
    }

    // y^T = c_B^T B^{-1}, in the sign-flipped row space.
    RatVec duals(const RatVec& cost) const
    {
        RatVec y = zeros(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            const Rat& cb = cost[basis_[k]];
            if (sgn(cb) == 0) continue;
            for (std::size_t i = 0; i < m_; ++i) y[i] += cb * at(k, n_ + i);
        }
        return y;
    }

    RatVec unflip(RatVec y) const
    {
        for (std::size_t i = 0; i < m_; ++i)
            if (sign_[i] < 0) y[i] = -y[i];
        return y;
    }

    RatVec primal() const
    {
        RatVec x = zeros(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs(i);
        return x;
    }

    Rat objective(const RatVec& cost) const
    {
        Rat v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs(i);
        return v;
    }

    // Pivots zero-level artificials out of the basis where an original
    // column allows it; rows where none does are redundant and stay put.
    void expel_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(at(i, j)) != 0 && !is_basic(j)) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

private:
    bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    RatVec t_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
};

} // namespace

LPResult simplex_solve(const RatVec& objective, const RatMat& a, const RatVec& b)
{
    if (objective.size() != a.cols() || b.size() != a.rows())
        throw Error(ErrorCode::DimensionMismatch, "simplex: objective, constraint matrix and rhs shapes disagree");

    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    LPResult result;

    if (m == 0) {
        // No constraints: bounded iff no objective coefficient is positive.
        const bool bounded = std::none_of(objective.begin(), objective.end(), [](const Rat& c) { return sgn(c) > 0; });
        result.status = bounded ? LPStatus::Optimal : LPStatus::Unbounded;
        if (bounded) {
            result.value = 0;
            result.primal = zeros(n);
        }
        return result;
    }

    Tableau tab(a, b);

    RatVec phase1 = zeros(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.run(phase1, n + m);
    if (sgn(tab.objective(phase1)) < 0) {
        result.status = LPStatus::Infeasible;
        // Phase-1 optimality: y^T A' >= 0 on original columns, b'^T y < 0.
        result.dual = tab.unflip(tab.duals(phase1));
        return result;
    }

    tab.expel_artificials();
    RatVec phase2 = zeros(n + m);
    std::copy(objective.begin(), objective.end(), phase2.begin());
    if (tab.run(phase2, n) == Tableau::Outcome::Unbounded) {
        result.status = LPStatus::Unbounded;
        return result;
    }
    result.status = LPStatus::Optimal;
    result.primal = tab.primal();
    result.value = tab.objective(phase2);
    result.dual = tab.unflip(tab.duals(phase2));
    return result;
}

LPResult maximize_over_polyhedron(const RatVec& objective, const std::vector<RatVec>& normals, const RatVec& offsets)
{
    const std::size_t n = objective.size();
    const std::size_t k = normals.size();
    if (offsets.size() != k) throw Error(ErrorCode::DimensionMismatch, "polyhedron: normals and offsets differ in count");

    // x = x+ - x-, plus one slack per inequality.
    RatMat a(k, 2 * n + k);
    for (std::size_t i = 0; i < k; ++i) {
        if (normals[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "polyhedron: normal length");
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = normals[i][j];
            a(i, n + j) = -normals[i][j];
        }
        a(i, 2 * n + i) = 1;
    }
    RatVec c = zeros(2 * n + k);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = objective[j];
        c[n + j] = -objective[j];
    }
    LPResult r = simplex_solve(c, a, offsets);
    if (r.status == LPStatus::Optimal) {
        RatVec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = r.primal[j] - r.primal[n + j];
        r.primal = std::move(x);
    }
    return r;
}

} // namespace inclusionkit
