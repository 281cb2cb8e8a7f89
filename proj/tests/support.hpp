#pragma once

// Test helpers: seeded random rationals and oracles that share no code with
// the library beyond the Rat type.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "inclusionkit/linalg.hpp"

namespace testkit {

using inclusionkit::Rat;
using inclusionkit::RatVec;

inline Rat q(long p, long d = 1)
{
    Rat r(p, d);
    r.canonicalize();
    return r;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Rational in [-bound, bound] with denominator at most 4.
    Rat rat(long bound = 5)
    {
        const long den = integer(1, 4);
        Rat r(integer(-bound * den, bound * den), den);
        r.canonicalize();
        return r;
    }

    Rat positive_rat(long bound = 5)
    {
        const long den = integer(1, 4);
        Rat r(integer(1, bound * den), den);
        r.canonicalize();
        return r;
    }

    RatVec vec(std::size_t n, long bound = 5)
    {
        RatVec v(n);
        for (auto& x : v) x = rat(bound);
        return v;
    }

    RatVec nonzero_vec(std::size_t n, long bound = 5)
    {
        for (;;) {
            RatVec v = vec(n, bound);
            if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) != 0; })) return v;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Row rank by textbook Gaussian elimination over Q.
inline std::size_t oracle_rank(std::vector<RatVec> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves A x = b for square or tall A with full column rank; none when
/// the system is inconsistent.
inline std::optional<RatVec> oracle_solve(std::vector<RatVec> a, RatVec b)
{
    const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        const Rat lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = 0; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (sgn(a[i][n]) != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
    return x;
}

/// 0 in ri co S for points of Q^2, by brute force over affinely independent
/// subsets T: 0 is in ri co S iff for every z in S the points -lambda z stay in
/// co S for all small lambda > 0, and such a ray is caught by one sub-simplex
/// whose barycentric coordinates beta0 + lambda beta1 are lexicographically
/// nonnegative.
inline bool oracle_zero_in_ri(const std::vector<RatVec>& s)
{
    const std::size_t k = s.size();
    std::vector<std::vector<std::size_t>> simplices;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) t.push_back(i);
        if (t.size() > 3) continue;
        std::vector<RatVec> diffs;
        for (std::size_t i = 1; i < t.size(); ++i) diffs.push_back({s[t[i]][0] - s[t[0]][0], s[t[i]][1] - s[t[0]][1]});
        if (oracle_rank(diffs) == t.size() - 1) simplices.push_back(t);
    }

    auto barycentric = [&](const std::vector<std::size_t>& t, const RatVec& p, const Rat& total) -> std::optional<RatVec> {
        // sum beta_i t_i = p, sum beta_i = total.
        std::vector<RatVec> a(3, RatVec(t.size()));
        for (std::size_t j = 0; j < t.size(); ++j) {
            a[0][j] = s[t[j]][0];
            a[1][j] = s[t[j]][1];
            a[2][j] = 1;
        }
        return oracle_solve(a, {p[0], p[1], total});
    };

    for (const auto& z : s) {
        const RatVec minus_z{-z[0], -z[1]};
        bool caught = false;
        for (const auto& t : simplices) {
            const auto b0 = barycentric(t, {Rat(0), Rat(0)}, Rat(1));
            const auto b1 = barycentric(t, minus_z, Rat(0));
            if (!b0 || !b1) continue;
            bool ok = true;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (sgn((*b0)[i]) < 0 || (sgn((*b0)[i]) == 0 && sgn((*b1)[i]) < 0)) ok = false;
            if (ok) {
                caught = true;
                break;
            }
        }
        if (!caught) return false;
    }
    return true;
}

inline Rat oracle_dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace testkit
