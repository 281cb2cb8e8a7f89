#include <doctest.h>

#include "inclusionkit/convexity.hpp"
#include "support.hpp"

using namespace inclusionkit;
using testkit::q;

namespace {

PointSet pts(std::vector<RatVec> p)
{
    const std::size_t n = p.front().size();
    return PointSet(n, std::move(p));
}

RatVec v1(long a) { return {Rat(a)}; }
RatVec v2(long a, long b) { return {Rat(a), Rat(b)}; }

// Independent re-check of the two witnesses.
bool weights_ok(const PointSet& s, const CaratheodoryCertificate& c)
{
    Rat total = 0;
    RatVec bary(s.ambient(), Rat(0));
    for (std::size_t k = 0; k < c.indices.size(); ++k) {
        if (sgn(c.weights[k]) <= 0) return false;
        total += c.weights[k];
        for (std::size_t j = 0; j < s.ambient(); ++j) bary[j] += c.weights[k] * s[c.indices[k]][j];
    }
    std::vector<RatVec> chosen, all = s.points();
    for (auto i : c.indices) chosen.push_back(s[i]);
    return total == 1 && std::all_of(bary.begin(), bary.end(), [](const Rat& x) { return sgn(x) == 0; }) &&
           testkit::oracle_rank(chosen) == testkit::oracle_rank(all);
}

bool separator_ok(const PointSet& s, const RatVec& p)
{
    std::vector<RatVec> all = s.points();
    const std::size_t r = testkit::oracle_rank(all);
    all.push_back(p);
    if (testkit::oracle_rank(all) != r) return false;
    if (std::all_of(p.begin(), p.end(), [](const Rat& x) { return sgn(x) == 0; })) return false;
    for (const auto& z : s.points())
        if (sgn(testkit::oracle_dot(z, p)) < 0) return false;
    return true;
}

} // namespace

TEST_SUITE("convexity") {

TEST_CASE("simplex: symmetric two-point problem")
{
    // max eps  s.t. t1 - t2 = 0, t1 + t2 = 1, t_i - eps - s_i = 0  (eps, s_i >= 0)
    // variables: t1 t2 eps s1 s2
    const RatMat a(4, 5, {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0),
                          Rat(1), Rat(1), Rat(0), Rat(0), Rat(0),
                          Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0),
                          Rat(0), Rat(1), Rat(-1), Rat(0), Rat(-1)});
    const LPResult r = simplex_solve({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}, a, {Rat(0), Rat(1), Rat(0), Rat(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == q(1, 2));
    CHECK(a.apply(r.primal) == RatVec{Rat(0), Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("simplex: forced zero weight gives optimum zero")
{
    // t1 = 1, t1 + t2 = 1, t_i >= eps.
    const RatMat a(4, 5, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0),
                          Rat(1), Rat(1), Rat(0), Rat(0), Rat(0),
                          Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0),
                          Rat(0), Rat(1), Rat(-1), Rat(0), Rat(-1)});
    const LPResult r = simplex_solve({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}, a, {Rat(1), Rat(1), Rat(0), Rat(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 0);
}

TEST_CASE("simplex: infeasible and unbounded")
{
    const RatMat a(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)});
    const LPResult r = simplex_solve({Rat(1), Rat(0)}, a, {Rat(1), Rat(2)});
    REQUIRE(r.status == LPStatus::Infeasible);
    // Farkas ray: A^T y >= 0 and b^T y < 0.
    CHECK(sgn(r.dual[0] + r.dual[1]) >= 0);
    CHECK(sgn(r.dual[0] + 2 * r.dual[1]) < 0);

    const RatMat u(1, 2, {Rat(1), Rat(-1)});
    CHECK(simplex_solve({Rat(1), Rat(0)}, u, {Rat(0)}).status == LPStatus::Unbounded);
    CHECK_THROWS_AS(simplex_solve({Rat(1)}, u, {Rat(0)}), Error);
}

TEST_CASE("simplex: optimal dual certifies the optimum")
{
    testkit::Gen g(31);
    for (int it = 0; it < 100; ++it) {
        const auto m = static_cast<std::size_t>(g.integer(1, 3));
        const auto n = static_cast<std::size_t>(g.integer(m, 5));
        RatMat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = g.rat(3);
        RatVec x0(n);
        for (auto& x : x0) x = g.positive_rat(2);
        const RatVec b = a.apply(x0);
        RatVec c(n);
        for (auto& x : c) x = g.rat(3);
        // Bound the feasible set with sum x <= 10 via a slack column.
        RatMat ab(m + 1, n + 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) ab(i, j) = a(i, j);
        for (std::size_t j = 0; j <= n; ++j) ab(m, j) = 1;
        RatVec bb = b;
        bb.push_back(Rat(10) + [&] { Rat s = 0; for (auto& x : x0) s += x; return s; }());
        c.push_back(Rat(0));
        const LPResult r = simplex_solve(c, ab, bb);
        REQUIRE(r.status == LPStatus::Optimal);
        CHECK(ab.apply(r.primal) == bb);
        for (const auto& x : r.primal) CHECK(sgn(x) >= 0);
        CHECK(dot(c, r.primal) == r.value);
        CHECK(dot(bb, r.dual) == r.value);
        const RatVec aty = ab.transpose().apply(r.dual);
        for (std::size_t j = 0; j < aty.size(); ++j) CHECK(aty[j] >= c[j]);
    }
}

TEST_CASE("relative interior examples")
{
    const auto a = in_relative_interior_of_hull(pts({v1(1), v1(-1)}));
    REQUIRE(a);
    CHECK(a->weights == RatVec{q(1, 2), q(1, 2)});
    const auto b = in_relative_interior_of_hull(pts({v2(1, 0), v2(0, 1), v2(-1, -1)}));
    REQUIRE(b);
    CHECK(b->weights == RatVec{q(1, 3), q(1, 3), q(1, 3)});
    CHECK_FALSE(in_relative_interior_of_hull(pts({v2(1, 0), v2(0, 1), v2(1, 1)})));
}

TEST_CASE("interior examples")
{
    CHECK(in_interior_of_hull(pts({v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)})));
    CHECK_FALSE(in_interior_of_hull(pts({v2(1, 0), v2(-1, 0)})));
    const PointSet s = pts({v1(2), v1(-1)});
    CHECK(in_interior_of_hull(s));
    CHECK(in_relative_interior_of_hull(s)->weights == RatVec{q(1, 3), q(2, 3)});
}

TEST_CASE("separating functional examples")
{
    const PointSet a = pts({v2(1, 0), v2(0, 1), v2(1, 1)});
    const auto p = separating_functional(a);
    REQUIRE(p);
    CHECK(separator_ok(a, *p));
    for (const auto& z : a.points()) CHECK(sgn(dot(z, *p)) > 0);

    CHECK_FALSE(separating_functional(pts({v1(1), v1(-1)})));

    const PointSet c = pts({v2(1, 0), v2(-1, 0), v2(0, 1)});
    const auto pc = separating_functional(c);
    REQUIRE(pc);
    CHECK((*pc)[0] == 0);
    CHECK(sgn((*pc)[1]) > 0);
}

TEST_CASE("zero in the set is reported before the LP")
{
    const OriginAnalysis o = analyze_origin(pts({v2(0, 0), v2(1, 0)}));
    CHECK(o.kind == OriginClass::ZeroInSet);
    CHECK_FALSE(o.certificate);
    CHECK_FALSE(o.separating);
}

TEST_CASE("point sets deduplicate")
{
    const PointSet s = pts({v2(1, 0), v2(1, 0), v2(0, 1)});
    CHECK(s.size() == 2);
    CHECK(s.same_set(pts({v2(0, 1), v2(1, 0)})));
}

TEST_CASE("property: dichotomy with exact witnesses")
{
    testkit::Gen g(32);
    for (int it = 0; it < 300; ++it) {
        const auto n = static_cast<std::size_t>(g.integer(1, 4));
        const auto k = static_cast<std::size_t>(g.integer(1, 8));
        std::vector<RatVec> p;
        for (std::size_t i = 0; i < k; ++i) p.push_back(g.nonzero_vec(n, 3));
        if (g.coin()) {
            // Close the set up so that 0 is a positive combination.
            RatVec s(n, Rat(0));
            for (const auto& z : p) s = add(s, scale(z, g.positive_rat(2)));
            if (!is_zero(s)) p.push_back(scale(s, -1));
        }
        const PointSet set(n, p);
        const OriginAnalysis o = analyze_origin(set);
        CHECK(o.certificate.has_value() != o.separating.has_value());
        if (o.certificate) {
            CHECK(weights_ok(set, *o.certificate));
            CHECK(certificate_valid(set, *o.certificate));
        }
        if (o.separating) {
            CHECK(separator_ok(set, *o.separating));
            CHECK(separating_functional_valid(set, *o.separating));
        }
    }
}

TEST_CASE("property: LP agrees with the brute-force oracle in the plane")
{
    testkit::Gen g(33);
    for (int it = 0; it < 150; ++it) {
        const auto k = static_cast<std::size_t>(g.integer(1, 5));
        std::vector<RatVec> p;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0 && g.integer(0, 3) == 0) p.push_back(scale(p[static_cast<std::size_t>(g.integer(0, static_cast<long>(i) - 1))], -g.positive_rat(2)));
            else p.push_back(RatVec{Rat(g.integer(-2, 2)), Rat(g.integer(-2, 2))});
        }
        const PointSet s(2, p);
        CHECK(in_relative_interior_of_hull(s).has_value() == testkit::oracle_zero_in_ri(s.points()));
    }
}

TEST_CASE("property: positive scaling leaves verdicts unchanged")
{
    testkit::Gen g(34);
    for (int it = 0; it < 100; ++it) {
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        std::vector<RatVec> p, scaled;
        const Rat lambda = g.positive_rat(7);
        for (long i = g.integer(1, 6); i > 0; --i) {
            p.push_back(g.nonzero_vec(n, 2));
            scaled.push_back(scale(p.back(), lambda));
        }
        const PointSet a(n, p), b(n, scaled);
        CHECK(in_relative_interior_of_hull(a).has_value() == in_relative_interior_of_hull(b).has_value());
        CHECK(in_interior_of_hull(a) == in_interior_of_hull(b));
    }
}

} // TEST_SUITE
