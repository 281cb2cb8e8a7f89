// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "inclusionkit/builder.hpp"
#include "inclusionkit/cli.hpp"
#include "inclusionkit/faults.hpp"
#include "inclusionkit/io.hpp"
#include "inclusionkit/verify.hpp"
#include "support.hpp"

using namespace inclusionkit;
using testkit::Gen;
using testkit::q;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Polytope unit_box(std::size_t n) { return Polytope::box(zeros(n), RatVec(n, Rat(1))); }

std::vector<RatMat> with_negatives(std::vector<RatMat> e)
{
    const std::size_t k = e.size();
    for (std::size_t i = 0; i < k; ++i) e.push_back(Rat(-1) * e[i]);
    return e;
}

RatVec positive_direction(Gen& g, std::size_t m)
{
    RatVec b = g.nonzero_vec(m, 5);
    return sgn(b[first_nonzero(b)]) < 0 ? scale(b, -1) : b;
}

// Spanning F with a negative positive combination appended, so 0 in int co F.
std::vector<RatVec> interior_factors(Gen& g, std::size_t n)
{
    std::vector<RatVec> f;
    while (testkit::oracle_rank(f) < n) {
        f.push_back(g.nonzero_vec(n, 3));
        if (testkit::oracle_rank(f) < f.size()) f.pop_back();
    }
    for (long extra = g.integer(0, 2); extra > 0; --extra) f.push_back(g.nonzero_vec(n, 3));
    RatVec s = zeros(n);
    for (const auto& x : f) s = add(s, scale(x, g.positive_rat(2)));
    if (is_zero(s)) s = f[0];
    f.push_back(scale(s, -1));
    return f;
}

// ---------------------------------------------------------------------------

Outcome rank_lemma()
{
    Outcome o;
    Gen g(1001);
    const auto t0 = Clock::now();
    for (int it = 0; it < 500; ++it) {
        const auto m = static_cast<std::size_t>(g.integer(1, 4));
        const auto n = static_cast<std::size_t>(g.integer(1, 4));
        const auto p = static_cast<std::size_t>(g.integer(1, static_cast<long>(std::min(m, n))));
        std::vector<RatVec> a;
        while (a.size() < p) {
            a.push_back(g.nonzero_vec(n));
            if (testkit::oracle_rank(a) < a.size()) a.pop_back();
        }
        std::vector<RatMat> mats;
        std::vector<RatVec> flat;
        for (std::size_t i = 0; i < p; ++i) {
            mats.push_back(tensor(g.nonzero_vec(m), a[i]));
            flat.push_back(mats.back().flat());
        }
        const std::size_t lib = rank(RatMat::from_rows(flat));
        const std::size_t oracle = testkit::oracle_rank(flat);
        if (lib != p || oracle != p || matrix_span(m, n, mats).dim() != p)
            o.fail("instance " + std::to_string(it) + ": rank " + std::to_string(lib) + ", oracle " + std::to_string(oracle) +
                   ", expected " + std::to_string(p));
    }
    const double t = seconds_since(t0);
    if (t >= 5) o.fail("runtime " + std::to_string(t) + " s");
    if (o.pass) o.detail = "500 instances, " + std::to_string(t) + " s";
    return o;
}

Outcome ri_oracle()
{
    Outcome o;
    Gen g(1002);
    const auto t0 = Clock::now();
    std::size_t inside = 0;
    for (int it = 0; it < 300; ++it) {
        const auto k = static_cast<std::size_t>(g.integer(1, 5));
        std::vector<RatVec> p;
        for (std::size_t i = 0; i < k; ++i) {
            // Mix in negative multiples of earlier points so that both answers are common.
            if (i > 0 && g.integer(0, 2) == 0)
                p.push_back(scale(p[static_cast<std::size_t>(g.integer(0, static_cast<long>(i) - 1))], -g.positive_rat(2)));
            else
                p.push_back(g.vec(2, 2));
        }
        const PointSet s(2, p);
        const bool lib = in_relative_interior_of_hull(s).has_value();
        const bool oracle = testkit::oracle_zero_in_ri(s.points());
        if (lib != oracle) o.fail("disagreement on instance " + std::to_string(it));
        inside += oracle;
    }
    const double t = seconds_since(t0);
    if (t >= 30) o.fail("runtime " + std::to_string(t) + " s");
    if (o.pass) o.detail = "300 instances, " + std::to_string(inside) + " with 0 in ri, " + std::to_string(t) + " s";
    return o;
}

Outcome dichotomy()
{
    Outcome o;
    Gen g(1003);
    std::size_t certs = 0;
    for (int it = 0; it < 500; ++it) {
        const auto m = static_cast<std::size_t>(g.integer(1, 3));
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const auto k = static_cast<std::size_t>(g.integer(1, 8));
        std::vector<RatVec> e;
        for (std::size_t i = 0; i < k; ++i) e.push_back(g.nonzero_vec(m * n, 3));
        if (k > 1 && g.coin()) {
            RatVec s = zeros(m * n);
            for (std::size_t i = 0; i + 1 < k; ++i) s = add(s, scale(e[i], g.positive_rat(2)));
            if (!is_zero(s)) e.back() = scale(s, -1);
        }
        const PointSet set(m * n, e);
        const OriginAnalysis a = analyze_origin(set);
        const std::string tag = "instance " + std::to_string(it) + ": ";
        if (a.certificate.has_value() == a.separating.has_value()) {
            o.fail(tag + "not exactly one witness");
            continue;
        }
        if (a.certificate) {
            ++certs;
            const auto& c = *a.certificate;
            Rat total = 0;
            RatVec bary = zeros(m * n);
            bool positive = c.indices.size() == c.weights.size();
            for (std::size_t i = 0; i < c.weights.size() && positive; ++i) {
                positive = sgn(c.weights[i]) > 0 && c.indices[i] < set.size();
                total += c.weights[i];
                for (std::size_t d = 0; d < m * n && positive; ++d) bary[d] += c.weights[i] * set[c.indices[i]][d];
            }
            std::vector<RatVec> chosen;
            for (const auto i : c.indices) chosen.push_back(set[i]);
            if (!positive || total != 1 || !std::all_of(bary.begin(), bary.end(), [](const Rat& x) { return sgn(x) == 0; }) ||
                testkit::oracle_rank(chosen) != testkit::oracle_rank(set.points()))
                o.fail(tag + "certificate does not re-verify");
        } else {
            const RatVec& p = *a.separating;
            bool ok = !std::all_of(p.begin(), p.end(), [](const Rat& x) { return sgn(x) == 0; });
            for (const auto& z : set.points()) ok = ok && sgn(testkit::oracle_dot(z, p)) >= 0;
            // P in span E: appending it does not raise the rank.
            std::vector<RatVec> rows = set.points();
            const std::size_t r = testkit::oracle_rank(rows);
            rows.push_back(p);
            ok = ok && testkit::oracle_rank(rows) == r;
            if (!ok) o.fail(tag + "separating functional does not re-verify");
        }
    }
    if (o.pass) o.detail = "500 instances, " + std::to_string(certs) + " certificates, " + std::to_string(500 - certs) + " separators";
    return o;
}

Outcome gradient_round_trip()
{
    Outcome o;
    Gen g(1004);
    for (int it = 0; it < 100; ++it) {
        const auto m = static_cast<std::size_t>(g.integer(1, 3));
        const auto n = static_cast<std::size_t>(g.integer(1, 3));
        const RatVec b = positive_direction(g, m);
        const auto f = interior_factors(g, n);
        std::vector<RatMat> e;
        for (const auto& x : f) e.push_back(tensor(b, x));
        const Verdict v = decide(InclusionProblem::make(OperatorKind::Gradient, m, n, e, unit_box(n)));
        const std::string tag = "feasible instance " + std::to_string(it) + ": ";
        if (v.status != VerdictStatus::Feasible) {
            o.fail(tag + "not decided Feasible");
            continue;
        }
        // b' = lambda b with lambda > 0, and then F' = F / lambda.
        const std::size_t i0 = first_nonzero(b);
        const Rat lambda = (*v.b)[i0] / b[i0];
        std::vector<RatVec> expected;
        for (const auto& x : f) expected.push_back(scale(x, 1 / lambda));
        if (sgn(lambda) <= 0 || *v.b != scale(b, lambda) || !v.factors->same_set(PointSet(n, expected)))
            o.fail(tag + "recovered b or F differ");
    }
    for (int it = 0; it < 100; ++it) {
        const auto m = static_cast<std::size_t>(g.integer(2, 3));
        const auto n = static_cast<std::size_t>(g.integer(2, 3));
        const RatVec b = positive_direction(g, m);
        RatVec b2;
        do b2 = g.nonzero_vec(m, 5);
        while (testkit::oracle_rank({b, b2}) < 2);
        std::vector<RatVec> f;
        while (f.size() < n) {
            f.push_back(g.nonzero_vec(n, 3));
            if (testkit::oracle_rank(f) < f.size()) f.pop_back();
        }
        std::vector<RatMat> e;
        RatVec closing = zeros(m * n);
        for (std::size_t i = 0; i < n; ++i) {
            e.push_back(tensor(i + 1 < n ? b : b2, f[i]));
            closing = add(closing, scale(e.back().flat(), g.positive_rat(2)));
        }
        e.push_back(RatMat(m, n, scale(closing, -1)));
        const Verdict v = decide(InclusionProblem::make(OperatorKind::Gradient, m, n, e, unit_box(n)));
        if (v.status != VerdictStatus::Infeasible || v.reason != InfeasibleReason::SpanNotRankOne)
            o.fail("perturbed instance " + std::to_string(it) + ": not Infeasible(SpanNotRankOne)");
    }
    if (o.pass) o.detail = "100 feasible and 100 perturbed instances";
    return o;
}

Outcome symmetric_criterion()
{
    Outcome o;
    Gen g(1005);
    for (int it = 0; it < 100; ++it) {
        const auto n = static_cast<std::size_t>(g.integer(1, 4));
        const RatVec b = g.nonzero_vec(n, 5);
        std::vector<RatMat> e;
        for (std::size_t i = 0; i < n; ++i) e.push_back(sym_product(b, unit_vector(n, i)));
        const InclusionProblem p = InclusionProblem::make(OperatorKind::SymmetrizedGradient, n, n, with_negatives(e), unit_box(n));
        const Verdict v = decide(p);
        // R^n v b spanned independently of the library: b v e_i for each i.
        std::vector<RatVec> slice;
        for (std::size_t i = 0; i < n; ++i) slice.push_back(sym_product(unit_vector(n, i), b).flat());
        if (v.status != VerdictStatus::Feasible || !subspace_equal(p.targets.span(), Subspace::span(n * n, slice)) ||
            testkit::oracle_rank(slice) != n)
            o.fail("instance " + std::to_string(it) + ": not Feasible with span E = R^n v b");
    }
    const RatMat w1(2, 2, {Rat(2), Rat(1), Rat(1), Rat(0)}), w2(2, 2, {Rat(0), Rat(0), Rat(0), Rat(2)});
    const Verdict w = decide(InclusionProblem::make(OperatorKind::SymmetrizedGradient, 2, 2, with_negatives({w1, w2}), unit_box(2)));
    if (w.status != VerdictStatus::Infeasible || w.reason != InfeasibleReason::CommonKernelTrivial || !w.complement ||
        w.complement->dim() != 1 || testkit::oracle_rank({w.complement->basis()[0], {Rat(1), Rat(-1), Rat(-1), Rat(0)}}) != 1)
        o.fail("Example W: expected Infeasible(CommonKernelTrivial) with complement [[1,-1],[-1,0]]");
    if (o.pass) o.detail = "100 slices feasible, W rejected with complement [[1,-1],[-1,0]]";
    return o;
}

// Builds, round-trips through JSON and verifies; checks gradients in F and v = 0
// on the boundary of every copy.
void check_construction(Outcome& o, const std::string& label, const InclusionProblem& problem, const Rat& delta,
                        const std::vector<RatVec>& f, double limit)
{
    const auto t0 = Clock::now();
    const Verdict v = decide(problem);
    if (v.status != VerdictStatus::Feasible) {
        o.fail(label + ": not feasible");
        return;
    }
    const PiecewiseAffine built = assemble_solution(v, problem.domain, delta);
    const PiecewiseAffine pw = solution_from_json(Json::parse(solution_to_json(built).dump()));
    const Report report = verify_solution(pw, problem, delta);
    const double t = seconds_since(t0);
    if (!report.pass()) o.fail(label + ": verify failed");

    // Coverage from the copies alone.
    const Rat base_measure = measure(pw.base);
    Rat covered = 0;
    for (const auto& c : pw.copies) {
        Rat sn = 1;
        for (std::size_t d = 0; d < problem.n; ++d) sn *= c.scale;
        covered += sn * base_measure;
    }
    if (covered != report.covered_measure || covered < (1 - delta) * measure(problem.domain)) o.fail(label + ": coverage below 1 - delta");

    const PointSet fs(problem.n, f);
    for (const auto& cell : pw.cells) {
        if (!fs.contains(cell.gradient)) o.fail(label + ": gradient outside F");
        const CoverCopy& c = pw.copies[cell.copy];
        for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
            const RatVec& x = cell.vertices[k];
            if (testkit::oracle_dot(cell.gradient, x) + cell.offset != cell.values[k]) o.fail(label + ": value off its affine piece");
            bool on_boundary = false;
            for (const auto& h : pw.base.halfspaces())
                on_boundary = on_boundary || testkit::oracle_dot(h.normal, x) == testkit::oracle_dot(h.normal, c.center) + c.scale * h.offset;
            if (on_boundary && sgn(cell.values[k]) != 0) o.fail(label + ": nonzero boundary value");
        }
    }
    if (t >= limit) o.fail(label + ": runtime " + std::to_string(t) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + label + " " + std::to_string(pw.copies.size()) + " copies, covered " +
                to_string(covered) + ", " + std::to_string(t) + " s";
}

Outcome construction()
{
    Outcome o;
    const InclusionProblem line = InclusionProblem::make(OperatorKind::Gradient, 1, 1, {RatMat(1, 1, {Rat(1)}), RatMat(1, 1, {Rat(-1)})},
                                                         unit_box(1));
    check_construction(o, "interval", line, q(1, 100), {{Rat(1)}, {Rat(-1)}}, 10);

    const RatVec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    std::vector<RatMat> e;
    const std::vector<RatVec> f{e1, e2, scale(e1, -1), scale(e2, -1)};
    for (const auto& x : f) e.push_back(tensor({Rat(1)}, x));
    const InclusionProblem square = InclusionProblem::make(OperatorKind::Gradient, 1, 2, e, unit_box(2));
    check_construction(o, "square", square, q(1, 10), f, 60);
    return o;
}

Outcome symmetrized_mass()
{
    Outcome o;
    const RatVec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    const InclusionProblem p = InclusionProblem::make(OperatorKind::SymmetrizedGradient, 2, 2,
                                                      with_negatives({sym_product(e1, e1), sym_product(e1, e2)}), unit_box(2));
    const Rat delta = q(1, 10);
    const Verdict v = decide(p);
    if (v.status != VerdictStatus::Feasible) {
        o.fail("example not feasible");
        return o;
    }
    const PiecewiseAffine pw = assemble_solution(v, p.domain, delta);
    const Rat iv = integrate_scalar(pw);
    const RatVec iu = integrate(pw);
    // Each copy carries the pyramid over s[-1,1]^2: height s, base area 4 s^2.
    Rat oracle = 0;
    for (const auto& c : pw.copies) oracle += c.scale * c.scale * c.scale * q(4, 3);
    if (iu != scale(pw.direction, iv)) o.fail("integral of u is not (integral of v) b");
    if (sgn(iv) <= 0 || iv != oracle) o.fail("integral of v is " + to_string(iv) + ", expected " + to_string(oracle));
    if (!verify_solution(pw, p, delta).pass()) o.fail("verify failed");
    if (o.pass) o.detail = "integral v = " + to_string(iv) + ", integral u = (" + to_string(iu[0]) + ", " + to_string(iu[1]) + ")";
    return o;
}

Outcome fault_detection()
{
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("inclusionkit_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream((dir / name).string()) << text;
        return (dir / name).string();
    };

    struct Case {
        const char* problem;
        const char* delta;
    };
    const Case cases[] = {
        {R"({"operator":"gradient","m":1,"n":1,"E":[["1"],["-1"]],"domain":{"box":{"low":["0"],"high":["1"]}}})", "1/10"},
        {R"({"operator":"gradient","m":1,"n":2,"E":[["1","0"],["0","1"],["-1","-1"]]})", "1/4"},
        {R"({"operator":"symmetrized","m":2,"n":2,"E":[["2","0","0","0"],["0","1","1","0"],["-2","0","0","0"],["0","-1","-1","0"]]})", "1/4"},
        {R"({"operator":"gradient","m":2,"n":2,"E":[["1","0","2","0"],["0","1","0","2"],["-1","0","-2","0"],["0","-1","0","-2"]],
            "domain":{"halfspaces":{"normals":[["-1","0"],["0","-1"],["1","1"]],"offsets":["0","0","1"]}}})", "1/2"},
    };

    std::mt19937_64 rng(1008);
    std::size_t rejected = 0, trials = 0;
    for (std::size_t ci = 0; ci < std::size(cases); ++ci) {
        const std::string p = write("p" + std::to_string(ci) + ".json", cases[ci].problem);
        const std::string sol = (dir / ("s" + std::to_string(ci) + ".json")).string();
        std::ostringstream out, err;
        if (run_cli({"construct", p, "--delta", cases[ci].delta, "--out", sol}, out, err) != exit_ok) {
            o.fail("case " + std::to_string(ci) + ": construct failed: " + err.str());
            continue;
        }
        std::ostringstream vout, verr;
        if (run_cli({"verify", p, sol, "--delta", cases[ci].delta}, vout, verr) != exit_ok) {
            o.fail("case " + std::to_string(ci) + ": clean solution rejected");
            continue;
        }
        const Json clean = load_json_file(sol);
        for (int t = 0; t < 25; ++t) {
            Json corrupted = clean;
            const std::string what = inject_fault(corrupted, rng);
            const std::string bad = write("bad.json", corrupted.dump());
            std::ostringstream fout, ferr;
            const int code = run_cli({"verify", p, bad, "--delta", cases[ci].delta}, fout, ferr);
            ++trials;
            bool named = false;
            if (code == exit_verify_failed) {
                const Json r = Json::parse(fout.str());
                named = r["pass"] == false && !r["failing"].empty();
            }
            if (named) ++rejected;
            else o.fail("case " + std::to_string(ci) + " fault \"" + what + "\": exit " + std::to_string(code) + " " + ferr.str());
        }
    }
    fs::remove_all(dir);
    o.detail = std::to_string(rejected) + "/" + std::to_string(trials) + " faults rejected with a named check" +
               (o.pass ? "" : "; first miss: " + o.detail);
    if (trials != 100) o.fail("expected 100 trials");
    return o;
}

Outcome pyramid_integral()
{
    Outcome o;
    const RatVec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    const Pyramid p = build_pyramid(PointSet(2, {e1, e2, scale(e1, -1), scale(e2, -1)}));
    const Rat i = integrate_scalar(p.function);
    // Cone of height 1 over the base [-1,1]^2 of area 4.
    const Rat analytic = q(4) * 1 / 3;
    // P contains the corners of [-1,1]^2 and has its area, so P = [-1,1]^2.
    bool corners = true;
    for (const long x : {-1, 1})
        for (const long y : {-1, 1}) corners = corners && p.spec.base.contains({Rat(x), Rat(y)});
    if (!corners || measure(p.spec.base) != 4) o.fail("P is not [-1,1]^2");
    if (i != analytic) o.fail("integral " + to_string(i));
    if (o.pass) o.detail = "integral = " + to_string(i);
    return o;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"rank of b_i (x) a_i equals p", rank_lemma},
        {"LP relative interior test matches the brute-force oracle", ri_oracle},
        {"exactly one re-verified witness", dichotomy},
        {"gradient round trip and rank-one perturbations", gradient_round_trip},
        {"symmetric slices and the W counterexample", symmetric_criterion},
        {"constructed solutions verify", construction},
        {"symmetrized solution has nonzero mean", symmetrized_mass},
        {"injected faults are rejected", fault_detection},
        {"square pyramid integral is 4/3", pyramid_integral},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s (%s)\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
