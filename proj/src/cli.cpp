#include "inclusionkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "inclusionkit/faults.hpp"
#include "inclusionkit/io.hpp"

namespace inclusionkit {

namespace {

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, path + ": cannot write");
    f << text;
    if (!f) throw Error(ErrorCode::InvalidInput, path + ": write failed");
}

Rat parse_delta(const std::string& text)
{
    Rat d;
    try {
        d = parse_rat(text);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidInput, "--delta: expected a rational p/q, got \"" + text + "\"");
    }
    if (sgn(d) <= 0) throw Error(ErrorCode::InvalidInput, "--delta must be positive");
    return d;
}

int exit_for(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::Feasible: return exit_ok;
    case VerdictStatus::Infeasible: return exit_infeasible;
    case VerdictStatus::OutOfScope: return exit_out_of_scope;
    }
    return exit_invalid;
}

int cmd_check(const std::string& problem_path, std::ostream& out)
{
    const InclusionProblem problem = problem_from_json(load_json_file(problem_path));
    const Verdict v = decide(problem);
    out << verdict_to_json(v).dump(2) << "\n";
    return exit_for(v.status);
}

int cmd_construct(const std::string& problem_path, const std::string& delta_text, const std::string& out_path,
                  const std::string& obj_path, const std::string& csv_path, std::ostream& out, std::ostream& err)
{
    const Rat delta = parse_delta(delta_text);
    const InclusionProblem problem = problem_from_json(load_json_file(problem_path));
    const Verdict v = decide(problem);
    if (v.status != VerdictStatus::Feasible) {
        err << "problem is " << to_string(v.status) << (v.reason ? std::string(": ") + std::string(to_string(*v.reason)) : "")
            << "; no solution written\n";
        out << verdict_to_json(v).dump(2) << "\n";
        return exit_for(v.status);
    }
    const PiecewiseAffine pw = assemble_solution(v, problem.domain, delta);
    if (!obj_path.empty() && problem.n > 2) throw Error(ErrorCode::InvalidInput, "--obj needs n <= 2");
    write_file(out_path, solution_to_json(pw).dump(1) + "\n");
    if (!obj_path.empty()) write_file(obj_path, solution_to_obj(pw));
    if (!csv_path.empty()) write_file(csv_path, solution_to_csv(pw));
    out << Json{{"copies", pw.copies.size()},
                {"cells", pw.cells.size()},
                {"residual_measure", to_json(pw.residual_measure)},
                {"unused_factors", pw.unused_factors.size()},
                {"out", out_path}}
               .dump(2)
        << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& problem_path, const std::string& solution_path, const std::string& delta_text,
               std::size_t faults, std::uint64_t seed, std::ostream& out)
{
    const Rat delta = parse_delta(delta_text);
    const InclusionProblem problem = problem_from_json(load_json_file(problem_path));
    const Json solution_json = load_json_file(solution_path);
    const PiecewiseAffine pw = solution_from_json(solution_json);
    const Report report = verify_solution(pw, problem, delta);
    if (faults == 0 || !report.pass()) {
        out << report_to_json(report).dump(2) << "\n";
        return report.pass() ? exit_ok : exit_verify_failed;
    }

    // Fault harness: every corrupted copy of the solution must be rejected.
    std::mt19937_64 rng(seed);
    Json trials = Json::array();
    std::size_t rejected = 0;
    for (std::size_t t = 0; t < faults; ++t) {
        Json corrupted = solution_json;
        const std::string what = inject_fault(corrupted, rng);
        Json entry{{"fault", what}};
        try {
            const Report r = verify_solution(solution_from_json(corrupted), problem, delta);
            entry["rejected"] = !r.pass();
            entry["failing"] = r.failing();
        } catch (const Error& e) {
            entry["rejected"] = true;
            entry["failing"] = Json::array({"schema"});
            entry["error"] = e.what();
        }
        if (entry["rejected"].get<bool>()) ++rejected;
        trials.push_back(std::move(entry));
    }
    out << Json{{"pass", true}, {"seed", seed}, {"faults", trials}, {"rejected", rejected}, {"injected", faults}}.dump(2) << "\n";
    return rejected == faults ? exit_ok : exit_verify_failed;
}

int cmd_export(const std::string& solution_path, const std::string& obj_path, const std::string& csv_path, std::ostream& out)
{
    if (obj_path.empty() && csv_path.empty()) throw Error(ErrorCode::InvalidInput, "export needs --obj or --csv");
    const PiecewiseAffine pw = solution_from_json(load_json_file(solution_path));
    if (!obj_path.empty()) write_file(obj_path, solution_to_obj(pw));
    if (!csv_path.empty()) write_file(csv_path, solution_to_csv(pw));
    out << Json{{"cells", pw.cells.size()}, {"obj", obj_path}, {"csv", csv_path}}.dump(2) << "\n";
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact decision, construction and verification for first-order differential inclusions", "inclusionkit"};
    app.require_subcommand(1);

    std::string problem, solution, delta, out_path, obj, csv;
    std::size_t faults = 0;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "Decide solvability and print the verdict");
    check->add_option("problem", problem, "Problem JSON")->required();

    auto* construct = app.add_subcommand("construct", "Build a piecewise-affine solution");
    construct->add_option("problem", problem, "Problem JSON")->required();
    construct->add_option("--delta", delta, "Uncovered measure fraction, a rational p/q")->required();
    construct->add_option("--out", out_path, "Solution JSON to write")->required();
    construct->add_option("--obj", obj, "Also write the graph of v as OBJ (n <= 2)");
    construct->add_option("--csv", csv, "Also write the cell table as CSV");

    auto* verify = app.add_subcommand("verify", "Check a solution against a problem");
    verify->add_option("problem", problem, "Problem JSON")->required();
    verify->add_option("solution", solution, "Solution JSON")->required();
    verify->add_option("--delta", delta, "Uncovered measure fraction, a rational p/q")->required();
    verify->add_option("--faults", faults, "Also inject this many random faults and require each to be rejected");
    verify->add_option("--seed", seed, "Seed for --faults");

    auto* exp = app.add_subcommand("export", "Convert a solution to OBJ or CSV");
    exp->add_option("solution", solution, "Solution JSON")->required();
    exp->add_option("--obj", obj, "OBJ file to write (n <= 2)");
    exp->add_option("--csv", csv, "CSV file to write");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*check) return cmd_check(problem, out);
        if (*construct) return cmd_construct(problem, delta, out_path, obj, csv, out, err);
        if (*verify) return cmd_verify(problem, solution, delta, faults, seed, out);
        if (*exp) return cmd_export(solution, obj, csv, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? exit_budget : exit_invalid;
    }
    return exit_usage;
}

} // namespace inclusionkit
