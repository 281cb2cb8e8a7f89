#include "inclusionkit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace inclusionkit {

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& msg)
{
    throw Error(ErrorCode::Malformed, (pointer.empty() ? "/" : pointer) + ": " + msg);
}

const Json& member(const Json& j, const std::string& pointer, const char* key)
{
    if (!j.is_object()) schema(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(pointer, std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array_at(const Json& j, const std::string& pointer)
{
    if (!j.is_array()) schema(pointer, "expected an array");
    return j;
}

std::size_t size_from_json(const Json& j, const std::string& pointer)
{
    if (!j.is_number_integer()) schema(pointer, "expected a positive integer");
    const auto v = j.get<long long>();
    if (v <= 0) schema(pointer, "expected a positive integer");
    return static_cast<std::size_t>(v);
}

std::size_t index_from_json(const Json& j, const std::string& pointer)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) schema(pointer, "expected a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

std::string at(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }
std::string at(const std::string& pointer, const char* key) { return pointer + "/" + key; }

Json vectors_to_json(const std::vector<RatVec>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

std::vector<RatVec> vectors_from_json(const Json& j, const std::string& pointer, std::size_t dim)
{
    std::vector<RatVec> out;
    const Json& arr = array_at(j, pointer);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(vec_from_json(arr[i], at(pointer, i), dim));
    return out;
}

Json halfspaces_to_json(const std::vector<HalfSpace>& hs)
{
    Json normals = Json::array(), offsets = Json::array();
    for (const auto& h : hs) {
        normals.push_back(to_json(h.normal));
        offsets.push_back(to_json(h.offset));
    }
    return Json{{"normals", normals}, {"offsets", offsets}};
}

std::vector<HalfSpace> halfspaces_from_json(const Json& j, const std::string& pointer, std::size_t dim)
{
    const auto normals = vectors_from_json(member(j, pointer, "normals"), at(pointer, "normals"), dim);
    const RatVec offsets = vec_from_json(member(j, pointer, "offsets"), at(pointer, "offsets"), normals.size());
    if (normals.empty()) schema(at(pointer, "normals"), "expected at least one half space");
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < normals.size(); ++i) hs.push_back({normals[i], offsets[i]});
    return hs;
}

OperatorKind operator_from_json(const Json& j, const std::string& pointer)
{
    if (j == "gradient") return OperatorKind::Gradient;
    if (j == "symmetrized") return OperatorKind::SymmetrizedGradient;
    schema(pointer, "operator must be \"gradient\" or \"symmetrized\"");
}

RatMat matrix_from_json(const Json& j, const std::string& pointer, std::size_t m, std::size_t n)
{
    const Json& arr = array_at(j, pointer);
    if (!arr.empty() && arr[0].is_array()) {
        if (arr.size() != m) schema(pointer, "expected " + std::to_string(m) + " rows");
        RatMat out(m, n);
        for (std::size_t r = 0; r < m; ++r) {
            const RatVec row = vec_from_json(arr[r], at(pointer, r), n);
            for (std::size_t c = 0; c < n; ++c) out(r, c) = row[c];
        }
        return out;
    }
    return RatMat(m, n, vec_from_json(arr, pointer, m * n));
}

std::string fmt_double(const Rat& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.get_d());
    return buf;
}

} // namespace

Json to_json(const Rat& value) { return to_string(value); }

Json to_json(const RatVec& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Rat rat_from_json(const Json& j, const std::string& pointer)
{
    if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Rat(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_float()) schema(pointer, "floats are not accepted; write rationals as \"p/q\" strings");
    if (!j.is_string()) schema(pointer, "expected a rational string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
        schema(pointer, e.what());
    }
}

RatVec vec_from_json(const Json& j, const std::string& pointer, std::size_t expected_size)
{
    const Json& arr = array_at(j, pointer);
    if (arr.size() != expected_size) schema(pointer, "expected " + std::to_string(expected_size) + " entries");
    RatVec out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rat_from_json(arr[i], at(pointer, i)));
    return out;
}

Json polytope_to_json(const Polytope& p)
{
    if (p.is_box()) return Json{{"box", Json{{"low", to_json(p.low())}, {"high", to_json(p.high())}}}};
    return Json{{"halfspaces", halfspaces_to_json(p.halfspaces())}};
}

Polytope polytope_from_json(const Json& j, const std::string& pointer, std::size_t dim)
{
    if (!j.is_object()) schema(pointer, "expected an object");
    try {
        if (j.contains("box")) {
            const std::string p = at(pointer, "box");
            const Json& box = j["box"];
            return Polytope::box(vec_from_json(member(box, p, "low"), at(p, "low"), dim),
                                 vec_from_json(member(box, p, "high"), at(p, "high"), dim));
        }
        if (j.contains("halfspaces")) {
            Polytope out = Polytope::from_halfspaces(halfspaces_from_json(j["halfspaces"], at(pointer, "halfspaces"), dim));
            return out;
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Malformed) throw;
        schema(pointer, e.what());
    }
    schema(pointer, "expected \"box\" or \"halfspaces\"");
}

InclusionProblem problem_from_json(const Json& j)
{
    if (!j.is_object()) schema("", "expected an object");
    const OperatorKind op = operator_from_json(member(j, "", "operator"), "/operator");
    const std::size_t m = size_from_json(member(j, "", "m"), "/m");
    const std::size_t n = size_from_json(member(j, "", "n"), "/n");
    const Json& e = array_at(member(j, "", "E"), "/E");
    if (e.empty()) schema("/E", "expected at least one matrix");
    std::vector<RatMat> targets;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string p = at("/E", i);
        targets.push_back(matrix_from_json(e[i], p, m, n));
        if (targets.back().is_zero()) throw Error(ErrorCode::InvalidInput, p + ": the zero matrix is not allowed in E");
    }
    Polytope domain;
    if (j.contains("domain")) {
        domain = polytope_from_json(j["domain"], "/domain", n);
        try {
            domain.validate();
        } catch (const Error& err) {
            schema("/domain", err.what());
        }
    } else {
        domain = Polytope::box(zeros(n), RatVec(n, Rat(1)));
    }
    return InclusionProblem::make(op, m, n, targets, std::move(domain));
}

Json problem_to_json(const InclusionProblem& p)
{
    Json e = Json::array();
    for (const auto& t : p.targets.points()) e.push_back(to_json(t));
    return Json{{"operator", std::string(to_string(p.op))},
                {"m", p.m},
                {"n", p.n},
                {"E", e},
                {"domain", polytope_to_json(p.domain)}};
}

Json verdict_to_json(const Verdict& v)
{
    Json out{{"status", std::string(to_string(v.status))},
             {"operator", std::string(to_string(v.op))},
             {"m", v.m},
             {"n", v.n},
             {"span_dim", v.span_dim},
             {"b", nullptr},
             {"F", nullptr},
             {"weights", nullptr},
             {"reason", nullptr},
             {"P", nullptr},
             {"complement", nullptr}};
    if (v.b) out["b"] = to_json(*v.b);
    if (v.factors) out["F"] = vectors_to_json(v.factors->points());
    if (v.certificate) {
        Json w = Json::array();
        for (const auto& t : v.certificate->weights) w.push_back(to_json(t));
        out["weights"] = w;
    }
    if (v.reason) out["reason"] = std::string(to_string(*v.reason));
    if (v.separating) out["P"] = to_json(*v.separating);
    if (v.complement) out["complement"] = vectors_to_json(v.complement->basis());
    return out;
}

Json solution_to_json(const PiecewiseAffine& pw)
{
    Json copies = Json::array();
    for (const auto& c : pw.copies) copies.push_back(Json{{"center", to_json(c.center)}, {"scale", to_json(c.scale)}});
    Json cells = Json::array();
    for (const auto& cell : pw.cells)
        cells.push_back(Json{{"halfspaces", halfspaces_to_json(cell.cell.halfspaces())},
                             {"vertices", vectors_to_json(cell.vertices)},
                             {"values", to_json(cell.values)},
                             {"gradient", to_json(cell.gradient)},
                             {"offset", to_json(cell.offset)},
                             {"copy", cell.copy}});
    return Json{{"operator", std::string(to_string(pw.op))},
                {"b", to_json(pw.direction)},
                {"omega", polytope_to_json(pw.domain)},
                {"base", polytope_to_json(pw.base)},
                {"copies", copies},
                {"cells", cells},
                {"residual_measure", to_json(pw.residual_measure)},
                {"unused_factors", vectors_to_json(pw.unused_factors)}};
}

PiecewiseAffine solution_from_json(const Json& j)
{
    if (!j.is_object()) schema("", "expected an object");
    PiecewiseAffine pw;
    pw.op = operator_from_json(member(j, "", "operator"), "/operator");
    const Json& b = array_at(member(j, "", "b"), "/b");
    pw.direction = vec_from_json(b, "/b", b.size());
    if (pw.direction.empty()) schema("/b", "expected a nonempty vector");

    // The domain fixes n.
    const Json& omega = member(j, "", "omega");
    std::size_t n = 0;
    if (omega.is_object() && omega.contains("box")) {
        const Json& low = member(omega["box"], "/omega/box", "low");
        n = array_at(low, "/omega/box/low").size();
    } else if (omega.is_object() && omega.contains("halfspaces")) {
        const Json& normals = array_at(member(omega["halfspaces"], "/omega/halfspaces", "normals"), "/omega/halfspaces/normals");
        if (normals.empty()) schema("/omega/halfspaces/normals", "expected at least one half space");
        n = array_at(normals[0], "/omega/halfspaces/normals/0").size();
    }
    if (n == 0) schema("/omega", "expected \"box\" or \"halfspaces\" of positive dimension");
    pw.domain = polytope_from_json(omega, "/omega", n);
    pw.base = polytope_from_json(member(j, "", "base"), "/base", n);

    const Json& copies = array_at(member(j, "", "copies"), "/copies");
    for (std::size_t i = 0; i < copies.size(); ++i) {
        const std::string p = at("/copies", i);
        pw.copies.push_back({vec_from_json(member(copies[i], p, "center"), at(p, "center"), n),
                             rat_from_json(member(copies[i], p, "scale"), at(p, "scale"))});
    }
    const Json& cells = array_at(member(j, "", "cells"), "/cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string p = at("/cells", i);
        const Json& c = cells[i];
        AffinePiece piece;
        try {
            piece.cell = Polytope::from_halfspaces(halfspaces_from_json(member(c, p, "halfspaces"), at(p, "halfspaces"), n));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Malformed) throw;
            schema(at(p, "halfspaces"), e.what());
        }
        piece.vertices = vectors_from_json(member(c, p, "vertices"), at(p, "vertices"), n);
        piece.values = vec_from_json(member(c, p, "values"), at(p, "values"), piece.vertices.size());
        piece.gradient = vec_from_json(member(c, p, "gradient"), at(p, "gradient"), n);
        piece.offset = rat_from_json(member(c, p, "offset"), at(p, "offset"));
        piece.copy = index_from_json(member(c, p, "copy"), at(p, "copy"));
        pw.cells.push_back(std::move(piece));
    }
    pw.residual_measure = rat_from_json(member(j, "", "residual_measure"), "/residual_measure");
    if (j.contains("unused_factors")) pw.unused_factors = vectors_from_json(j["unused_factors"], "/unused_factors", n);
    return pw;
}

Json report_to_json(const Report& r)
{
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = Json{{"pass", c.passed()}, {"failures", c.failures}};
    return Json{{"pass", r.pass()},
                {"failing", r.failing()},
                {"checks", checks},
                {"domain_measure", to_json(r.domain_measure)},
                {"covered_measure", to_json(r.covered_measure)},
                {"integral", Json{{"v", to_json(r.scalar_integral)}, {"u", to_json(r.integral)}, {"nonzero", r.integral_nonzero}}}};
}

std::string solution_to_obj(const PiecewiseAffine& pw)
{
    const std::size_t n = pw.domain.dim();
    if (n > 2) throw Error(ErrorCode::InvalidInput, "OBJ export needs n <= 2");
    std::ostringstream out;
    out << "# graph of v, " << pw.cells.size() << " cells\n";
    std::size_t next = 1;
    for (std::size_t i = 0; i < pw.cells.size(); ++i) {
        const AffinePiece& cell = pw.cells[i];
        out << "g cell" << i << "\n";
        std::vector<std::size_t> order(cell.vertices.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        if (n == 1) {
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cell.vertices[a][0] < cell.vertices[b][0]; });
        } else {
            // Counterclockwise around the vertex average.
            double cx = 0, cy = 0;
            for (const auto& v : cell.vertices) {
                cx += v[0].get_d();
                cy += v[1].get_d();
            }
            cx /= static_cast<double>(cell.vertices.size());
            cy /= static_cast<double>(cell.vertices.size());
            auto angle = [&](std::size_t k) { return std::atan2(cell.vertices[k][1].get_d() - cy, cell.vertices[k][0].get_d() - cx); };
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
        }
        for (auto k : order) {
            const RatVec& v = cell.vertices[k];
            out << "v " << fmt_double(v[0]) << " " << (n == 2 ? fmt_double(v[1]) : fmt_double(cell.values[k])) << " "
                << (n == 2 ? fmt_double(cell.values[k]) : std::string("0")) << "\n";
        }
        out << (n == 1 ? "l" : "f");
        for (std::size_t k = 0; k < order.size(); ++k) out << " " << next + k;
        out << "\n";
        next += order.size();
    }
    return out.str();
}

std::string solution_to_csv(const PiecewiseAffine& pw)
{
    auto join = [](const RatVec& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
        return s;
    };
    std::ostringstream out;
    out << "cell,copy,gradient,offset,vertices,values\n";
    for (std::size_t i = 0; i < pw.cells.size(); ++i) {
        const AffinePiece& c = pw.cells[i];
        std::string verts;
        for (std::size_t k = 0; k < c.vertices.size(); ++k) verts += (k ? ";" : "") + join(c.vertices[k]);
        out << i << "," << c.copy << "," << join(c.gradient) << "," << to_string(c.offset) << "," << verts << ","
            << join(c.values) << "\n";
    }
    return out.str();
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Malformed, path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::Malformed, path + ": " + e.what());
    }
}

} // namespace inclusionkit
