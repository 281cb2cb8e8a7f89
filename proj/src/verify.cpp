#include "inclusionkit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "inclusionkit/convexity.hpp"

namespace inclusionkit {

namespace {

enum Check : std::size_t {
    Structure,
    Geometry,
    Consistency,
    Membership,
    Boundary,
    Containment,
    Disjointness,
    Tiling,
    Hadamard,
    Coverage,
    Additivity,
    Integral,
    CheckCount
};

constexpr std::size_t max_messages = 50;

using Failures = std::vector<std::pair<std::size_t, std::string>>;

// ---------------------------------------------------------------------------
// Geometry, written independently of the builder.

std::size_t span_dim_of(const std::vector<RatVec>& pts)
{
    if (pts.size() < 2) return 0;
    RatMat m(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(m);
}

void collect_vertices(const std::vector<HalfSpace>& hs, std::size_t n, std::size_t start, std::vector<std::size_t>& chosen,
                      std::vector<RatVec>& out)
{
    if (chosen.size() == n) {
        RatMat a(n, n);
        RatVec rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = hs[chosen[r]].normal[c];
            rhs[r] = hs[chosen[r]].offset;
        }
        if (determinant(a) == 0) return;
        RatVec x = *solve(a, rhs);
        for (const auto& h : hs)
            if (dot(h.normal, x) > h.offset) return;
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
        return;
    }
    for (std::size_t i = start; i + (n - chosen.size()) <= hs.size(); ++i) {
        chosen.push_back(i);
        collect_vertices(hs, n, i + 1, chosen, out);
        chosen.pop_back();
    }
}

std::vector<RatVec> polytope_vertices(const std::vector<HalfSpace>& hs, std::size_t n)
{
    std::vector<RatVec> out;
    std::vector<std::size_t> chosen;
    collect_vertices(hs, n, 0, chosen, out);
    return out;
}

bool bounded(const std::vector<HalfSpace>& hs, std::size_t n)
{
    // {x : Ax <= b} is bounded iff the rows of A positively span R^n.
    std::vector<RatVec> normals;
    for (const auto& h : hs)
        if (!is_zero(h.normal)) normals.push_back(h.normal);
    if (normals.empty()) return false;
    return in_interior_of_hull(PointSet(n, std::move(normals)));
}

// Cone the vertex centroid of each face over the decomposition of its facets.
void decompose(const std::vector<HalfSpace>& hs, const std::vector<RatVec>& verts, const std::vector<std::size_t>& face,
               std::size_t dim, std::vector<RatVec>& tail, std::vector<std::vector<RatVec>>& out)
{
    if (dim == 0) {
        std::vector<RatVec> simplex{verts[face.front()]};
        simplex.insert(simplex.end(), tail.rbegin(), tail.rend());
        out.push_back(std::move(simplex));
        return;
    }
    RatVec centroid = zeros(verts[0].size());
    for (auto v : face) centroid = add(centroid, verts[v]);
    centroid = scale(centroid, Rat(1, static_cast<unsigned long>(face.size())));

    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : hs) {
        std::vector<std::size_t> sub;
        std::vector<RatVec> pts;
        for (auto v : face)
            if (dot(h.normal, verts[v]) == h.offset) {
                sub.push_back(v);
                pts.push_back(verts[v]);
            }
        if (sub.size() < dim || sub.size() == face.size()) continue;
        if (span_dim_of(pts) != dim - 1 || !seen.insert(sub).second) continue;
        tail.push_back(centroid);
        decompose(hs, verts, sub, dim - 1, tail, out);
        tail.pop_back();
    }
}

std::vector<std::vector<RatVec>> simplices(const std::vector<HalfSpace>& hs, const std::vector<RatVec>& verts, std::size_t n)
{
    std::vector<std::vector<RatVec>> out;
    if (verts.size() < n + 1 || span_dim_of(verts) < n) return out;
    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<RatVec> tail;
    decompose(hs, verts, all, n, tail, out);
    return out;
}

Rat simplex_measure(const std::vector<RatVec>& s)
{
    const std::size_t n = s.size() - 1;
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = s[i + 1][j] - s[0][j];
    Rat vol = abs(determinant(m));
    for (std::size_t k = 2; k <= n; ++k) vol /= static_cast<unsigned long>(k);
    return vol;
}

RatVec centroid_of(const std::vector<RatVec>& pts)
{
    RatVec c = zeros(pts[0].size());
    for (const auto& p : pts) c = add(c, p);
    return scale(c, Rat(1, static_cast<unsigned long>(pts.size())));
}

bool same_point_set(const std::vector<RatVec>& a, const std::vector<RatVec>& b)
{
    if (a.size() != b.size()) return false;
    std::vector<RatVec> x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y && std::adjacent_find(x.begin(), x.end()) == x.end();
}

// True when some half space of one polytope has the other's vertices on its far side.
bool facet_separated(const std::vector<HalfSpace>& ha, const std::vector<RatVec>& va, const std::vector<HalfSpace>& hb,
                     const std::vector<RatVec>& vb)
{
    auto sep = [](const std::vector<HalfSpace>& hs, const std::vector<RatVec>& other) {
        return std::any_of(hs.begin(), hs.end(), [&](const HalfSpace& h) {
            return std::all_of(other.begin(), other.end(), [&](const RatVec& v) { return dot(h.normal, v) >= h.offset; });
        });
    };
    return sep(ha, vb) || sep(hb, va);
}

bool interiors_meet(const std::vector<HalfSpace>& ha, const std::vector<HalfSpace>& hb, std::size_t n)
{
    std::vector<RatVec> normals;
    RatVec offsets;
    for (const auto* hs : {&ha, &hb})
        for (const auto& h : *hs) {
            RatVec row = h.normal;
            row.push_back(1);
            normals.push_back(std::move(row));
            offsets.push_back(h.offset);
        }
    normals.push_back(unit_vector(n + 1, n));
    offsets.push_back(1);
    const LPResult r = maximize_over_polyhedron(unit_vector(n + 1, n), normals, offsets);
    return r.status == LPStatus::Optimal && sgn(r.value) > 0;
}

bool disjoint_interiors(const std::vector<HalfSpace>& ha, const std::vector<RatVec>& va, const std::vector<HalfSpace>& hb,
                        const std::vector<RatVec>& vb, std::size_t n)
{
    return facet_separated(ha, va, hb, vb) || !interiors_meet(ha, hb, n);
}

std::vector<HalfSpace> copy_halfspaces(const std::vector<HalfSpace>& base, const CoverCopy& c)
{
    std::vector<HalfSpace> out;
    for (const auto& h : base) out.push_back({h.normal, c.scale * h.offset + dot(h.normal, c.center)});
    return out;
}

// ---------------------------------------------------------------------------

struct Facet {
    std::vector<RatVec> points;           // sorted
    std::vector<std::size_t> local;       // indices into the cell's vertices
};

struct CellOutcome {
    Failures failures;
    bool usable = false;                  // geometry and structure are sound
    Rat measure;
    Rat integral;
    RatVec gradient;                      // recovered
    Rat offset;
    std::vector<Facet> interior_facets;
};

struct Context {
    const PiecewiseAffine& pw;
    const InclusionProblem& problem;
    std::size_t n;
    ProductKind kind;
    std::vector<HalfSpace> base_hs;
    std::vector<RatVec> base_verts;
    Rat base_measure;
};

std::string cell_tag(std::size_t i) { return "cell " + std::to_string(i); }

CellOutcome check_cell(const Context& ctx, std::size_t index)
{
    CellOutcome out;
    const AffinePiece& cell = ctx.pw.cells[index];
    const std::size_t n = ctx.n;
    const std::string tag = cell_tag(index);
    auto fail = [&](Check c, const std::string& msg) { out.failures.emplace_back(c, tag + ": " + msg); };

    if (cell.copy >= ctx.pw.copies.size()) return fail(Structure, "copy index out of range"), out;
    if (cell.vertices.size() != cell.values.size()) return fail(Structure, "vertex and value counts differ"), out;
    if (cell.gradient.size() != n) return fail(Structure, "gradient has the wrong length"), out;
    if (cell.cell.dim() != n) return fail(Structure, "cell dimension differs from n"), out;
    for (const auto& v : cell.vertices)
        if (v.size() != n) return fail(Structure, "vertex has the wrong length"), out;

    const auto& hs = cell.cell.halfspaces();
    if (!bounded(hs, n)) return fail(Geometry, "half spaces do not bound a polytope"), out;
    const std::vector<RatVec> verts = polytope_vertices(hs, n);
    if (!same_point_set(verts, cell.vertices)) return fail(Geometry, "serialized vertices differ from the half-space vertices"), out;
    if (span_dim_of(cell.vertices) < n) return fail(Geometry, "cell is lower-dimensional"), out;
    out.usable = true;

    // Affine function from n + 1 affinely independent vertices.
    std::vector<std::size_t> basis{0};
    for (std::size_t i = 1; i < cell.vertices.size() && basis.size() < n + 1; ++i) {
        std::vector<RatVec> trial;
        for (auto b : basis) trial.push_back(cell.vertices[b]);
        trial.push_back(cell.vertices[i]);
        if (span_dim_of(trial) == basis.size()) basis.push_back(i);
    }
    RatMat a(n + 1, n + 1);
    RatVec rhs(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = cell.vertices[basis[r]][c];
        a(r, n) = 1;
        rhs[r] = cell.values[basis[r]];
    }
    const RatVec go = *solve(a, rhs);
    out.gradient.assign(go.begin(), go.end() - 1);
    out.offset = go.back();
    for (std::size_t i = 0; i < cell.vertices.size(); ++i)
        if (dot(out.gradient, cell.vertices[i]) + out.offset != cell.values[i]) {
            fail(Consistency, "vertex values are not affine");
            break;
        }
    if (out.gradient != cell.gradient) fail(Consistency, "serialized gradient differs from the recovered one");
    if (out.offset != cell.offset) fail(Consistency, "serialized offset differs from the recovered one");

    const RatMat du = slice_map(ctx.kind, ctx.pw.direction, out.gradient);
    if (!ctx.problem.targets.contains(du.flat())) fail(Membership, "derivative is not in E");
    if (out.gradient != cell.gradient &&
        !ctx.problem.targets.contains(slice_map(ctx.kind, ctx.pw.direction, cell.gradient).flat()))
        fail(Membership, "serialized derivative is not in E");

    const CoverCopy& copy = ctx.pw.copies[cell.copy];
    const std::vector<HalfSpace> qhs = copy_halfspaces(ctx.base_hs, copy);
    for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
        const RatVec& v = cell.vertices[i];
        bool inside = true, on_boundary = false;
        for (const auto& h : qhs) {
            const Rat lhs = dot(h.normal, v);
            if (lhs > h.offset) inside = false;
            if (lhs == h.offset) on_boundary = true;
        }
        if (!inside) fail(Containment, "vertex " + std::to_string(i) + " lies outside its copy");
        if (on_boundary && sgn(cell.values[i]) != 0) fail(Boundary, "nonzero value on the copy boundary at vertex " + std::to_string(i));
    }

    for (const auto& s : simplices(hs, cell.vertices, n)) {
        const Rat m = simplex_measure(s);
        out.measure += m;
        out.integral += m * (dot(out.gradient, centroid_of(s)) + out.offset);
    }

    std::set<std::vector<std::size_t>> seen;
    for (const auto& h : hs) {
        Facet f;
        for (std::size_t i = 0; i < cell.vertices.size(); ++i)
            if (dot(h.normal, cell.vertices[i]) == h.offset) {
                f.local.push_back(i);
                f.points.push_back(cell.vertices[i]);
            }
        if (f.points.size() < n || span_dim_of(f.points) != n - 1 || !seen.insert(f.local).second) continue;
        const bool on_copy_boundary = std::any_of(qhs.begin(), qhs.end(), [&](const HalfSpace& q) {
            return std::all_of(f.points.begin(), f.points.end(), [&](const RatVec& p) { return dot(q.normal, p) == q.offset; });
        });
        if (on_copy_boundary) continue;
        std::sort(f.points.begin(), f.points.end());
        out.interior_facets.push_back(std::move(f));
    }
    return out;
}

// Tiling, disjointness and jump conditions among the cells of one copy.
Failures check_copy(const Context& ctx, std::size_t c, const std::vector<std::size_t>& members,
                    const std::vector<CellOutcome>& cells)
{
    Failures out;
    const std::string tag = "copy " + std::to_string(c);
    const CoverCopy& copy = ctx.pw.copies[c];
    const std::size_t n = ctx.n;

    if (sgn(copy.scale) <= 0) {
        out.emplace_back(Structure, tag + ": scale is not positive");
        return out;
    }
    if (copy.center.size() != n) {
        out.emplace_back(Structure, tag + ": center has the wrong length");
        return out;
    }
    for (const auto& v : ctx.base_verts)
        if (!ctx.pw.domain.contains(add(copy.center, scale(v, copy.scale)))) {
            out.emplace_back(Containment, tag + ": copy leaves the domain");
            break;
        }

    Rat expected = ctx.base_measure, total = 0;
    for (std::size_t d = 0; d < n; ++d) expected *= copy.scale;
    for (auto i : members) total += cells[i].measure;
    if (total != expected)
        out.emplace_back(Tiling, tag + ": cells measure " + to_string(total) + ", copy measures " + to_string(expected));

    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            const auto& a = ctx.pw.cells[members[x]];
            const auto& b = ctx.pw.cells[members[y]];
            if (!disjoint_interiors(a.cell.halfspaces(), a.vertices, b.cell.halfspaces(), b.vertices, n))
                out.emplace_back(Disjointness, cell_tag(members[x]) + " and " + cell_tag(members[y]) + " overlap");
        }

    std::map<std::vector<RatVec>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
    for (auto i : members)
        for (std::size_t f = 0; f < cells[i].interior_facets.size(); ++f) facets[cells[i].interior_facets[f].points].emplace_back(i, f);
    for (const auto& [points, owners] : facets) {
        if (owners.size() != 2) {
            out.emplace_back(Hadamard, cell_tag(owners.front().first) + (owners.size() == 1 ? ": interior facet has no neighbour"
                                                                                            : ": interior facet shared by more than two cells"));
            continue;
        }
        const auto [i, fi] = owners[0];
        const auto [j, fj] = owners[1];
        const auto& pi = ctx.pw.cells[i];
        const auto& pj = ctx.pw.cells[j];
        const Facet& a = cells[i].interior_facets[fi];
        const Facet& b = cells[j].interior_facets[fj];
        for (auto li : a.local) {
            const RatVec& v = pi.vertices[li];
            const auto lj = *std::find_if(b.local.begin(), b.local.end(), [&](std::size_t k) { return pj.vertices[k] == v; });
            if (pi.values[li] != pj.values[lj]) {
                out.emplace_back(Hadamard, cell_tag(i) + " and " + cell_tag(j) + ": values jump across their common facet");
                break;
            }
        }
        const RatVec jump = sub(cells[i].gradient, cells[j].gradient);
        for (std::size_t k = 1; k < points.size(); ++k)
            if (sgn(dot(jump, sub(points[k], points[0]))) != 0) {
                out.emplace_back(Hadamard, cell_tag(i) + " and " + cell_tag(j) + ": gradient jump is not normal to the facet");
                break;
            }
    }
    return out;
}

Failures check_copies_disjoint(const Context& ctx)
{
    Failures out;
    const std::size_t n = ctx.n;
    const auto& copies = ctx.pw.copies;
    struct Item {
        RatVec low, high;
        std::size_t index;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (copies[i].center.size() != n || sgn(copies[i].scale) <= 0) continue;
        Item it{RatVec(n), RatVec(n), i};
        bool first = true;
        for (const auto& v : ctx.base_verts) {
            const RatVec p = add(copies[i].center, scale(v, copies[i].scale));
            for (std::size_t d = 0; d < n; ++d) {
                if (first || p[d] < it.low[d]) it.low[d] = p[d];
                if (first || p[d] > it.high[d]) it.high[d] = p[d];
            }
            first = false;
        }
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.low[0] < b.low[0] || (a.low[0] == b.low[0] && a.index < b.index); });
    for (std::size_t x = 0; x < items.size(); ++x)
        for (std::size_t y = x + 1; y < items.size() && items[y].low[0] < items[x].high[0]; ++y) {
            bool boxes_meet = true;
            for (std::size_t d = 0; d < n; ++d)
                if (items[y].low[d] >= items[x].high[d] || items[x].low[d] >= items[y].high[d]) boxes_meet = false;
            if (!boxes_meet) continue;
            const CoverCopy& a = copies[items[x].index];
            const CoverCopy& b = copies[items[y].index];
            std::vector<RatVec> va, vb;
            for (const auto& v : ctx.base_verts) {
                va.push_back(add(a.center, scale(v, a.scale)));
                vb.push_back(add(b.center, scale(v, b.scale)));
            }
            if (!disjoint_interiors(copy_halfspaces(ctx.base_hs, a), va, copy_halfspaces(ctx.base_hs, b), vb, n)) {
                const auto lo = std::min(items[x].index, items[y].index), hi = std::max(items[x].index, items[y].index);
                out.emplace_back(Disjointness, "copy " + std::to_string(lo) + " and copy " + std::to_string(hi) + " overlap");
            }
        }
    return out;
}

Report assemble(const Context& ctx, const Rat& delta, Failures global, const std::vector<CellOutcome>& cells,
                const std::vector<Failures>& per_copy)
{
    Report report;
    for (const auto& name : check_names()) report.checks.push_back({name, {}});
    auto add_failure = [&](std::size_t check, std::string msg) {
        auto& list = report.checks[check].failures;
        if (list.size() < max_messages) list.push_back(std::move(msg));
        else if (list.size() == max_messages) list.push_back("further failures omitted");
    };
    for (auto& [c, msg] : global) add_failure(c, std::move(msg));
    for (const auto& cell : cells)
        for (const auto& [c, msg] : cell.failures) add_failure(c, msg);
    for (const auto& f : per_copy)
        for (const auto& [c, msg] : f) add_failure(c, msg);

    report.domain_measure = 0;
    try {
        report.domain_measure = measure(ctx.pw.domain);
    } catch (const Error& e) {
        add_failure(Structure, std::string("domain: ") + e.what());
    }
    report.covered_measure = 0;
    report.scalar_integral = 0;
    for (const auto& cell : cells) {
        report.covered_measure += cell.measure;
        report.scalar_integral += cell.integral;
    }
    const Rat target = (1 - delta) * report.domain_measure;
    if (report.covered_measure < target)
        add_failure(Coverage, "covered measure " + to_string(report.covered_measure) + " is below " + to_string(target));
    if (report.covered_measure + ctx.pw.residual_measure != report.domain_measure)
        add_failure(Additivity, "covered " + to_string(report.covered_measure) + " + residual " +
                                    to_string(ctx.pw.residual_measure) + " != domain " + to_string(report.domain_measure));

    report.integral = scale(ctx.pw.direction, report.scalar_integral);
    report.integral_nonzero = sgn(report.scalar_integral) != 0 && !is_zero(ctx.pw.direction);
    if (ctx.problem.op == OperatorKind::SymmetrizedGradient && !report.integral_nonzero)
        add_failure(Integral, "integral of u vanishes");
    return report;
}

// Problem-level checks that do not depend on individual cells. Returns false
// when the solution is too malformed to continue.
bool prepare(Context& ctx, Failures& global)
{
    const auto& pw = ctx.pw;
    const auto& problem = ctx.problem;
    if (pw.op != problem.op) global.emplace_back(Structure, "operator differs from the problem");
    const std::size_t rows = problem.op == OperatorKind::Gradient ? problem.m : problem.n;
    if (pw.direction.size() != rows || is_zero(pw.direction)) {
        global.emplace_back(Structure, "direction b has the wrong length or is zero");
        return false;
    }
    if (!(pw.domain == problem.domain)) global.emplace_back(Containment, "solution domain differs from the problem domain");
    if (pw.domain.dim() != ctx.n || pw.base.dim() != ctx.n) {
        global.emplace_back(Structure, "domain or base has the wrong dimension");
        return false;
    }
    ctx.base_hs = pw.base.halfspaces();
    if (!bounded(ctx.base_hs, ctx.n)) {
        global.emplace_back(Geometry, "base half spaces do not bound a polytope");
        return false;
    }
    ctx.base_verts = polytope_vertices(ctx.base_hs, ctx.n);
    ctx.base_measure = 0;
    for (const auto& s : simplices(ctx.base_hs, ctx.base_verts, ctx.n)) ctx.base_measure += simplex_measure(s);
    if (sgn(ctx.base_measure) == 0) {
        global.emplace_back(Geometry, "base is lower-dimensional");
        return false;
    }
    return true;
}

CellOutcome guarded_cell(const Context& ctx, std::size_t i)
{
    try {
        return check_cell(ctx, i);
    } catch (const std::exception& e) {
        CellOutcome out;
        out.failures.emplace_back(Structure, cell_tag(i) + ": " + e.what());
        return out;
    }
}

Failures guarded_copy(const Context& ctx, std::size_t c, const std::vector<std::size_t>& members,
                      const std::vector<CellOutcome>& cells)
{
    try {
        return check_copy(ctx, c, members, cells);
    } catch (const std::exception& e) {
        return {{Structure, "copy " + std::to_string(c) + ": " + e.what()}};
    }
}

std::vector<std::vector<std::size_t>> group_by_copy(const PiecewiseAffine& pw, const std::vector<CellOutcome>& cells)
{
    std::vector<std::vector<std::size_t>> members(pw.copies.size());
    for (std::size_t i = 0; i < pw.cells.size(); ++i)
        if (cells[i].usable) members[pw.cells[i].copy].push_back(i);
    return members;
}

Report run(const PiecewiseAffine& pw, const InclusionProblem& problem, const Rat& delta, bool parallel)
{
    Context ctx{pw, problem, problem.n, problem.product(), {}, {}, Rat(0)};
    Failures global;
    if (!prepare(ctx, global)) return assemble(ctx, delta, std::move(global), {}, {});

    std::vector<CellOutcome> cells(pw.cells.size());
    const auto cell_count = static_cast<std::ptrdiff_t>(cells.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < cell_count; ++i) cells[i] = guarded_cell(ctx, static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < cell_count; ++i) cells[i] = guarded_cell(ctx, static_cast<std::size_t>(i));
    }

    const auto members = group_by_copy(pw, cells);
    std::vector<Failures> per_copy(pw.copies.size());
    const auto copy_count = static_cast<std::ptrdiff_t>(per_copy.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t c = 0; c < copy_count; ++c) per_copy[c] = guarded_copy(ctx, static_cast<std::size_t>(c), members[c], cells);
    } else {
        for (std::ptrdiff_t c = 0; c < copy_count; ++c) per_copy[c] = guarded_copy(ctx, static_cast<std::size_t>(c), members[c], cells);
    }

    try {
        auto f = check_copies_disjoint(ctx);
        global.insert(global.end(), f.begin(), f.end());
    } catch (const std::exception& e) {
        global.emplace_back(Structure, std::string("copies: ") + e.what());
    }
    return assemble(ctx, delta, std::move(global), cells, per_copy);
}

} // namespace

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{"structure", "geometry",     "consistency", "membership",
                                                "boundary",  "containment",  "disjointness", "tiling",
                                                "hadamard",  "coverage",     "additivity",  "integral"};
    return names;
}

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult& Report::check(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no check named " + std::string(name));
}

std::vector<std::string> Report::failing() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed()) out.push_back(c.name);
    return out;
}

Report verify_solution(const PiecewiseAffine& pw, const InclusionProblem& problem, const Rat& delta)
{
    return run(pw, problem, delta, true);
}

Report verify_solution_serial(const PiecewiseAffine& pw, const InclusionProblem& problem, const Rat& delta)
{
    return run(pw, problem, delta, false);
}

Rat measure(const Polytope& p)
{
    const std::size_t n = p.dim();
    if (n == 0) throw Error(ErrorCode::InvalidInput, "measure of an empty description");
    if (!bounded(p.halfspaces(), n)) throw Error(ErrorCode::Unbounded, "polytope is unbounded");
    const auto verts = polytope_vertices(p.halfspaces(), n);
    Rat total = 0;
    for (const auto& s : simplices(p.halfspaces(), verts, n)) total += simplex_measure(s);
    return total;
}

} // namespace inclusionkit
