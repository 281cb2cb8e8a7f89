#include "inclusionkit/builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "inclusionkit/convexity.hpp"

namespace inclusionkit {

// ---------------------------------------------------------------------------
// Cell geometry

namespace cellgeom {

namespace {

bool tight(const HalfSpace& h, const RatVec& x) { return dot(h.normal, x) == h.offset; }

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<RatVec> vertices(const Polytope& p)
{
    const std::size_t n = p.dim();
    const auto& hs = p.halfspaces();
    std::vector<RatVec> out;
    for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& pick) {
        RatMat a(n, n);
        RatVec b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a(r, c) = hs[pick[r]].normal[c];
            b[r] = hs[pick[r]].offset;
        }
        if (rank(a) < n) return;
        RatVec x = *solve(a, b);
        if (p.contains(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    });
    return out;
}

std::size_t affine_dim(std::span<const RatVec> points)
{
    if (points.size() <= 1) return 0;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return rank(RatMat::from_rows(diffs));
}

Polytope irredundant(const Polytope& p, std::span<const RatVec> verts)
{
    if (p.is_box()) return p;
    const std::size_t n = p.dim();
    std::vector<HalfSpace> kept;
    std::set<std::vector<std::size_t>> facets;
    for (const auto& h : p.halfspaces()) {
        std::vector<std::size_t> on;
        std::vector<RatVec> pts;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (tight(h, verts[i])) {
                on.push_back(i);
                pts.push_back(verts[i]);
            }
        }
        if (pts.size() < n || affine_dim(pts) != n - 1) continue;
        if (!facets.insert(on).second) continue;
        kept.push_back(h);
    }
    return Polytope::from_halfspaces(std::move(kept));
}

std::vector<std::vector<RatVec>> triangulate(const Polytope& p, std::span<const RatVec> verts)
{
    const std::size_t n = p.dim();
    const auto& hs = p.halfspaces();
    std::vector<std::vector<RatVec>> out;
    if (verts.size() < n + 1 || affine_dim(verts) < n) return out;

    std::vector<std::vector<bool>> on(hs.size(), std::vector<bool>(verts.size()));
    for (std::size_t h = 0; h < hs.size(); ++h)
        for (std::size_t v = 0; v < verts.size(); ++v) on[h][v] = tight(hs[h], verts[v]);

    // Pulling: cone the lowest-index vertex of a face over each facet of the
    // face that misses it, triangulating the facets recursively.
    auto pull = [&](auto&& self, const std::vector<std::size_t>& face, std::size_t dim) -> std::vector<std::vector<std::size_t>> {
        if (dim == 0) return {{face.front()}};
        const std::size_t apex = face.front();
        std::vector<std::vector<std::size_t>> result;
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t h = 0; h < hs.size(); ++h) {
            std::vector<std::size_t> facet;
            for (auto v : face)
                if (on[h][v]) facet.push_back(v);
            if (facet.size() == face.size() || facet.size() < dim || on[h][apex]) continue;
            std::vector<RatVec> pts;
            for (auto v : facet) pts.push_back(verts[v]);
            if (affine_dim(pts) != dim - 1 || !seen.insert(facet).second) continue;
            for (auto& s : self(self, facet, dim - 1)) {
                s.push_back(apex);
                result.push_back(std::move(s));
            }
        }
        return result;
    };

    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (const auto& s : pull(pull, all, n)) {
        std::vector<RatVec> simplex;
        for (auto v : s) simplex.push_back(verts[v]);
        out.push_back(std::move(simplex));
    }
    return out;
}

Rat simplex_volume(std::span<const RatVec> simplex)
{
    const std::size_t n = simplex.size() - 1;
    RatMat edges(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) edges(i, j) = simplex[i + 1][j] - simplex[0][j];
    Rat det = abs(determinant(edges));
    mpz_class fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
    return det / Rat(fact);
}

Rat volume(const Polytope& p)
{
    const auto verts = vertices(p);
    Rat total = 0;
    for (const auto& s : triangulate(p, verts)) total += simplex_volume(s);
    return total;
}

Rat integrate_affine(const Polytope& p, std::span<const RatVec> verts, const RatVec& gradient, const Rat& offset)
{
    Rat total = 0;
    for (const auto& s : triangulate(p, verts)) {
        // Mean of the vertex values equals the value at the centroid.
        RatVec centroid = zeros(p.dim());
        for (const auto& v : s) centroid = add(centroid, v);
        centroid = scale(centroid, Rat(1, static_cast<unsigned long>(s.size())));
        total += simplex_volume(s) * (dot(gradient, centroid) + offset);
    }
    return total;
}

} // namespace cellgeom

// ---------------------------------------------------------------------------
// Pyramid

RatMat PiecewiseAffine::vector_gradient(const AffinePiece& piece) const
{
    return slice_map(op == OperatorKind::Gradient ? ProductKind::Tensor : ProductKind::Symmetric, direction,
                     piece.gradient);
}

Pyramid build_pyramid(const PointSet& factors)
{
    if (factors.size() == 1 && is_zero(factors[0])) {
        // F = {0}: the zero function, no cells and no base polytope.
        Pyramid out;
        out.spec.factors = factors;
        out.spec.apex_value = 0;
        out.function.direction = RatVec{Rat(1)};
        out.function.residual_measure = 0;
        return out;
    }
    if (!in_interior_of_hull(factors)) throw Error(ErrorCode::NotInterior, "0 is not in the interior of co F");
    const std::size_t n = factors.ambient();

    std::vector<HalfSpace> base_hs;
    for (const auto& f : factors.points()) base_hs.push_back({scale(f, -1), Rat(1)});
    const Polytope raw_base = Polytope::from_halfspaces(base_hs);
    const Polytope base = cellgeom::irredundant(raw_base, cellgeom::vertices(raw_base));

    Pyramid out;
    out.spec.factors = factors;
    out.spec.base = base;
    out.spec.apex_value = 0;

    std::vector<AffinePiece> cells;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const RatVec& fk = factors[k];
        // Where <f_k; x> + 1 is the minimum: <f_k - f_j; x> <= 0, plus the base facet of f_k.
        std::vector<HalfSpace> hs{{scale(fk, -1), Rat(1)}};
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != k) hs.push_back({sub(fk, factors[j]), Rat(0)});
        const Polytope raw = Polytope::from_halfspaces(std::move(hs));
        auto verts = cellgeom::vertices(raw);
        if (verts.size() < n + 1 || cellgeom::affine_dim(verts) < n) {
            out.spec.inactive.push_back(fk);
            continue;
        }
        AffinePiece piece;
        piece.cell = cellgeom::irredundant(raw, verts);
        piece.gradient = fk;
        piece.offset = 1;
        for (const auto& v : verts) {
            piece.values.push_back(dot(fk, v) + 1);
            if (piece.values.back() > out.spec.apex_value) out.spec.apex_value = piece.values.back();
        }
        piece.vertices = std::move(verts);
        piece.copy = 0;
        cells.push_back(std::move(piece));
    }

    PiecewiseAffine& fn = out.function;
    fn.op = OperatorKind::Gradient;
    fn.direction = RatVec{Rat(1)};
    fn.domain = base;
    fn.base = base;
    fn.copies = {CoverCopy{zeros(n), Rat(1)}};
    fn.cells = std::move(cells);
    fn.residual_measure = 0;
    fn.unused_factors = out.spec.inactive;
    return out;
}

// ---------------------------------------------------------------------------
// Covering

std::size_t max_copies_from_env()
{
    if (const char* env = std::getenv("INCLUSIONKIT_MAX_COPIES")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 200000;
}

namespace {

struct Bounds {
    RatVec low;
    RatVec high;
};

Bounds bounding_box(const std::vector<RatVec>& pts)
{
    Bounds b{pts.front(), pts.front()};
    for (const auto& p : pts)
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (p[d] < b.low[d]) b.low[d] = p[d];
            if (p[d] > b.high[d]) b.high[d] = p[d];
        }
    return b;
}

bool interiors_intersect(const Polytope& a, const Polytope& b)
{
    const std::size_t n = a.dim();
    std::vector<RatVec> normals;
    RatVec offsets;
    for (const auto* p : {&a, &b})
        for (const auto& h : p->halfspaces()) {
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

struct GridBox {
    std::vector<long> index;
    std::vector<std::size_t> ancestors;   // copies placed on enclosing boxes
};

mpz_class ceil_div(const Rat& q)
{
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace

std::vector<CoverCopy> vitali_cover(const Polytope& omega, const Polytope& base, const Rat& delta, std::size_t max_copies)
{
    if (sgn(delta) <= 0) throw Error(ErrorCode::InvalidInput, "delta must be positive");
    const std::size_t n = omega.dim();
    if (base.dim() != n) throw Error(ErrorCode::DimensionMismatch, "base and domain dimensions differ");

    const auto base_verts = cellgeom::vertices(base);
    const Bounds pb = bounding_box(base_verts);
    const RatVec width = sub(pb.high, pb.low);
    const Rat base_measure = cellgeom::volume(base);
    Rat box_measure = 1;
    for (const auto& w : width) box_measure *= w;
    const bool base_is_box = base_measure == box_measure;

    const Bounds ob = bounding_box(cellgeom::vertices(omega));
    const Rat omega_measure = cellgeom::volume(omega);
    const Rat target = (1 - delta) * omega_measure;

    std::vector<CoverCopy> copies;
    if (sgn(target) <= 0) return copies;

    Rat s0 = (ob.high[0] - ob.low[0]) / width[0];
    for (std::size_t d = 1; d < n; ++d) s0 = std::min(s0, Rat((ob.high[d] - ob.low[d]) / width[d]));

    std::vector<GridBox> frontier;
    {
        std::vector<long> counts(n);
        for (std::size_t d = 0; d < n; ++d)
            counts[d] = ceil_div((ob.high[d] - ob.low[d]) / (s0 * width[d])).get_si();
        std::vector<long> idx(n, 0);
        for (;;) {
            frontier.push_back({idx, {}});
            std::size_t d = n;
            while (d > 0 && ++idx[d - 1] == counts[d - 1]) idx[--d] = 0;
            if (d == 0) break;
        }
    }

    std::vector<Polytope> placed;
    Rat covered = 0;
    Rat s = s0;
    const std::size_t frontier_cap = 64 * max_copies + 1024;

    for (int level = 0; level < 64; ++level, s /= 2) {
        std::sort(frontier.begin(), frontier.end(), [](const GridBox& a, const GridBox& b) { return a.index < b.index; });
        Rat copy_measure = base_measure;
        for (std::size_t d = 0; d < n; ++d) copy_measure *= s;

        std::vector<GridBox> next;
        auto push_children = [&](const GridBox& box, const std::vector<std::size_t>& ancestors) {
            std::vector<long> child(n);
            for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                for (std::size_t d = 0; d < n; ++d) child[d] = 2 * box.index[d] + static_cast<long>((mask >> (n - 1 - d)) & 1u);
                next.push_back({child, ancestors});
            }
        };

        for (const GridBox& box : frontier) {
            RatVec low(n), high(n);
            for (std::size_t d = 0; d < n; ++d) {
                low[d] = ob.low[d] + s * width[d] * box.index[d];
                high[d] = low[d] + s * width[d];
            }
            const RatVec center = sub(low, scale(pb.low, s));

            const bool fits = std::all_of(base_verts.begin(), base_verts.end(),
                                          [&](const RatVec& v) { return omega.contains(add(center, scale(v, s))); });
            bool overlaps = false;
            Polytope candidate;
            if (fits) {
                candidate = base.scaled_copy(center, s);
                for (auto a : box.ancestors)
                    if ((overlaps = interiors_intersect(candidate, placed[a]))) break;
            }
            if (fits && !overlaps) {
                copies.push_back({center, s});
                placed.push_back(candidate);
                if (copies.size() > max_copies)
                    throw Error(ErrorCode::BudgetExceeded, "covering needs more than " + std::to_string(max_copies) + " copies");
                covered += copy_measure;
                if (covered >= target) return copies;
                if (!base_is_box) {
                    auto anc = box.ancestors;
                    anc.push_back(copies.size() - 1);
                    push_children(box, anc);
                }
                continue;
            }

            // Drop boxes that cannot meet the interior of omega.
            const bool outside = std::any_of(omega.halfspaces().begin(), omega.halfspaces().end(), [&](const HalfSpace& h) {
                Rat lowest = 0;
                for (std::size_t d = 0; d < n; ++d) lowest += h.normal[d] * (sgn(h.normal[d]) > 0 ? low[d] : high[d]);
                return lowest >= h.offset;
            });
            if (outside) continue;
            // And boxes already swallowed by an earlier copy.
            const bool swallowed = std::any_of(box.ancestors.begin(), box.ancestors.end(), [&](std::size_t a) {
                for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
                    RatVec corner(n);
                    for (std::size_t d = 0; d < n; ++d) corner[d] = ((mask >> d) & 1u) ? high[d] : low[d];
                    if (!placed[a].contains(corner)) return false;
                }
                return true;
            });
            if (swallowed) continue;
            push_children(box, box.ancestors);
        }
        if (next.empty()) throw Error(ErrorCode::BudgetExceeded, "covering ran out of candidate boxes");
        if (next.size() > frontier_cap) throw Error(ErrorCode::BudgetExceeded, "covering frontier exceeds the copy budget");
        frontier = std::move(next);
    }
    throw Error(ErrorCode::BudgetExceeded, "covering did not converge within 64 levels");
}

// ---------------------------------------------------------------------------
// Assembly

namespace {

AffinePiece place_one(const AffinePiece& base, const CoverCopy& copy, std::size_t copy_index)
{
    // v(x) = s v_P((x - c) / s) keeps the gradient and rescales the values.
    AffinePiece out;
    out.cell = base.cell.scaled_copy(copy.center, copy.scale);
    out.vertices.reserve(base.vertices.size());
    for (const auto& v : base.vertices) out.vertices.push_back(add(copy.center, scale(v, copy.scale)));
    out.values = scale(base.values, copy.scale);
    out.gradient = base.gradient;
    out.offset = copy.scale * base.offset - dot(base.gradient, copy.center);
    out.copy = copy_index;
    return out;
}

} // namespace

std::vector<AffinePiece> place_cells(std::span<const AffinePiece> base_cells, std::span<const CoverCopy> copies)
{
    const std::size_t k = base_cells.size();
    std::vector<AffinePiece> out(k * copies.size());
    const auto count = static_cast<std::ptrdiff_t>(copies.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto c = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < k; ++j) out[c * k + j] = place_one(base_cells[j], copies[c], c);
    }
    return out;
}

std::vector<AffinePiece> place_cells_serial(std::span<const AffinePiece> base_cells, std::span<const CoverCopy> copies)
{
    std::vector<AffinePiece> out;
    out.reserve(base_cells.size() * copies.size());
    for (std::size_t c = 0; c < copies.size(); ++c)
        for (const auto& cell : base_cells) out.push_back(place_one(cell, copies[c], c));
    return out;
}

PiecewiseAffine assemble_solution(const Verdict& verdict, const Polytope& omega, const Rat& delta, std::size_t max_copies)
{
    if (verdict.status != VerdictStatus::Feasible || !verdict.b || !verdict.factors)
        throw Error(ErrorCode::InvalidInput, "assemble_solution needs a feasible verdict");
    if (omega.dim() != verdict.n) throw Error(ErrorCode::DimensionMismatch, "domain dimension differs from n");

    Pyramid pyramid = build_pyramid(*verdict.factors);
    PiecewiseAffine pw;
    pw.op = verdict.op;
    pw.direction = *verdict.b;
    pw.domain = omega;
    pw.base = pyramid.spec.base;
    pw.copies = vitali_cover(omega, pw.base, delta, max_copies);
    pw.cells = place_cells(pyramid.function.cells, pw.copies);
    pw.unused_factors = pyramid.spec.inactive;

    const Rat base_measure = cellgeom::volume(pw.base);
    Rat covered = 0;
    for (const auto& c : pw.copies) {
        Rat m = base_measure;
        for (std::size_t d = 0; d < omega.dim(); ++d) m *= c.scale;
        covered += m;
    }
    pw.residual_measure = cellgeom::volume(omega) - covered;
    return pw;
}

Rat integrate_scalar(const PiecewiseAffine& pw)
{
    Rat total = 0;
    for (const auto& piece : pw.cells)
        total += cellgeom::integrate_affine(piece.cell, cellgeom::vertices(piece.cell), piece.gradient, piece.offset);
    return total;
}

RatVec integrate(const PiecewiseAffine& pw) { return scale(pw.direction, integrate_scalar(pw)); }

} // namespace inclusionkit
