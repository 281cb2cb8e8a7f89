#include "inclusionkit/faults.hpp"

#include <array>

namespace inclusionkit {

namespace {

enum class Fault {
    CellGradient,
    CellOffset,
    VertexValue,
    VertexCoordinate,
    CellHalfspaceOffset,
    CellHalfspaceNormal,
    DeleteCell,
    CopyCenter,
    CopyScale,
    Residual,
    Direction,
    Domain,
    BaseOffset,
};

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Rat nonzero_shift(std::mt19937_64& rng)
{
    static const std::array<Rat, 6> shifts{Rat(1), Rat(2), Rat(1, 2), Rat(3, 7), Rat(5, 3), Rat(1, 16)};
    Rat d = shifts[pick(rng, shifts.size())];
    return pick(rng, 2) ? d : Rat(-d);
}

Rat read(const Json& j) { return rat_from_json(j, ""); }

void shift(Json& j, const Rat& d) { j = to_json(read(j) + d); }

std::string idx(const char* what, std::size_t i) { return std::string(what) + " " + std::to_string(i); }

} // namespace

std::string inject_fault(Json& sol, std::mt19937_64& rng)
{
    Json& cells = sol["cells"];
    Json& copies = sol["copies"];
    std::vector<Fault> options{Fault::Residual, Fault::Direction, Fault::Domain, Fault::BaseOffset};
    if (!cells.empty())
        options.insert(options.end(), {Fault::CellGradient, Fault::CellOffset, Fault::VertexValue, Fault::VertexCoordinate,
                                       Fault::CellHalfspaceOffset, Fault::CellHalfspaceNormal, Fault::DeleteCell});
    if (!copies.empty()) options.insert(options.end(), {Fault::CopyCenter, Fault::CopyScale});

    const Fault f = options[pick(rng, options.size())];
    const Rat d = nonzero_shift(rng);
    const std::string amount = " by " + to_string(d);

    switch (f) {
    case Fault::CellGradient: {
        const auto c = pick(rng, cells.size());
        Json& g = cells[c]["gradient"];
        const auto k = pick(rng, g.size());
        shift(g[k], d);
        return idx("cell", c) + ": gradient entry " + std::to_string(k) + " shifted" + amount;
    }
    case Fault::CellOffset: {
        const auto c = pick(rng, cells.size());
        shift(cells[c]["offset"], d);
        return idx("cell", c) + ": offset shifted" + amount;
    }
    case Fault::VertexValue: {
        const auto c = pick(rng, cells.size());
        Json& values = cells[c]["values"];
        const auto k = pick(rng, values.size());
        shift(values[k], d);
        return idx("cell", c) + ": value at vertex " + std::to_string(k) + " shifted" + amount;
    }
    case Fault::VertexCoordinate: {
        const auto c = pick(rng, cells.size());
        Json& verts = cells[c]["vertices"];
        const auto k = pick(rng, verts.size());
        const auto e = pick(rng, verts[k].size());
        shift(verts[k][e], d);
        return idx("cell", c) + ": vertex " + std::to_string(k) + " moved" + amount;
    }
    case Fault::CellHalfspaceOffset: {
        const auto c = pick(rng, cells.size());
        Json& offsets = cells[c]["halfspaces"]["offsets"];
        const auto k = pick(rng, offsets.size());
        shift(offsets[k], d);
        return idx("cell", c) + ": half space " + std::to_string(k) + " offset shifted" + amount;
    }
    case Fault::CellHalfspaceNormal: {
        const auto c = pick(rng, cells.size());
        Json& normals = cells[c]["halfspaces"]["normals"];
        const auto k = pick(rng, normals.size());
        Json& a = normals[k];
        if (a.size() == 1) {
            // A one-dimensional normal can only be rescaled; flip it.
            a[0] = to_json(-read(a[0]));
            return idx("cell", c) + ": half space " + std::to_string(k) + " normal flipped";
        }
        // Shift an entry so the normal stops being parallel to the old one.
        RatVec old;
        for (const auto& x : a) old.push_back(read(x));
        for (std::size_t e = 0; e < old.size(); ++e) {
            RatVec moved = old;
            moved[e] += d;
            bool parallel = true;
            for (std::size_t i = 0; i < old.size(); ++i)
                for (std::size_t j = i + 1; j < old.size(); ++j)
                    if (old[i] * moved[j] != old[j] * moved[i]) parallel = false;
            if (!parallel) {
                a[e] = to_json(moved[e]);
                return idx("cell", c) + ": half space " + std::to_string(k) + " normal entry " + std::to_string(e) +
                       " shifted" + amount;
            }
        }
        a = to_json(scale(old, -1));
        return idx("cell", c) + ": half space " + std::to_string(k) + " normal flipped";
    }
    case Fault::DeleteCell: {
        const auto c = pick(rng, cells.size());
        cells.erase(c);
        return idx("cell", c) + " deleted";
    }
    case Fault::CopyCenter: {
        const auto c = pick(rng, copies.size());
        Json& center = copies[c]["center"];
        const auto e = pick(rng, center.size());
        shift(center[e], d);
        return idx("copy", c) + ": center entry " + std::to_string(e) + " shifted" + amount;
    }
    case Fault::CopyScale: {
        const auto c = pick(rng, copies.size());
        const Rat factor = sgn(d) > 0 ? Rat(1 + d) : Rat(1 / (1 - d));
        copies[c]["scale"] = to_json(read(copies[c]["scale"]) * factor);
        return idx("copy", c) + ": scale multiplied by " + to_string(factor);
    }
    case Fault::Residual:
        shift(sol["residual_measure"], d);
        return "residual measure shifted" + amount;
    case Fault::Direction: {
        // |lambda| > 1 keeps the largest gradient from landing back in E.
        static const std::array<long, 4> lambdas{2, 3, -2, -3};
        const long lambda = lambdas[pick(rng, lambdas.size())];
        Json& b = sol["b"];
        for (auto& x : b) x = to_json(read(x) * lambda);
        return "direction b multiplied by " + std::to_string(lambda);
    }
    case Fault::Domain: {
        Json& omega = sol["omega"];
        if (omega.contains("box")) {
            Json& high = omega["box"]["high"];
            const auto e = pick(rng, high.size());
            shift(high[e], abs(d));
            return "domain upper corner entry " + std::to_string(e) + " raised by " + to_string(abs(d));
        }
        Json& offsets = omega["halfspaces"]["offsets"];
        const auto k = pick(rng, offsets.size());
        shift(offsets[k], abs(d));
        return "domain half space " + std::to_string(k) + " offset raised by " + to_string(abs(d));
    }
    case Fault::BaseOffset: {
        Json& base = sol["base"];
        if (base.contains("box")) {
            Json& high = base["box"]["high"];
            const auto e = pick(rng, high.size());
            shift(high[e], abs(d));
            return "base upper corner entry " + std::to_string(e) + " raised by " + to_string(abs(d));
        }
        Json& offsets = base["halfspaces"]["offsets"];
        const auto k = pick(rng, offsets.size());
        shift(offsets[k], d);
        return "base half space " + std::to_string(k) + " offset shifted" + amount;
    }
    }
    return "no fault";
}

} // namespace inclusionkit
