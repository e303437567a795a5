#include "binmat/ramsey.hpp"

#include <algorithm>

#include "binmat/errors.hpp"

namespace binmat {

std::optional<MonochromaticFlat> find_monochromatic_flat(const Coloring& col, int r) {
    if (r < 1 || r > col.n) throw input_error("monochromatic flat: r out of range");
    std::optional<MonochromaticFlat> best;
    for (int c = 0; c < col.colors; ++c) {
        PointSet s(col.n);
        s.set(0);
        for (Vec v = 1; v < (Vec(1) << col.n); ++v)
            if (col.at(v) == c) s.set(v);
        auto flat = find_subspace_in(s, r);
        if (flat && (!best || Subspace::basis_less(*flat, best->flat)))
            best = MonochromaticFlat{c, *flat};
    }
    return best;
}

namespace {

// Backtracking over point colors with forward flat pruning and canonical color
// numbering (a new color id may appear only right after all smaller ids).
struct FlatFreeSearch {
    int n, c, r;
    std::uint64_t budget;
    std::uint64_t& nodes;
    std::vector<std::vector<int>> flats_of_point;    // point -> flat ids
    std::vector<std::vector<Vec>> flat_points_list;  // flat id -> its points
    std::vector<int> assigned;                       // per flat: #points colored so far
    std::vector<int> first_color;                    // per flat: color of first point, or -1 mix
    std::vector<std::uint8_t> colors;                // per point (1-based)

    FlatFreeSearch(int n_, int c_, int r_, std::uint64_t budget_, std::uint64_t& nodes_)
        : n(n_), c(c_), r(r_), budget(budget_), nodes(nodes_) {
        std::size_t points = (std::size_t(1) << n) - 1;
        flats_of_point.resize(points + 1);
        for_each_subspace(n, r, [&](const Subspace& s) {
            int id = int(flat_points_list.size());
            std::vector<Vec> pts;
            s.for_each_element([&](Vec v) {
                if (v) pts.push_back(v);
            });
            for (Vec v : pts) flats_of_point[v].push_back(id);
            flat_points_list.push_back(std::move(pts));
        });
        assigned.assign(flat_points_list.size(), 0);
        first_color.assign(flat_points_list.size(), -2);  // -2 empty, -1 mixed
        colors.assign(points + 1, 0);
    }

    bool search(Vec v, int used_colors) {
        if (v >= (Vec(1) << n)) return true;
        int limit = std::min(c, used_colors + 1);
        for (int col = 0; col < limit; ++col) {
            if (++nodes > budget) throw budget_error("gr search: node budget exceeded");
            bool feasible = true;
            for (int id : flats_of_point[v]) {
                if (first_color[id] == -2 || first_color[id] == col) {
                    // would complete a monochromatic flat?
                    if (assigned[id] + 1 == int(flat_points_list[id].size()) &&
                        (first_color[id] == col || flat_points_list[id].size() == 1)) {
                        feasible = false;
                        break;
                    }
                }
            }
            if (feasible) {
                std::vector<std::pair<int, int>> undo;
                for (int id : flats_of_point[v]) {
                    undo.emplace_back(id, first_color[id]);
                    ++assigned[id];
                    if (first_color[id] == -2)
                        first_color[id] = col;
                    else if (first_color[id] != col)
                        first_color[id] = -1;
                }
                colors[v] = std::uint8_t(col);
                if (search(v + 1, std::max(used_colors, col + 1))) return true;
                for (auto [id, fc] : undo) {
                    --assigned[id];
                    first_color[id] = fc;
                }
            }
        }
        return false;
    }
};

}  // namespace

GrResult gr_search(int c, int r, int n_max, const GrOptions& opt) {
    if (c < 1 || r < 1 || n_max < 1) throw input_error("gr search: parameters must be positive");
    GrResult out;
    out.c = c;
    out.r = r;
    out.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        if (n < r) {
            // No dim-r flat exists at all; any coloring certifies.
            Coloring cert{n, c, std::vector<std::uint8_t>(std::size_t(1) << n, 0)};
            out.certificates.push_back(std::move(cert));
            continue;
        }
        FlatFreeSearch search(n, c, r, opt.node_budget, out.nodes);
        if (search.search(1, 0)) {
            out.certificates.push_back(Coloring{n, c, search.colors});
        } else {
            out.forced_n = n;
            return out;
        }
    }
    return out;
}

BoseBurtonRecord bose_burton_check(const Matroid& m, int t) {
    if (t < 0 || t > m.dim()) throw input_error("bose-burton: t out of range");
    BoseBurtonRecord rec;
    rec.t = t;
    rec.ground_size = static_cast<long long>(m.ground_size());
    rec.bound = (1ll << m.dim()) - (1ll << (m.dim() - t));
    if (t + 1 <= m.dim()) {
        PointSet s = m.ground();
        s.set(0);
        auto flat = find_subspace_in(s, t + 1);
        rec.contains_flat = flat.has_value();
        rec.flat_witness = flat;
    }
    if (!rec.contains_flat) {
        rec.bound_holds = rec.ground_size <= rec.bound;
        if (!rec.bound_holds)
            throw internal_error("bose-burton: flat-free ground set exceeds the size bound");
    }
    return rec;
}

}  // namespace binmat
