#include "binmat/pipeline.hpp"

#include <algorithm>
#include <set>

#include "binmat/constructions.hpp"
#include "binmat/errors.hpp"
#include "binmat/fourier.hpp"

namespace binmat {

TripodOrderResult max_tripod_order(const Matroid& m, int k_cap, std::uint64_t node_budget) {
    if (!m.ground().any()) throw input_error("tripod order: ground set is empty");
    int dim_cap = (m.dim() - 1) / 3;
    if (k_cap < 0 || k_cap > dim_cap) k_cap = dim_cap;

    TripodOrderResult out;
    std::optional<Embedding> current;
    for (int k = 0; k <= k_cap; ++k) {
        std::optional<Embedding> found;
        try {
            found = find_embedding(m, tripod(k).matroid, false, EmbedOptions{node_budget});
        } catch (const budget_error&) {
            out.definite = false;
            break;
        }
        if (!found) break;  // orders are nested, so the first failure is final
        current = found;
        out.k = k;
    }
    if (!current) {
        if (!out.definite) throw budget_error("tripod order: budget hit before any embedding");
        throw internal_error("tripod order: no order-0 embedding for nonempty ground");
    }
    out.embedding = current->basis_images;
    out.g1 = Subspace::span_of(m.dim(), current->basis_images);
    return out;
}

G2Coloring g2_coloring(const Matroid& m, const Subspace& g1) {
    G2Coloring out;
    out.g2 = complement_flat(g1);
    PointSet g1pts = flat_points(g1);
    out.g2.for_each_element([&](Vec v) {
        if (v == 0) return;
        ColorKey key;
        key.e = m.ground().test(v);
        // S = v + ((v + G1) ∩ E) = {g in G1 points : v + g in E}
        key.s = PointSet(m.dim());
        g1pts.for_each([&](Vec g) {
            if (m.ground().test(v ^ g)) key.s.set(g);
        });
        out.keys.emplace_back(v, std::move(key));
    });
    std::sort(out.keys.begin(), out.keys.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t distinct_key_count(const G2Coloring& coloring) {
    std::set<std::pair<bool, std::vector<std::uint64_t>>> seen;
    for (const auto& [v, key] : coloring.keys) seen.emplace(key.e, key.s.words());
    return seen.size();
}

PointSet extract_x(const G2Coloring& coloring, const Matroid& m, const Subspace& g1) {
    PointSet g1_ground = flat_points(g1) & m.ground();
    PointSet x(m.dim());
    for (const auto& [v, key] : coloring.keys) {
        if (key.e) continue;
        if (g1_ground.is_subset_of(key.s)) x.set(v);
    }
    return x;
}

bool verify_thirdpoint(const Matroid& m, const Subspace& g1, const PointSet& x) {
    (void)g1;
    return !sumset3_support(x).intersects(m.ground());
}

namespace {

Subspace lift_subspace(const Subspace& outer, const Subspace& inner) {
    // inner lives in outer's internal coordinates; rewrite it in ambient terms.
    Subspace out(outer.ambient());
    for (Vec b : inner.basis()) out.insert(outer.lift(b));
    return out;
}

ChiWitness finish(const Matroid& m, Subspace flat, std::vector<DescentStep> trace) {
    if (flat_points(flat).intersects(m.ground()))
        throw internal_error("pipeline: witness flat meets the ground set");
    ChiWitness w;
    w.flat = std::move(flat);
    w.chi_bound = m.dim() - w.flat.dim();
    w.trace = std::move(trace);
    return w;
}

// Exact fallback when the sumset support carries no usable flat at this scale:
// the largest flat inside the complement of E, i.e. the omega witness of M^c.
ChiWitness direct_witness(const Matroid& m, int t, std::vector<DescentStep> trace) {
    PointSet comp = m.ground().complemented();  // keeps 0
    auto flat = largest_subspace_in(comp);
    if (!flat) throw internal_error("pipeline: complement search found nothing");
    trace.push_back({t, m.dim(), -1, 0, 0, "direct", flat->dim()});
    return finish(m, *flat, std::move(trace));
}

}  // namespace

ChiWitness chi_bound_pipeline(const Matroid& m, int t, const PipelineConfig& config) {
    if (t < 1) throw input_error("pipeline: t must be at least 1");
    if (!is_triangle_free(m)) throw input_error("pipeline: matroid has a triangle");
    // for t above the ambient dimension no rank-t flat exists, so freeness is vacuous
    if (t <= m.dim() && !is_i1t_free(m, t))
        throw input_error("pipeline: matroid is not I_{1,t}-free");

    std::vector<DescentStep> trace;

    // Base: I_{1,1}-freeness forces an empty ground set, and the empty ground
    // set is witnessed by the whole space at any t.
    if (!m.ground().any()) {
        trace.push_back({t, m.dim(), -1, 0, 0, "base", m.dim()});
        return finish(m, Subspace::full(m.dim()), std::move(trace));
    }

    TripodOrderResult order = max_tripod_order(m, config.k_cap, config.node_budget);
    if (order.definite && 2 * order.k >= t)
        throw internal_error("pipeline: tripod order reaches t/2 despite freeness");

    G2Coloring coloring = g2_coloring(m, order.g1);
    PointSet x = extract_x(coloring, m, order.g1);

    if (!verify_thirdpoint(m, order.g1, x)) {
        if (order.definite)
            throw internal_error("pipeline: triple sum meets the ground set at maximal order");
        throw budget_error("pipeline: tripod order not certified and triple-sum check failed");
    }

    // N = (X, G2) in G2-internal coordinates.
    const Subspace& g2 = coloring.g2;
    PointSet x_int(g2.dim());
    x.for_each([&](Vec v) { x_int.set(g2.coords(v)); });
    long long x_size = static_cast<long long>(x_int.count());

    std::optional<Subspace> linear;
    std::optional<AffineFlat> affine;
    if (config.strategy == PipelineConfig::Strategy::regularity && x_int.any()) {
        Rat alpha(x_size, 1ll << g2.dim());
        KeyLemmaResult key = key_lemma_witness(x_int, alpha, std::min(config.max_codim, g2.dim()));
        if (!key.witness.verified)
            throw internal_error("pipeline: key lemma witness failed verification");
        if (key.witness.linear)
            linear = key.witness.flat.space;
        else
            affine = key.witness.flat;
    } else {
        PointSet support = sumset3_support(x_int);
        linear = largest_subspace_in(support);
        affine = largest_affine_in(support);
    }

    int linear_dim = linear ? linear->dim() : -1;
    int affine_dim = affine ? affine->dim() : -1;

    // A zero-dimensional flat carries no structure to descend on: the affine
    // case would recurse on the zero flat and return the trivial bound. Fall
    // back to the exact complement search instead, as for an empty support.
    if (linear_dim < 1 && affine_dim < 1) return direct_witness(m, t, std::move(trace));

    if (linear && linear_dim >= affine_dim) {
        // Terminal case: a linear flat inside X+X+X misses E outright.
        Subspace flat = lift_subspace(g2, *linear);
        trace.push_back({t, m.dim(), order.k, g2.dim(), x_size, "case2-linear", flat.dim()});
        return finish(m, flat, std::move(trace));
    }

    // Affine case: F' = closure of the affine flat, F'' = its hyperplane with
    // F' \ F'' equal to the affine part; the affine part misses E, so the
    // restriction to F'' is I_{1,t-1}-free and the descent recurses there.
    Subspace fpp_int = affine->space;
    Subspace fpp = lift_subspace(g2, fpp_int);
    Matroid sub = restrict_to_flat(m, fpp);
    if (t - 1 <= sub.dim() && !is_i1t_free(sub, t - 1))
        throw internal_error("pipeline: descent restriction is not I_{1,t-1}-free");
    trace.push_back({t, m.dim(), order.k, g2.dim(), x_size, "case1-affine", affine->dim()});

    PipelineConfig sub_config = config;
    ChiWitness inner = chi_bound_pipeline(sub, t - 1, sub_config);
    for (const DescentStep& step : inner.trace) trace.push_back(step);
    Subspace flat = lift_subspace(fpp, inner.flat);
    return finish(m, flat, std::move(trace));
}

}  // namespace binmat
