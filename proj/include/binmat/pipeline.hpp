#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmat/gf2.hpp"
#include "binmat/matroid.hpp"
#include "binmat/regularity.hpp"

namespace binmat {

struct TripodOrderResult {
    int k = 0;
    Subspace g1;                  // image flat of the order-k embedding
    std::vector<Vec> embedding;   // basis images of the witnessing map
    bool definite = true;         // false when a larger order was cut off by budget
};

/// Largest k <= k_cap with a (not necessarily induced) order-k tripod
/// restriction, plus its image flat. Requires a nonempty ground set.
TripodOrderResult max_tripod_order(const Matroid& m, int k_cap,
                                   std::uint64_t node_budget = 500'000'000);

/// The (e, S) color of one complement point: e = membership of v in E,
/// S = v + ((v + G1 points) ∩ E), a subset of G1's points.
struct ColorKey {
    bool e = false;
    PointSet s;

    friend bool operator==(const ColorKey&, const ColorKey&) = default;
};

struct G2Coloring {
    Subspace g2;  // deterministic complement of G1
    std::vector<std::pair<Vec, ColorKey>> keys;  // one entry per nonzero point of G2, ascending
};

G2Coloring g2_coloring(const Matroid& m, const Subspace& g1);

std::size_t distinct_key_count(const G2Coloring& coloring);

/// X = the G2 points whose color satisfies (G1 ∩ E) \ S = ∅ and e = 0,
/// in ambient coordinates.
PointSet extract_x(const G2Coloring& coloring, const Matroid& m, const Subspace& g1);

/// (X+X+X) ∩ E = ∅. Under a certified-maximal tripod order a false answer is
/// impossible; callers treat it as an internal-consistency failure.
bool verify_thirdpoint(const Matroid& m, const Subspace& g1, const PointSet& x);

struct DescentStep {
    int t = 0;               // freeness parameter at this level
    int ambient_dim = 0;
    int k = -1;              // tripod order (-1 for base/direct steps)
    int g2_dim = 0;
    long long x_size = 0;
    std::string action;      // "base", "case1-affine", "case2-linear", "direct"
    int flat_dim = 0;        // dimension of the flat this step produced
};

struct ChiWitness {
    Subspace flat;    // ambient flat with flat_points ∩ E = ∅, re-verified
    int chi_bound = 0;  // n - dim(flat) >= critical number
    std::vector<DescentStep> trace;
};

struct PipelineConfig {
    enum class Strategy { search, regularity };
    Strategy strategy = Strategy::search;
    int k_cap = -1;               // default: dimension-limited
    std::uint64_t node_budget = 500'000'000;
    int max_codim = 12;           // refinement budget for the regularity strategy
};

/// Executable descent: maximal tripod order, complement coloring, X
/// extraction, triple-sum check, then either a linear flat (terminal) or an
/// affine flat (recurse on its hyperplane with t-1). Requires m triangle-free
/// and I_{1,t}-free. The returned flat is re-verified disjoint from E.
ChiWitness chi_bound_pipeline(const Matroid& m, int t, const PipelineConfig& config = {});

}  // namespace binmat
