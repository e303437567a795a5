#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binmat/gf2.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// Assignment of a color id in [0, colors) to every nonzero vector of F_2^n.
struct Coloring {
    int n = 0;
    int colors = 1;
    std::vector<std::uint8_t> color_of;  // indexed by vector value; slot 0 unused

    std::uint8_t at(Vec v) const { return color_of[v]; }
};

struct MonochromaticFlat {
    int color = 0;
    Subspace flat;
};

/// Least-basis dim-r subspace whose nonzero points share one color, or none.
std::optional<MonochromaticFlat> find_monochromatic_flat(const Coloring& col, int r);

struct GrOptions {
    std::uint64_t node_budget = 50'000'000;
};

struct GrResult {
    int c = 0, r = 0, n_max = 0;
    /// Least n <= n_max such that every c-coloring of PG(n-1,2) has a
    /// monochromatic dim-r flat; empty when not forced within n_max.
    std::optional<int> forced_n;
    /// Flat-free certificate colorings for each n below forced_n (or up to
    /// n_max when no answer was found), indexed from n = 1.
    std::vector<Coloring> certificates;
    std::uint64_t nodes = 0;
};

/// Exhaustive search with monochromatic-flat forward pruning and canonical
/// color numbering. Throws budget_error when the node budget runs out.
GrResult gr_search(int c, int r, int n_max, const GrOptions& opt = {});

struct BoseBurtonRecord {
    int t = 0;
    bool contains_flat = false;            // E contains a (t+1)-dimensional flat
    std::optional<Subspace> flat_witness;
    long long ground_size = 0;
    long long bound = 0;                   // 2^n (1 - 2^-t)
    bool bound_holds = false;              // meaningful only when !contains_flat
};

/// Checks |E| <= 2^n (1 - 2^-t) whenever E has no (t+1)-dim flat. A violation
/// is impossible and raises internal_error.
BoseBurtonRecord bose_burton_check(const Matroid& m, int t);

}  // namespace binmat
