#pragma once

#include <array>
#include <optional>
#include <string>

#include "binmat/gf2.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// T_k in fixed coordinates: H = span{e1..e_{3k-2}}, x = e_{3k-1}, y = e_{3k},
/// z = e_{3k+1}, ground E_k = E_{k-1} ∪ (x+E_{k-1}) ∪ (y+E_{k-1}) ∪ (z+E_{k-1})
/// ∪ {x+y+z}, starting from T_0 = ({e1}, dim 1).
struct TripodWitness {
    Matroid matroid;  // dimension 3k+1
    int order = 0;
    std::optional<Subspace> h_flat;            // the codim-3 flat, k >= 1
    std::optional<Subspace> f_flat;            // F_k, dim 2k+2, k >= 1
    std::optional<std::array<Vec, 3>> xyz;     // k >= 1
};

TripodWitness tripod(int k);

/// Five points that add to zero, spanning dimension 4, inside ambient dim t >= 4.
Matroid c5t(int t);

/// Points with last coordinate 1: the projective geometry minus a hyperplane.
Matroid affine_geometry(int n);

struct TripodLemmaRecord {
    int k = 0;
    bool dim_ok = false;    // matroid spans its 3k+1 ambient space
    bool c5_ok = false;     // E ∩ F_k is five points, sum zero, rank 4; rest of F_k misses E
    bool cover_ok = false;  // every point of F_k lies in E_k or E_k + E_k
    long long ground_size = 0;
    int f_dim = 0;
    std::string failed_bullet;           // empty when all pass
    std::optional<Vec> counterexample;   // offending point when a bullet fails
    bool all_ok() const { return dim_ok && c5_ok && cover_ok; }
};

/// Exhaustive check of the three tripod properties for order k >= 1.
/// Re-derives the ground set and F_k from the recursion rather than trusting
/// tripod()'s stored witness fields.
TripodLemmaRecord verify_tripod_lemma(int k);

}  // namespace binmat
