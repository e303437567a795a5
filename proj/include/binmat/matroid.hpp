#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binmat/gf2.hpp"

namespace binmat {

/// A simple binary matroid: the ambient geometry PG(n-1,2) plus a ground set
/// of nonzero vectors.
class Matroid {
public:
    Matroid() = default;
    Matroid(int n, PointSet ground);

    int dim() const { return n_; }
    const PointSet& ground() const { return ground_; }
    std::uint64_t ground_size() const { return ground_.count(); }

    Matroid complement() const;

private:
    int n_ = 0;
    PointSet ground_{0};
};

/// True iff no two distinct ground elements sum into the ground set.
bool is_triangle_free(const Matroid& m);

struct I1tResult {
    bool free;
    std::optional<Subspace> witness;  // a dim-t flat meeting the ground set exactly once
};

/// Searches per anchor e in E for a dim-t subspace containing e whose other
/// nonzero points all avoid E. Complete: a witness flat meets E in exactly one
/// element, so anchoring on that element loses nothing.
I1tResult i1t_witness(const Matroid& m, int t);
bool is_i1t_free(const Matroid& m, int t);

/// Dimension of the largest subgeometry contained in the ground set.
int omega(const Matroid& m);

/// n - omega(complement).
int critical_number(const Matroid& m);

struct EmbedOptions {
    std::uint64_t node_budget = 500'000'000;
};

struct Embedding {
    std::vector<Vec> basis_images;  // image of pattern's standard basis
    Vec map(Vec pattern_vec) const;
};

/// Injective linear map with ground points landing in E and (induced mode)
/// non-ground points landing outside E. Throws budget_error when the node
/// budget runs out before the search is decided.
std::optional<Embedding> find_embedding(const Matroid& m, const Matroid& pattern, bool induced,
                                        const EmbedOptions& opt = {});

bool induced_iso_exists(const Matroid& m, const Matroid& pattern, const EmbedOptions& opt = {});
bool restriction_embedding_exists(const Matroid& m, const Matroid& pattern,
                                  const EmbedOptions& opt = {});

/// The induced restriction (E ∩ F, F) rewritten in F's internal coordinates.
Matroid restrict_to_flat(const Matroid& m, const Subspace& f);

}  // namespace binmat
